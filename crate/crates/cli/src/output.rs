use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// A rendered report plus whether it records a falsification.
pub struct Report {
    pub body: String,
    pub falsified: bool,
}

impl Report {
    pub fn ok(body: String) -> Self {
        Report { body, falsified: false }
    }
}

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// One tab-separated line per row, with a header.
pub fn table(header: &[&str], rows: impl IntoIterator<Item = Vec<Value>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(cell).collect::<Vec<_>>().join("\t"));
        out.push('\n');
    }
    out
}

/// `key<TAB>value` for each top-level field; nested values stay JSON.
pub fn fields(v: &Value) -> String {
    match v {
        Value::Object(map) => table(&["key", "value"], map.iter().map(|(k, x)| vec![Value::from(k.as_str()), x.clone()])),
        other => format!("{}\n", cell(other)),
    }
}
