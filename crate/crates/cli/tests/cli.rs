use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn hcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcc")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

#[test]
fn torus_cover() {
    let out = hcc(&["cover", "--pres", &data("torus.pres"), "--hom", &data("z2sq.hom"), "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["b"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["hrk"], 4);
    assert_eq!(v["verdict"]["holds"], true);
    assert_eq!(v["verdict"]["equality"], true);
    assert_eq!(v["verdict"]["case"], "c");
}

#[test]
fn projective_plane_is_case_b() {
    let out = hcc(&["cover", "--pres", &data("rp2.pres"), "--hom", &data("z2.hom"), "--p", "2"]);
    let v = json(&out);
    assert_eq!(v["verdict"]["base_betti"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["verdict"]["cover_betti"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["verdict"]["case"], "b");
}

#[test]
fn table_group_cover_and_permutation() {
    let table = data("z4.table");
    let base = ["cover", "--pres", &data("klein.pres"), "--hom", &data("klein_z4.hom"), "--p", "2"];
    let with_table: Vec<&str> = base.iter().copied().chain(["--group", table.as_str()]).collect();
    let a = json(&hcc(&with_table));
    assert_eq!(a["b"], serde_json::json!([1, 2, 1]));
    assert_eq!(a["verdict"], Value::Null);
    let shuffled: Vec<&str> = with_table.iter().copied().chain(["--permute-seed", "7"]).collect();
    assert_eq!(json(&hcc(&shuffled))["b"], a["b"]);
    let named: Vec<&str> = base.iter().copied().chain(["--group", "Z4"]).collect();
    assert_eq!(json(&hcc(&named))["b"], a["b"]);
}

#[test]
fn omega_table_is_tsv() {
    let out = hcc(&["omega", "--p", "3", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let omegas: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(omegas, ["1", "2", "3", "2", "1"]);
    assert!(text.starts_with("p\tr\tk\tomega\tpi\n"));
}

#[test]
fn omega_json_switches_to_strings_for_big_values() {
    let v = json(&hcc(&["omega", "--p", "2", "--r", "60", "--format", "json"]));
    assert_eq!(v["omega"][1], 60);
    assert_eq!(v["omega"][30], "118264581564861424");
}

#[test]
fn inequality_suite_reports_claims() {
    let v = json(&hcc(&["omega", "--p", "2", "--inequalities", "--r-max", "12", "--format", "json"]));
    let claims = v["claims"].as_array().unwrap();
    let balanced = claims.iter().find(|c| c["name"] == "balanced-central-binomial").unwrap();
    assert_eq!(balanced["passed"], false);
    let argmax = claims.iter().find(|c| c["name"] == "pi-argmax").unwrap();
    assert_eq!(argmax["passed"], true);
}

#[test]
fn bounds_example() {
    let v = json(&hcc(&["bounds", "--b1", "2", "--d", "1", "--p", "2", "--r", "2"]));
    assert_eq!(v["best"], serde_json::json!({"k": 1, "value": 2}));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["p", "target", "order", "b1_G", "d", "lambdas", "bounds", "best", "actual", "tight", "verdict"]
    );
}

#[test]
fn bounds_against_an_actual_cover() {
    let out = hcc(&[
        "bounds", "--pres", &data("torus.pres"), "--hom", &data("z2sq.hom"), "--p", "2", "--actual",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["actual"], 2);
    assert_eq!(v["verdict"], "tight");
}

#[test]
fn a_contradicted_bound_exits_two() {
    let out = hcc(&["bounds", "--b1", "2", "--d", "1", "--p", "2", "--r", "2", "--actual-b1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "violated");
}

#[test]
fn negative_deficiency_is_accepted() {
    let v = json(&hcc(&["bounds", "--b1", "3", "--d", "-1", "--p", "3", "--r", "1"]));
    assert_eq!(v["d"], -1);
}

#[test]
fn growth_iteration() {
    let v = json(&hcc(&["iterate", "--pres", &data("f2.pres"), "--p", "2", "--steps", "2"]));
    let b1: Vec<u64> = v["stages"].as_array().unwrap().iter().map(|s| s["b1"].as_u64().unwrap()).collect();
    assert_eq!(b1, [2, 5, 129]);
}

#[test]
fn present_and_ring() {
    let v = json(&hcc(&["present", "--pres", &data("klein.pres"), "--p", "3"]));
    assert_eq!(v["summary"]["b1"], 1);
    assert_eq!(v["deficiency"], 1);
    let v = json(&hcc(&["ring", "--p", "2", "--group", "Z2^3"]));
    assert_eq!(v["lambdas"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(v["nilpotent"], true);
}

#[test]
fn manifold_verdict() {
    let v = json(&hcc(&["manifold", "--b1", "4", "--r", "4"]));
    assert_eq!(v["bound"], 9);
    assert_eq!(v["certification"], "method");
}

#[test]
fn input_errors_exit_one() {
    let out = hcc(&["present", "--pres", &data("broken.pres"), "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = hcc(&["cover", "--pres", &data("rp2.pres"), "--hom", &data("z3.hom"), "--p", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("relator 0"));

    let out = hcc(&["cover", "--pres", &data("torus.pres"), "--hom", &data("unknown_gen.hom"), "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`c`"));

    assert_eq!(hcc(&["omega", "--p", "4", "--r", "2"]).status.code(), Some(1));
    assert_eq!(hcc(&["nonsense"]).status.code(), Some(1));
    assert_eq!(hcc(&["present", "--pres", "/nonexistent", "--p", "2"]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(hcc(&["--help"]).status.code(), Some(0));
}

#[test]
fn size_cap_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_hcc"))
        .args(["cover", "--pres", &data("torus.pres"), "--hom", &data("z2sq.hom"), "--p", "2"])
        .env("HCC_MATRIX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("HCC_MATRIX_CAP"));
}

#[test]
fn output_is_deterministic() {
    let args = ["cover", "--pres", &data("torus.pres"), "--hom", &data("z2sq.hom"), "--p", "2"];
    assert_eq!(hcc(&args).stdout, hcc(&args).stdout);
    let args = ["selfcheck", "--cases", "3", "--format", "tsv"];
    assert_eq!(hcc(&args).stdout, hcc(&args).stdout);
}

#[test]
fn selfcheck_passes() {
    let out = hcc(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["falsified"], false);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
