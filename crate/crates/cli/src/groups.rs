use std::path::Path;

use hcc::groupring::{make_cyclic, make_elementary_abelian, make_product, parse_mult_table, OrderedGroup};
use hcc::{Error, Prime, Result};

/// Resolves `--group`: a path to a multiplication table, or a product of
/// factors `Zn` / `Zp^r` joined by `x`, e.g. `Z4`, `Z2^3`, `Z2xZ4`.
pub fn resolve(spec: &str) -> Result<OrderedGroup> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Inconsistent(format!("cannot read {spec}: {e}")))?;
        return parse_mult_table(&text);
    }
    let mut group: Option<OrderedGroup> = None;
    for factor in spec.split(['x', '*']) {
        let g = factor_group(factor.trim()).ok_or_else(|| {
            Error::Inconsistent(format!(
                "`{spec}` is neither a readable table file nor a group like Z4, Z2^3, Z2xZ4"
            ))
        })??;
        group = Some(match group {
            None => g,
            Some(acc) => make_product(&acc, &g)?,
        });
    }
    group.ok_or_else(|| Error::Inconsistent("empty group specification".into()))
}

fn factor_group(factor: &str) -> Option<Result<OrderedGroup>> {
    let body = factor.strip_prefix('Z').or_else(|| factor.strip_prefix('C'))?;
    let body = body.strip_prefix('_').unwrap_or(body);
    Some(match body.split_once('^') {
        Some((base, exp)) => {
            let (base, exp): (u64, usize) = (base.parse().ok()?, exp.parse().ok()?);
            Prime::new(base).and_then(|p| make_elementary_abelian(p, exp))
        }
        None => make_cyclic(body.parse().ok()?),
    })
}
