//! Serialization of arbitrary-precision integers: plain JSON numbers while
//! `|v| <= 2^53`, decimal strings beyond that so that consumers parsing
//! numbers as doubles lose nothing.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::fpexact::FpMatrix;

const SAFE: i64 = 1 << 53;

pub fn bigint_value(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) if (-SAFE..=SAFE).contains(&x) => serde_json::Value::from(x),
        _ => serde_json::Value::String(v.to_string()),
    }
}

pub fn biguint_value(v: &BigUint) -> serde_json::Value {
    bigint_value(&BigInt::from(v.clone()))
}

pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    bigint_value(v).serialize(s)
}

pub fn biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    biguint_value(v).serialize(s)
}

pub fn bigint_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => bigint(v, s),
        None => s.serialize_none(),
    }
}

pub fn biguint_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => biguint(v, s),
        None => s.serialize_none(),
    }
}

pub fn bigint_seq<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&bigint_value(x))?;
    }
    seq.end()
}

pub fn biguint_seq<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&biguint_value(x))?;
    }
    seq.end()
}

/// A matrix as a list of rows.
pub fn matrix<S: Serializer>(m: &FpMatrix, s: S) -> Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn switches_to_strings_above_two_pow_53() {
        assert_eq!(bigint_value(&BigInt::from(SAFE)), serde_json::json!(9007199254740992i64));
        assert_eq!(bigint_value(&BigInt::from(-SAFE)), serde_json::json!(-9007199254740992i64));
        assert_eq!(bigint_value(&BigInt::from(SAFE + 1)), serde_json::json!("9007199254740993"));
        let huge = BigUint::from(1u8) << 80;
        assert_eq!(biguint_value(&huge), serde_json::json!("1208925819614629174706176"));
    }
}
