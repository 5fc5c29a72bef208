//! Coefficients `|Ω^k_{p,r}|` of `(1 + x + ⋯ + x^{p-1})^r`.
//!
//! Three independent evaluations are provided (repeated convolution, an
//! inclusion–exclusion sum and a sum over restricted partitions), together
//! with the quantity `Π^k_{p,r}` and the inequality family that the lower
//! bounds depend on.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpexact::Prime;

/// Largest admissible degree `r(p-1)` of a table.
pub const MAX_DEGREE: usize = 10_000;

/// Largest `m` accepted by the partition formula; the number of partitions
/// grows too quickly beyond this.
pub const MAX_PARTITION_M: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaTable {
    p: u32,
    r: usize,
    #[serde(serialize_with = "crate::json::biguint_seq")]
    coeffs: Vec<BigUint>,
}

impl OmegaTable {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `r(p-1)`, the top degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `|Ω^k_{p,r}|`, zero outside `0..=r(p-1)`.
    pub fn get(&self, k: i64) -> BigUint {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `Π^k_{p,r}` for every `k` in `0..=r(p-1)`.
    pub fn pi_values(&self) -> Vec<BigInt> {
        let rm1 = BigInt::from(self.r as i64 - 1);
        let mut tail = BigInt::zero();
        let mut out = vec![BigInt::zero(); self.coeffs.len()];
        for k in (0..self.coeffs.len()).rev() {
            let c = BigInt::from(self.coeffs[k].clone());
            out[k] = &rm1 * &c - &tail;
            tail += c;
        }
        out
    }
}

fn check_degree(p: Prime, r: usize) -> Result<usize> {
    let deg = (p.get() as u128 - 1) * r as u128;
    if deg > MAX_DEGREE as u128 {
        return Err(Error::CapExceeded {
            what: "omega table degree r(p-1)",
            requested: deg,
            cap: MAX_DEGREE,
        });
    }
    Ok(deg as usize)
}

/// Multiplies by `1 + x + ⋯ + x^{p-1}` `r` times, using a sliding window.
pub fn omega_by_convolution(p: Prime, r: usize) -> Result<OmegaTable> {
    check_degree(p, r)?;
    if p.get() == 2 {
        let mut coeffs = Vec::with_capacity(r + 1);
        let mut c = BigUint::one();
        for k in 0..=r {
            coeffs.push(c.clone());
            c = c * (r - k) / (k + 1);
        }
        return Ok(OmegaTable { p: 2, r, coeffs });
    }
    let w = p.get() as usize;
    let mut coeffs = vec![BigUint::one()];
    for _ in 0..r {
        let len = coeffs.len() + w - 1;
        let mut next = Vec::with_capacity(len);
        let mut window = BigUint::zero();
        for m in 0..len {
            if m < coeffs.len() {
                window += &coeffs[m];
            }
            if m >= w {
                window -= &coeffs[m - w];
            }
            next.push(window.clone());
        }
        coeffs = next;
    }
    Ok(OmegaTable {
        p: p.get(),
        r,
        coeffs,
    })
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `Σ_j (-1)^j C(r,j) C(k - pj + r - 1, k - pj)`; zero for `k` out of range.
pub fn omega_by_alternating_sum(p: Prime, r: usize, k: i64) -> BigUint {
    let p64 = p.get() as i64;
    let r64 = r as i64;
    if k < 0 || k > r64 * (p64 - 1) {
        return BigUint::zero();
    }
    if r == 0 {
        return BigUint::one();
    }
    let mut acc = BigInt::zero();
    let mut j = 0i64;
    while j <= r64 && k - p64 * j >= 0 {
        let s = (k - p64 * j) as u64;
        let term = BigInt::from(binomial(r as u64, j as u64) * binomial(s + r as u64 - 1, s));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        j += 1;
    }
    acc.to_biguint().expect("alternating sum is a count")
}

/// A partition `(n_1^{l_1}, …, n_s^{l_s})` with `n_1 < ⋯ < n_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<(u32, u32)>,
}

impl Partition {
    pub fn new(mut parts: Vec<(u32, u32)>) -> Result<Self> {
        parts.sort_unstable();
        for w in parts.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Inconsistent(format!("repeated part {}", w[0].0)));
            }
        }
        if parts.iter().any(|&(n, l)| n == 0 || l == 0) {
            return Err(Error::Inconsistent("parts and multiplicities must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// `(n_i, l_i)` pairs in increasing order of `n_i`.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// The number partitioned, `Σ l_i n_i`.
    pub fn m(&self) -> u64 {
        self.parts.iter().map(|&(n, l)| n as u64 * l as u64).sum()
    }

    /// `|α| = Σ l_i`.
    pub fn len(&self) -> u64 {
        self.parts.iter().map(|&(_, l)| l as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `N_α = Π (n_i!)^{l_i}`.
    pub fn n_alpha(&self) -> BigUint {
        self.parts
            .iter()
            .map(|&(n, l)| factorial(n as u64).pow(l))
            .product()
    }

    /// `L_α = Π l_i!`.
    pub fn l_alpha(&self) -> BigUint {
        self.parts.iter().map(|&(_, l)| factorial(l as u64)).product()
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

type PartitionMemo = HashMap<(u32, u32), Vec<Vec<(u32, u32)>>>;

/// Partitions of `rem` with all parts at most `max_part`, largest part first.
fn partitions_desc(rem: u32, max_part: u32, memo: &mut PartitionMemo) -> Vec<Vec<(u32, u32)>> {
    if rem == 0 {
        return vec![Vec::new()];
    }
    if max_part == 0 {
        return Vec::new();
    }
    if let Some(hit) = memo.get(&(rem, max_part)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for n in (1..=max_part.min(rem)).rev() {
        for l in 1..=rem / n {
            for mut tail in partitions_desc(rem - n * l, n - 1, memo) {
                tail.insert(0, (n, l));
                out.push(tail);
            }
        }
    }
    memo.insert((rem, max_part), out.clone());
    out
}

/// All partitions of `m` into parts no larger than `max_part`, in
/// lexicographic order of their part sequences `(n_1, …, n_s)`.
pub fn partitions(m: usize, max_part: u32) -> Result<Vec<Partition>> {
    if m > MAX_PARTITION_M {
        return Err(Error::OutOfRange(format!(
            "partition enumeration limited to m <= {MAX_PARTITION_M}, got {m}"
        )));
    }
    let mut memo = PartitionMemo::new();
    let mut out: Vec<Partition> = partitions_desc(m as u32, max_part, &mut memo)
        .into_iter()
        .map(|mut parts| {
            parts.reverse();
            Partition { parts }
        })
        .collect();
    out.sort_by(|a, b| {
        let ka: Vec<u32> = a.parts.iter().map(|x| x.0).collect();
        let kb: Vec<u32> = b.parts.iter().map(|x| x.0).collect();
        ka.cmp(&kb).then_with(|| a.parts.cmp(&b.parts))
    });
    Ok(out)
}

/// `Σ_{α ∈ Θ_{m,p}} r!/(r-|α|)! · 1/L_α`, valid for `1 <= m <= r`.
pub fn omega_by_partitions(p: Prime, r: usize, m: usize) -> Result<BigUint> {
    if m == 0 || m > r {
        return Err(Error::OutOfRange(format!(
            "partition formula needs 1 <= m <= r, got m = {m}, r = {r}"
        )));
    }
    let mut acc = BigUint::zero();
    for alpha in partitions(m, p.get() - 1)? {
        let len = alpha.len();
        let falling: BigUint = (0..len).map(|i| BigUint::from(r as u64 - i)).product();
        acc += falling / alpha.l_alpha();
    }
    Ok(acc)
}

/// `Π^k_{p,r} = (r-1)|Ω^k_{p,r}| - Σ_{i>k} |Ω^i_{p,r}|`.
pub fn pi_value(p: Prime, r: usize, k: usize) -> Result<BigInt> {
    let table = omega_by_convolution(p, r)?;
    if k > table.degree() {
        return Err(Error::OutOfRange(format!(
            "k = {k} exceeds r(p-1) = {}",
            table.degree()
        )));
    }
    Ok(table.pi_values().swap_remove(k))
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn ibinom(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// One instance of an inequality `lhs >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityRow {
    pub name: String,
    pub param: &'static str,
    pub value: u64,
    #[serde(serialize_with = "crate::json::bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::json::bigint")]
    pub rhs: BigInt,
    pub holds: bool,
    pub equality: bool,
}

impl InequalityRow {
    fn new(name: impl Into<String>, param: &'static str, value: u64, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs >= rhs;
        let equality = lhs == rhs;
        InequalityRow {
            name: name.into(),
            param,
            value,
            lhs,
            rhs,
            holds,
            equality,
        }
    }
}

/// A stated pattern over a family of rows, compared with what was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub r_max: usize,
    pub t_max: usize,
    pub primes: Vec<u32>,
    pub rows: Vec<InequalityRow>,
    pub claims: Vec<ClaimCheck>,
}

impl InequalityReport {
    pub fn rows_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a InequalityRow> + 'a {
        self.rows.iter().filter(move |row| row.name == name)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimCheck> {
        self.claims.iter().find(|c| c.name == name)
    }
}

fn values_where(rows: &[&InequalityRow], pred: impl Fn(&InequalityRow) -> bool) -> Vec<u64> {
    rows.iter().filter(|r| pred(r)).map(|r| r.value).collect()
}

fn pattern_claim(
    name: &str,
    statement: &str,
    rows: &[&InequalityRow],
    expect_holds: impl Fn(u64) -> bool,
    expect_equal: impl Fn(u64) -> Option<bool>,
) -> ClaimCheck {
    let bad_holds = values_where(rows, |r| r.holds != expect_holds(r.value));
    let bad_eq = values_where(rows, |r| expect_equal(r.value).is_some_and(|e| e != r.equality));
    let passed = bad_holds.is_empty() && bad_eq.is_empty();
    let detail = if passed {
        format!("{} instances as stated", rows.len())
    } else {
        format!(
            "truth value differs at {:?}; equality differs at {:?}; holds at {:?}; equality at {:?}",
            bad_holds,
            bad_eq,
            values_where(rows, |r| r.holds),
            values_where(rows, |r| r.equality)
        )
    };
    ClaimCheck {
        name: name.into(),
        statement: statement.into(),
        passed,
        detail,
    }
}

/// Evaluates the inequality family for `r <= r_max` (and `t <= r_max / 2`)
/// and compares the truth/equality pattern of each with the stated one.
pub fn check_inequality_suite(r_max: usize, p_list: &[Prime]) -> Result<InequalityReport> {
    if r_max == 0 {
        return Err(Error::OutOfRange("r_max must be at least 1".into()));
    }
    let t_max = r_max / 2;
    let mut rows = Vec::new();

    for t in 0..=t_max as u64 {
        rows.push(InequalityRow::new(
            "odd-central-binomial",
            "t",
            t,
            BigInt::from(2 * t + 1) * ibinom(2 * t + 1, t + 1),
            pow2(2 * t + 1) - 1,
        ));
    }
    // (2t - 1/2) C(2t,t) >= 2^{2t} - 1, doubled to stay integral.
    for t in 1..=t_max as u64 {
        rows.push(InequalityRow::new(
            "even-central-binomial",
            "t",
            t,
            BigInt::from(4 * t - 1) * ibinom(2 * t, t),
            pow2(2 * t + 1) - 2,
        ));
    }
    let two = Prime::new(2)?;
    for r in 1..=r_max as u64 {
        let central = ibinom(r, r / 2);
        rows.push(InequalityRow::new(
            "balanced-central-binomial",
            "r",
            r,
            BigInt::from(r) * &central,
            BigInt::from(3) * pow2(r - 1) - 2,
        ));
        let k = r.div_ceil(2) as usize;
        rows.push(InequalityRow::new(
            "pi-middle",
            "r",
            r,
            pi_value(two, r as usize, k)?,
            pow2(r - 1) - 1,
        ));
        let upper: BigInt = (r.div_ceil(2)..=r).map(|i| ibinom(r, i)).sum();
        rows.push(InequalityRow::new(
            "pi-middle-binomial",
            "r",
            r,
            BigInt::from(r) * &central,
            pow2(r - 1) + upper - 1,
        ));
    }

    let mut claims = Vec::new();
    let collect = |name: &str| rows.iter().filter(|r| r.name == name).collect::<Vec<_>>();
    claims.push(pattern_claim(
        "odd-central-binomial",
        "(2t+1) C(2t+1,t+1) >= 2^(2t+1) - 1, equality only at t = 0",
        &collect("odd-central-binomial"),
        |_| true,
        |t| Some(t == 0),
    ));
    claims.push(pattern_claim(
        "even-central-binomial",
        "(2t-1/2) C(2t,t) >= 2^(2t) - 1 for t >= 1, equality only at t = 1",
        &collect("even-central-binomial"),
        |_| true,
        |t| Some(t == 1),
    ));
    claims.push(pattern_claim(
        "balanced-central-binomial",
        "r C(r,[r/2]) >= 3*2^(r-1) - 2 holds if and only if r >= 4",
        &collect("balanced-central-binomial"),
        |r| r >= 4,
        |_| None,
    ));
    claims.push(pattern_claim(
        "pi-middle",
        "Pi^{[(r+1)/2]}_{2,r} >= 2^(r-1) - 1, equality only at r in {1,2}",
        &collect("pi-middle"),
        |_| true,
        |r| Some(r <= 2),
    ));
    claims.push(pattern_claim(
        "pi-middle-binomial",
        "r C(r,[r/2]) >= 2^(r-1) + sum_{i>=[(r+1)/2]} C(r,i) - 1, equality only at r in {1,2}",
        &collect("pi-middle-binomial"),
        |_| true,
        |r| Some(r <= 2),
    ));

    // The first maximiser of k -> Pi^k_{2,r} is [(r+1)/2].
    let mut off = Vec::new();
    for r in 1..=r_max {
        let pis = omega_by_convolution(two, r)?.pi_values();
        if first_argmax(&pis) != r.div_ceil(2) {
            off.push(r);
        }
    }
    claims.push(ClaimCheck {
        name: "pi-argmax".into(),
        statement: "k -> Pi^k_{2,r} attains its maximum at k = [(r+1)/2]".into(),
        passed: off.is_empty(),
        detail: if off.is_empty() {
            format!("r = 1..={r_max}")
        } else {
            format!("first maximiser differs at r = {off:?}")
        },
    });

    // Pi^{r(p-1)-j}_{p,r} >= Pi^{r-j}_{2,r} for 0 <= j <= [(r+1)/2].
    for &p in p_list {
        let mut violations = Vec::new();
        let mut count = 0usize;
        for r in 1..=r_max {
            if (p.get() as usize - 1) * r > MAX_DEGREE {
                break;
            }
            let pp = omega_by_convolution(p, r)?.pi_values();
            let p2 = omega_by_convolution(two, r)?.pi_values();
            let top = r * (p.get() as usize - 1);
            for j in 0..=r.div_ceil(2) {
                let lhs = pp[top - j].clone();
                let rhs = p2[r - j].clone();
                count += 1;
                if lhs < rhs {
                    violations.push((r, j));
                }
                rows.push(InequalityRow::new(format!("pi-dominance/p={}", p.get()), "r", r as u64, lhs, rhs));
            }
        }
        claims.push(ClaimCheck {
            name: format!("pi-dominance/p={}", p.get()),
            statement: "Pi^{r(p-1)-j}_{p,r} >= Pi^{r-j}_{2,r} for 0 <= j <= [(r+1)/2]".into(),
            passed: violations.is_empty(),
            detail: if violations.is_empty() {
                format!("{count} instances")
            } else {
                format!("violated at (r, j) = {violations:?}")
            },
        });
    }

    Ok(InequalityReport {
        r_max,
        t_max,
        primes: p_list.iter().map(|p| p.get()).collect(),
        rows,
        claims,
    })
}

/// Index of the first maximum.
pub fn first_argmax(values: &[BigInt]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn as_u64(t: &OmegaTable) -> Vec<u64> {
        t.coeffs().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    #[test]
    fn single_factor_is_all_ones() {
        for p in [2, 3, 5, 7] {
            assert_eq!(as_u64(&omega_by_convolution(pr(p), 1).unwrap()), vec![1; p as usize]);
        }
    }

    #[test]
    fn two_factors_are_a_tent() {
        for p in [2u64, 3, 5, 7, 11] {
            let t = as_u64(&omega_by_convolution(pr(p), 2).unwrap());
            for (m, v) in t.iter().enumerate() {
                let m = m as u64;
                let expect = if m < p { m + 1 } else { 2 * p - m - 1 };
                assert_eq!(*v, expect, "p={p} m={m}");
            }
        }
        assert_eq!(as_u64(&omega_by_convolution(pr(3), 2).unwrap()), vec![1, 2, 3, 2, 1]);
    }

    #[test]
    fn p_two_is_binomial() {
        for r in 0..20 {
            let t = omega_by_convolution(pr(2), r).unwrap();
            for k in 0..=r {
                assert_eq!(t.get(k as i64), binomial(r as u64, k as u64));
                assert_eq!(t.get(k as i64), omega_by_alternating_sum(pr(2), r, k as i64));
            }
        }
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(omega_by_alternating_sum(pr(3), 2, 2), BigUint::from(3u32));
        assert_eq!(omega_by_alternating_sum(pr(2), 4, 2), BigUint::from(6u32));
        let t = omega_by_convolution(pr(5), 3).unwrap();
        assert_eq!(omega_by_alternating_sum(pr(5), 3, 6), t.get(6));
        assert_eq!(t.get(6), BigUint::from(19u32));
        assert!(omega_by_alternating_sum(pr(5), 3, 13).is_zero());
        assert!(omega_by_alternating_sum(pr(5), 3, -1).is_zero());
    }

    #[test]
    fn partition_examples() {
        assert_eq!(omega_by_partitions(pr(2), 5, 3).unwrap(), BigUint::from(10u32));
        assert_eq!(omega_by_partitions(pr(3), 3, 2).unwrap(), BigUint::from(6u32));
        for p in [2, 3, 5, 7] {
            for r in 1..6 {
                assert_eq!(omega_by_partitions(pr(p), r, 1).unwrap(), BigUint::from(r));
            }
        }
        assert!(omega_by_partitions(pr(3), 3, 0).is_err());
        assert!(omega_by_partitions(pr(3), 3, 4).is_err());
    }

    #[test]
    fn partitions_are_ordered_and_restricted() {
        let ps = partitions(4, 2).unwrap();
        let shapes: Vec<_> = ps.iter().map(|a| a.parts().to_vec()).collect();
        assert_eq!(shapes, vec![vec![(1, 4)], vec![(1, 2), (2, 1)], vec![(2, 2)]]);
        for a in partitions(9, 4).unwrap() {
            assert_eq!(a.m(), 9);
            assert!(a.parts().iter().all(|&(n, _)| n <= 4));
            assert!(a.parts().windows(2).all(|w| w[0].0 < w[1].0));
        }
        assert_eq!(partitions(10, 10).unwrap().len(), 42);
        assert!(partitions(MAX_PARTITION_M + 1, 2).is_err());
    }

    #[test]
    fn partition_weights() {
        let a = Partition::new(vec![(2, 3), (1, 2)]).unwrap();
        assert_eq!(a.m(), 8);
        assert_eq!(a.len(), 5);
        assert_eq!(a.n_alpha(), BigUint::from(8u32));
        assert_eq!(a.l_alpha(), BigUint::from(12u32));
        assert!(Partition::new(vec![(1, 1), (1, 2)]).is_err());
    }

    #[test]
    fn degree_cap() {
        assert_eq!(omega_by_convolution(pr(2), MAX_DEGREE).unwrap().degree(), MAX_DEGREE);
        assert_eq!(omega_by_convolution(pr(101), 100).unwrap().degree(), MAX_DEGREE);
        assert!(omega_by_convolution(pr(101), 101).is_err());
        assert!(matches!(
            omega_by_convolution(pr(3), MAX_DEGREE),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pi_values_match_definition() {
        let t = omega_by_convolution(pr(3), 4).unwrap();
        let pis = t.pi_values();
        for k in 0..=t.degree() {
            let tail: BigUint = (k + 1..=t.degree()).map(|i| t.get(i as i64)).sum();
            let expect = BigInt::from(3) * BigInt::from(t.get(k as i64)) - BigInt::from(tail);
            assert_eq!(pis[k], expect);
            assert_eq!(pi_value(pr(3), 4, k).unwrap(), expect);
        }
        assert!(pi_value(pr(3), 4, 9).is_err());
    }

    #[test]
    fn claim_two_tie_at_r_two() {
        let pis = omega_by_convolution(pr(2), 2).unwrap().pi_values();
        // k = 1 and k = 2 both give 1.
        assert_eq!(pis[1], pis[2]);
        assert_eq!(first_argmax(&pis), 1);
        for r in (1..40).filter(|&r| r != 2) {
            let pis = omega_by_convolution(pr(2), r).unwrap().pi_values();
            let k = r.div_ceil(2);
            let maxima = pis.iter().filter(|v| **v == pis[k]).count();
            assert_eq!(first_argmax(&pis), k, "r={r}");
            assert_eq!(maxima, 1, "r={r}");
        }
    }

    #[test]
    fn inequality_spot_values() {
        let report = check_inequality_suite(4, &[pr(3)]).unwrap();
        let r3: Vec<_> = report.rows_named("balanced-central-binomial").collect();
        assert_eq!(r3[2].lhs, BigInt::from(9));
        assert_eq!(r3[2].rhs, BigInt::from(10));
        assert!(!r3[2].holds);
        assert_eq!(r3[3].lhs, BigInt::from(24));
        assert_eq!(r3[3].rhs, BigInt::from(22));
        assert!(r3[3].holds);
        let t0 = report.rows_named("odd-central-binomial").next().unwrap();
        assert!(t0.equality && t0.lhs == BigInt::from(1));
    }
}
