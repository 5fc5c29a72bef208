//! Dense linear algebra over the prime field F_p.
//!
//! Vectors are rows and matrices act on the right (`v ↦ vM`), so every
//! kernel computed here is a left kernel.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of entries of any dense matrix or table.
pub const DEFAULT_MATRIX_CAP: usize = 1 << 22;

/// Current size cap; `HCC_MATRIX_CAP` overrides the default.
pub fn matrix_cap() -> usize {
    std::env::var("HCC_MATRIX_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_MATRIX_CAP)
}

pub(crate) fn check_cap(what: &'static str, requested: u128) -> Result<()> {
    let cap = matrix_cap();
    if requested > cap as u128 {
        return Err(Error::CapExceeded {
            what,
            requested,
            cap,
        });
    }
    Ok(())
}

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        self.pow(a, self.0 as u64 - 2)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0 as u64
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: Prime,
}

impl Fp {
    pub fn new(value: i64, p: Prime) -> Self {
        Fp {
            value: p.reduce(value),
            p,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Elementary matrices used to reach Smith normal form.
///
/// `Transvection { i, j, q }` is the identity plus `q` at (row `j`, column `i`).
/// Multiplying on the left adds `q` times row `i` to row `j`; multiplying on
/// the right adds `q` times column `j` to column `i`. `Swap { i, j }` is the
/// permutation matrix exchanging `i` and `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum ElementaryOp {
    Transvection { i: usize, j: usize, q: u32 },
    Swap { i: usize, j: usize },
}

impl ElementaryOp {
    /// The inverse elementary matrix.
    pub fn inverse(self, p: Prime) -> ElementaryOp {
        match self {
            ElementaryOp::Transvection { i, j, q } => ElementaryOp::Transvection { i, j, q: p.neg(q) },
            swap => swap,
        }
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: Prime,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: Prime) -> Result<Self> {
        check_cap("matrix", rows as u128 * cols as u128)?;
        Ok(FpMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, p: Prime) -> Result<Self> {
        let mut m = Self::zeros(n, n, p)?;
        for i in 0..n {
            m.data[i * n + i] = 1 % p.get();
        }
        Ok(m)
    }

    /// Build from residues already in `[0, p)` (entries are reduced anyway).
    pub fn from_vec(rows: usize, cols: usize, p: Prime, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        check_cap("matrix", rows as u128 * cols as u128)?;
        let data = data.into_iter().map(|x| x % p.get()).collect();
        Ok(FpMatrix { rows, cols, p, data })
    }

    /// Build from signed integer rows, reducing mod p. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows<R: AsRef<[i64]>>(p: Prime, cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols, p)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = p.reduce(x);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p.get();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut data = vec![0; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        FpMatrix {
            rows: self.cols,
            cols: self.rows,
            p: self.p,
            data,
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p.get() as u64;
        let mut out = FpMatrix::zeros(self.rows, other.cols, self.p)?;
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % p;
                }
            }
            for (j, &a) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = a as u32;
            }
        }
        Ok(out)
    }

    /// `v ↦ vM` for a row vector `v` of length `rows`.
    pub fn apply_row_vector(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let p = self.p.get() as u64;
        let mut out = vec![0u64; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = (*slot + a as u64 * self.get(i, j) as u64) % p;
            }
        }
        Ok(out.into_iter().map(|x| x as u32).collect())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.cols || self.p != other.p {
            return Err(Error::Dimension("vstack needs equal column counts and moduli".into()));
        }
        check_cap("matrix", (self.rows + other.rows) as u128 * self.cols as u128)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            p: self.p,
            data,
        })
    }

    /// Left-multiply by an elementary matrix (a row operation).
    pub fn apply_left(&mut self, op: ElementaryOp) {
        match op {
            ElementaryOp::Transvection { i, j, q } => {
                for c in 0..self.cols {
                    let v = self.p.add(self.get(j, c), self.p.mul(q, self.get(i, c)));
                    self.data[j * self.cols + c] = v;
                }
            }
            ElementaryOp::Swap { i, j } => {
                if i != j {
                    for c in 0..self.cols {
                        self.data.swap(i * self.cols + c, j * self.cols + c);
                    }
                }
            }
        }
    }

    /// Right-multiply by an elementary matrix (a column operation).
    pub fn apply_right(&mut self, op: ElementaryOp) {
        match op {
            ElementaryOp::Transvection { i, j, q } => {
                for r in 0..self.rows {
                    let v = self.p.add(self.get(r, i), self.p.mul(q, self.get(r, j)));
                    self.data[r * self.cols + i] = v;
                }
            }
            ElementaryOp::Swap { i, j } => {
                if i != j {
                    for r in 0..self.rows {
                        self.data.swap(r * self.cols + i, r * self.cols + j);
                    }
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_dim(&self) -> usize {
        kernel_dim(self)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Row-reduce a working copy; returns the matrix of nonzero echelon rows
/// (pivots normalized to 1, fully reduced).
pub fn row_basis(m: &FpMatrix) -> FpMatrix {
    let p = m.p;
    let cols = m.cols;
    let mut work = m.data.clone();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == m.rows {
            break;
        }
        let Some(pivot) = (rank..m.rows).find(|&r| work[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for k in 0..cols {
                work.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = p.inv(work[rank * cols + c]);
        for k in c..cols {
            work[rank * cols + k] = p.mul(work[rank * cols + k], inv);
        }
        for r in 0..m.rows {
            if r == rank {
                continue;
            }
            let factor = work[r * cols + c];
            if factor == 0 {
                continue;
            }
            let f = p.neg(factor);
            for k in c..cols {
                let v = work[rank * cols + k];
                if v != 0 {
                    work[r * cols + k] = p.add(work[r * cols + k], p.mul(f, v));
                }
            }
        }
        rank += 1;
    }
    work.truncate(rank * cols);
    FpMatrix {
        rows: rank,
        cols,
        p,
        data: work,
    }
}

/// F_p-rank by Gaussian elimination.
pub fn rank(m: &FpMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let p = m.p;
    let cols = m.cols;
    let mut work = m.data.clone();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == m.rows {
            break;
        }
        let Some(pivot) = (rank..m.rows).find(|&r| work[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for k in 0..cols {
                work.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = p.inv(work[rank * cols + c]);
        for r in rank + 1..m.rows {
            let factor = work[r * cols + c];
            if factor == 0 {
                continue;
            }
            let f = p.neg(p.mul(factor, inv));
            for k in c..cols {
                let v = work[rank * cols + k];
                if v != 0 {
                    work[r * cols + k] = p.add(work[r * cols + k], p.mul(f, v));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the left kernel `{v : vM = 0}`.
pub fn kernel_dim(m: &FpMatrix) -> usize {
    m.rows - rank(m)
}

/// Smith normal form over F_p together with the elementary operations that
/// produce it: `P_s ⋯ P_1 · M · Q_1 ⋯ Q_t = diag(D, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero diagonal entries of `D`, not normalized to 1.
    pub diagonal: Vec<Fp>,
    /// `P_1, …, P_s` in application order.
    pub left_ops: Vec<ElementaryOp>,
    /// `Q_1, …, Q_t` in application order.
    pub right_ops: Vec<ElementaryOp>,
    pub rank: usize,
}

impl SnfResult {
    /// Replay the recorded operations on `m`.
    pub fn replay(&self, m: &FpMatrix) -> FpMatrix {
        let mut out = m.clone();
        for &op in &self.left_ops {
            out.apply_left(op);
        }
        for &op in &self.right_ops {
            out.apply_right(op);
        }
        out
    }

    /// The accumulated left transform `P = P_s ⋯ P_1`.
    pub fn left_transform(&self, n: usize, p: Prime) -> Result<FpMatrix> {
        let mut out = FpMatrix::identity(n, p)?;
        for &op in &self.left_ops {
            out.apply_left(op);
        }
        Ok(out)
    }

    /// The accumulated right transform `Q = Q_1 ⋯ Q_t`.
    pub fn right_transform(&self, n: usize, p: Prime) -> Result<FpMatrix> {
        let mut out = FpMatrix::identity(n, p)?;
        for &op in &self.right_ops {
            out.apply_right(op);
        }
        Ok(out)
    }
}

/// Reduce to `diag(D, 0)` using only transvections and swaps.
///
/// Pivots are taken as the first nonzero entry of the trailing block in
/// column-major scan order, so outputs are deterministic.
pub fn smith_normal_form(m: &FpMatrix) -> SnfResult {
    let p = m.p;
    let mut a = m.clone();
    let mut left_ops = Vec::new();
    let mut right_ops = Vec::new();
    let mut diagonal = Vec::new();
    let (rows, cols) = (a.rows, a.cols);
    let mut t = 0usize;
    while t < rows.min(cols) {
        let pivot = (t..cols).find_map(|c| (t..rows).find(|&r| a.get(r, c) != 0).map(|r| (r, c)));
        let Some((pr, pc)) = pivot else { break };
        if pr != t {
            let op = ElementaryOp::Swap { i: t, j: pr };
            a.apply_left(op);
            left_ops.push(op);
        }
        if pc != t {
            let op = ElementaryOp::Swap { i: t, j: pc };
            a.apply_right(op);
            right_ops.push(op);
        }
        let d = a.get(t, t);
        let d_inv = p.inv(d);
        for r in t + 1..rows {
            let x = a.get(r, t);
            if x != 0 {
                let op = ElementaryOp::Transvection {
                    i: t,
                    j: r,
                    q: p.neg(p.mul(x, d_inv)),
                };
                a.apply_left(op);
                left_ops.push(op);
            }
        }
        for c in t + 1..cols {
            let x = a.get(t, c);
            if x != 0 {
                let op = ElementaryOp::Transvection {
                    i: c,
                    j: t,
                    q: p.neg(p.mul(x, d_inv)),
                };
                a.apply_right(op);
                right_ops.push(op);
            }
        }
        diagonal.push(Fp { value: d, p });
        t += 1;
    }
    SnfResult {
        rank: diagonal.len(),
        diagonal,
        left_ops,
        right_ops,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn torus_b() -> FpMatrix {
        FpMatrix::from_rows(
            p(2),
            8,
            &[
                [1, 0, 1, 0, 1, 1, 0, 0],
                [0, 1, 0, 1, 1, 1, 0, 0],
                [1, 0, 1, 0, 0, 0, 1, 1],
                [0, 1, 0, 1, 0, 0, 1, 1],
            ],
        )
        .unwrap()
    }

    /// Rank oracle that never eliminates: enumerate the whole row span and
    /// read the rank off its size q^rank. Only usable for a handful of rows.
    fn span_size_rank(m: &FpMatrix) -> usize {
        let q = m.modulus().get() as usize;
        let mut span = std::collections::HashSet::new();
        let n = m.rows();
        let total = q.pow(n as u32);
        for mut code in 0..total {
            let mut v = vec![0u32; m.cols()];
            for i in 0..n {
                let c = (code % q) as u32;
                code /= q;
                for (j, slot) in v.iter_mut().enumerate() {
                    *slot = m.modulus().add(*slot, m.modulus().mul(c, m.get(i, j)));
                }
            }
            span.insert(v);
        }
        // |span| = q^rank
        let mut r = 0;
        let mut s = 1usize;
        while s < span.len() {
            s *= q;
            r += 1;
        }
        r
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(91).is_err());
        assert_eq!(Prime::new(97).unwrap().get(), 97);
    }

    #[test]
    fn rank_examples() {
        let ones = FpMatrix::from_rows(p(2), 2, &[[1, 1], [1, 1]]).unwrap();
        assert_eq!(rank(&ones), 1);
        assert_eq!(rank(&torus_b()), 3);
        assert_eq!(span_size_rank(&torus_b()), 3);
        assert_eq!(rank(&FpMatrix::zeros(3, 5, p(5)).unwrap()), 0);
        assert_eq!(rank(&FpMatrix::zeros(0, 0, p(5)).unwrap()), 0);
    }

    #[test]
    fn kernel_dim_examples() {
        assert_eq!(kernel_dim(&torus_b()), 1);
        assert_eq!(kernel_dim(&FpMatrix::identity(4, p(3)).unwrap()), 0);
        assert_eq!(kernel_dim(&FpMatrix::zeros(2, 7, p(2)).unwrap()), 2);
    }

    #[test]
    fn snf_permutation_uses_one_row_swap() {
        let m = FpMatrix::from_rows(p(3), 2, &[[0, 1], [1, 0]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.left_ops, vec![ElementaryOp::Swap { i: 0, j: 1 }]);
        assert!(snf.right_ops.is_empty());
        let diag: Vec<u32> = snf.diagonal.iter().map(|d| d.value()).collect();
        assert_eq!(diag, vec![1, 1]);
    }

    #[test]
    fn snf_already_diagonal_needs_no_ops() {
        let m = FpMatrix::from_rows(p(3), 2, &[[2, 0], [0, 0]]).unwrap();
        let snf = smith_normal_form(&m);
        assert!(snf.left_ops.is_empty() && snf.right_ops.is_empty());
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.diagonal[0].value(), 2);
    }

    #[test]
    fn snf_two_transvections() {
        let m = FpMatrix::from_rows(p(2), 2, &[[1, 1], [1, 0]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.left_ops.len() + snf.right_ops.len(), 2);
        let out = snf.replay(&m);
        assert_eq!(out, FpMatrix::identity(2, p(2)).unwrap());
    }

    #[test]
    fn snf_does_not_normalize_diagonal() {
        let m = FpMatrix::from_rows(p(5), 2, &[[3, 1], [0, 4]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal[0].value(), 3);
        let out = snf.replay(&m);
        assert_eq!(out.get(0, 1), 0);
        assert_eq!(out.get(1, 0), 0);
        assert_eq!(out.get(0, 0), 3);
    }

    #[test]
    fn transforms_match_replay() {
        let m = torus_b();
        let snf = smith_normal_form(&m);
        let pm = snf.left_transform(4, p(2)).unwrap();
        let qm = snf.right_transform(8, p(2)).unwrap();
        let via_products = pm.mul(&m).unwrap().mul(&qm).unwrap();
        assert_eq!(via_products, snf.replay(&m));
    }

    #[test]
    fn cap_is_enforced() {
        let err = FpMatrix::zeros(1 << 12, 1 << 11, p(2)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn row_basis_is_reduced() {
        let b = row_basis(&torus_b());
        assert_eq!(b.rows(), 3);
        assert_eq!(rank(&b), 3);
    }
}
