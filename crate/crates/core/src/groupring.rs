//! Finite ordered groups, the group ring `F_p[H]` and the filtration of its
//! augmentation ideal.
//!
//! An [`OrderedGroup`] is a multiplication table whose element indices are
//! the total order: index 0 is the least element. Group-ring elements are
//! coefficient vectors in that order.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpexact::{self, check_cap, Fp, FpMatrix, Prime};

/// Largest order accepted from a text multiplication table. Associativity is
/// checked exhaustively, which is cubic in the order.
pub const MAX_TABLE_ORDER: usize = 512;

struct GroupData {
    label: String,
    size: usize,
    mult: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    hash: u64,
}

/// A finite group together with a total order on its elements.
#[derive(Clone)]
pub struct OrderedGroup(Arc<GroupData>);

impl OrderedGroup {
    /// Validate a multiplication table (`mult[a * size + b] = a·b`).
    pub fn from_table(label: impl Into<String>, size: usize, mult: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        check_cap("multiplication table", size as u128 * size as u128)?;
        if mult.len() != size * size {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                mult.len(),
                size * size
            )));
        }
        if let Some(&bad) = mult.iter().find(|&&x| x >= size) {
            return Err(Error::InvalidGroup(format!("entry {bad} is not an element index")));
        }
        let at = |a: usize, b: usize| mult[a * size + b];
        let identity = (0..size)
            .find(|&e| (0..size).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut seen = vec![false; size];
        for a in 0..size {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..size {
                let x = at(a, b);
                if seen[x] {
                    return Err(Error::InvalidGroup(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..size {
                let x = at(b, a);
                if seen[x] {
                    return Err(Error::InvalidGroup(format!("column {a} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = at(a, b);
                for c in 0..size {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})"
                        )));
                    }
                }
            }
        }
        let inverse: Vec<u32> = (0..size)
            .map(|a| (0..size).find(|&b| at(a, b) == identity).expect("latin square") as u32)
            .collect();
        let mult: Vec<u32> = mult.into_iter().map(|x| x as u32).collect();
        let mut hasher = DefaultHasher::new();
        size.hash(&mut hasher);
        mult.hash(&mut hasher);
        Ok(OrderedGroup(Arc::new(GroupData {
            label: label.into(),
            size,
            hash: hasher.finish(),
            mult,
            identity,
            inverse,
        })))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mult[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.0.identity
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.0.inverse[a] as usize
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Hash of the multiplication table.
    pub fn table_hash(&self) -> u64 {
        self.0.hash
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size())
            .map(|a| (0..self.size()).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Same group and same order.
    pub fn same_as(&self, other: &OrderedGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.size == other.0.size && self.0.mult == other.0.mult)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = self.identity();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.size()];
        member[self.identity()] = true;
        let mut stack = vec![self.identity()];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        member
    }

    /// A generating set chosen greedily in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = self.subgroup_generated(&gens);
        for x in 0..self.size() {
            if !member[x] {
                gens.push(x);
                member = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// `Some(r)` when this is `(Z_p)^r` (the trivial group counts as r = 0).
    pub fn elementary_abelian_rank(&self, p: Prime) -> Option<usize> {
        if !self.is_abelian() {
            return None;
        }
        let p = p.get() as usize;
        if (0..self.size()).any(|a| a != self.identity() && self.element_order(a) != p) {
            return None;
        }
        let mut n = self.size();
        let mut r = 0;
        while n > 1 {
            if !n.is_multiple_of(p) {
                return None;
            }
            n /= p;
            r += 1;
        }
        Some(r)
    }

    /// Relabel elements: old element `x` gets index `perm[x]`. The result is
    /// the same abstract group with a different total order.
    pub fn reordered(&self, perm: &[usize]) -> Result<OrderedGroup> {
        let n = self.size();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidGroup("reordering is not a permutation".into()));
        }
        let mut mult = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        OrderedGroup::from_table(format!("{} (reordered)", self.label()), n, mult)
    }
}

impl fmt::Debug for OrderedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGroup({}, order {})", self.label(), self.size())
    }
}

pub fn make_cyclic(n: usize) -> Result<OrderedGroup> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    check_cap("multiplication table", n as u128 * n as u128)?;
    let mult = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    OrderedGroup::from_table(format!("Z_{n}"), n, mult)
}

/// Direct product with lexicographic order: `(a, b)` has index `a·|B| + b`.
pub fn make_product(a: &OrderedGroup, b: &OrderedGroup) -> Result<OrderedGroup> {
    let (na, nb) = (a.size(), b.size());
    let n = na
        .checked_mul(nb)
        .ok_or_else(|| Error::InvalidGroup("product order overflows".into()))?;
    check_cap("multiplication table", n as u128 * n as u128)?;
    let mut mult = vec![0usize; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mult[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    OrderedGroup::from_table(format!("{} x {}", a.label(), b.label()), n, mult)
}

/// Coordinates `(c_1, …, c_r)` of all elements of `(Z_p)^r` in the order
/// used by [`make_elementary_abelian`]: by coordinate sum, then by
/// descending lexicographic order of the tuple. For p = 2 this is
/// `0 < e_1 < e_2 < ⋯ < e_r < e_1+e_2 < e_1+e_3 < ⋯`.
pub fn elementary_abelian_elements(p: Prime, r: usize) -> Result<Vec<Vec<u32>>> {
    let pp = p.get() as u128;
    let size = pp
        .checked_pow(r as u32)
        .ok_or_else(|| Error::CapExceeded {
            what: "elementary abelian group",
            requested: u128::MAX,
            cap: fpexact::matrix_cap(),
        })?;
    check_cap("multiplication table", size.saturating_mul(size))?;
    let size = size as usize;
    let mut elems: Vec<Vec<u32>> = (0..size)
        .map(|mut code| {
            let mut v = vec![0u32; r];
            for slot in v.iter_mut().rev() {
                *slot = (code % p.get() as usize) as u32;
                code /= p.get() as usize;
            }
            v
        })
        .collect();
    elems.sort_by(|x, y| {
        let sx: u32 = x.iter().sum();
        let sy: u32 = y.iter().sum();
        sx.cmp(&sy).then_with(|| y.cmp(x))
    });
    Ok(elems)
}

pub fn make_elementary_abelian(p: Prime, r: usize) -> Result<OrderedGroup> {
    if r == 0 {
        return Err(Error::OutOfRange("elementary abelian rank must be at least 1".into()));
    }
    let elems = elementary_abelian_elements(p, r)?;
    let index: HashMap<&[u32], usize> = elems.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let n = elems.len();
    let mut mult = vec![0usize; n * n];
    let mut sum = vec![0u32; r];
    for (a, x) in elems.iter().enumerate() {
        for (b, y) in elems.iter().enumerate() {
            for k in 0..r {
                sum[k] = p.add(x[k], y[k]);
            }
            mult[a * n + b] = index[sum.as_slice()];
        }
    }
    let label = if r == 1 {
        format!("Z_{p}")
    } else {
        format!("(Z_{p})^{r}")
    };
    OrderedGroup::from_table(label, n, mult)
}

/// Index of the tuple `coords` in [`make_elementary_abelian`]`(p, coords.len())`.
pub fn elementary_abelian_index(p: Prime, coords: &[u32]) -> Result<usize> {
    if let Some(&c) = coords.iter().find(|&&c| c >= p.get()) {
        return Err(Error::OutOfRange(format!("coordinate {c} is not in [0, {p})")));
    }
    let elems = elementary_abelian_elements(p, coords.len())?;
    Ok(elems.iter().position(|v| v.as_slice() == coords).expect("all tuples enumerated"))
}

/// Parse the text table format: `order N` followed by `N` rows of `N`
/// whitespace-separated indices, identity at index 0. `#` starts a comment.
pub fn parse_mult_table(text: &str) -> Result<OrderedGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, message: String| Error::Syntax {
        line,
        column: 1,
        message,
    };
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty table".into()))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("order") {
        return Err(syntax(hline, "expected `order N`".into()));
    }
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| syntax(hline, "expected a positive integer after `order`".into()))?;
    if words.next().is_some() {
        return Err(syntax(hline, "trailing tokens after the order".into()));
    }
    if n == 0 || n > MAX_TABLE_ORDER {
        return Err(syntax(hline, format!("order must be in 1..={MAX_TABLE_ORDER}")));
    }
    let mut mult = Vec::with_capacity(n * n);
    for row in 0..n {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| syntax(hline, format!("missing row {row}")))?;
        let before = mult.len();
        for w in line.split_whitespace() {
            let x: usize = w
                .parse()
                .map_err(|_| syntax(lno, format!("`{w}` is not an index")))?;
            mult.push(x);
        }
        if mult.len() - before != n {
            return Err(syntax(lno, format!("row {row} has {} entries, expected {n}", mult.len() - before)));
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(syntax(lno, "extra rows after the table".into()));
    }
    let g = OrderedGroup::from_table(format!("table group of order {n}"), n, mult)?;
    if g.identity() != 0 {
        return Err(Error::InvalidGroup(format!(
            "identity must be index 0, found it at {}",
            g.identity()
        )));
    }
    Ok(g)
}

/// An element `Σ l_h δ_h` of `F_p[H]`.
#[derive(Clone)]
pub struct GroupRingElement {
    group: OrderedGroup,
    p: Prime,
    coeffs: Vec<u32>,
}

impl GroupRingElement {
    pub fn zero(group: &OrderedGroup, p: Prime) -> Self {
        GroupRingElement {
            group: group.clone(),
            p,
            coeffs: vec![0; group.size()],
        }
    }

    /// The basis element `δ_h`.
    pub fn delta(group: &OrderedGroup, p: Prime, h: usize) -> Self {
        let mut v = Self::zero(group, p);
        v.coeffs[h] = 1 % p.get();
        v
    }

    /// `-δ_e + δ_h`.
    pub fn augmentation_generator(group: &OrderedGroup, p: Prime, h: usize) -> Self {
        let mut v = Self::delta(group, p, h);
        let e = group.identity();
        v.coeffs[e] = p.sub(v.coeffs[e], 1);
        v
    }

    pub fn from_coeffs(group: &OrderedGroup, p: Prime, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != group.size() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.size()
            )));
        }
        Ok(GroupRingElement {
            group: group.clone(),
            p,
            coeffs: coeffs.into_iter().map(|c| c % p.get()).collect(),
        })
    }

    pub fn group(&self) -> &OrderedGroup {
        &self.group
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.p.add(a, b))
            .collect();
        Ok(GroupRingElement {
            group: self.group.clone(),
            p: self.p,
            coeffs,
        })
    }

    pub fn scale(&self, c: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.p.mul(a, c % self.p.get())).collect();
        GroupRingElement {
            group: self.group.clone(),
            p: self.p,
            coeffs,
        }
    }

    pub fn augmentation(&self) -> Fp {
        let s = self.coeffs.iter().fold(0u32, |acc, &c| self.p.add(acc, c));
        Fp::new(s as i64, self.p)
    }

    /// Balanced means the augmentation vanishes.
    pub fn is_balanced(&self) -> bool {
        self.augmentation().is_zero()
    }
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.group.same_as(&other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in F_{}[{}]", self.coeffs, self.p, self.group.label())
    }
}

/// Convolution `(Σ k_g δ_g) ∗ (Σ l_h δ_h) = Σ k_g l_h δ_{gh}`.
pub fn ring_mul(u: &GroupRingElement, v: &GroupRingElement) -> Result<GroupRingElement> {
    u.check_compatible(v)?;
    Ok(GroupRingElement {
        group: u.group.clone(),
        p: u.p,
        coeffs: convolve(&u.group, u.p, &u.coeffs, &v.coeffs),
    })
}

pub(crate) fn convolve(group: &OrderedGroup, p: Prime, u: &[u32], v: &[u32]) -> Vec<u32> {
    let n = group.size();
    let m = p.get() as u64;
    let mut acc = vec![0u64; n];
    for (g, &kg) in u.iter().enumerate() {
        if kg == 0 {
            continue;
        }
        for (h, &lh) in v.iter().enumerate() {
            if lh == 0 {
                continue;
            }
            let gh = group.mul(g, h);
            acc[gh] = (acc[gh] + kg as u64 * lh as u64) % m;
        }
    }
    acc.into_iter().map(|x| x as u32).collect()
}

/// Dimensions of the powers `Δ^k` of the augmentation ideal and their jumps
/// `λ^k = dim Δ^k − dim Δ^{k+1}`.
#[derive(Clone, Serialize)]
pub struct FiltrationProfile {
    pub p: Prime,
    #[serde(rename = "group", serialize_with = "serialize_group_label")]
    pub group: OrderedGroup,
    /// `dim Δ^k` for `k = 0..=last`, where `last` is the stabilization index
    /// (or `k_max` if the computation was truncated first).
    pub delta_dims: Vec<usize>,
    /// `λ^k` for `k = 0..last`.
    pub lambdas: Vec<usize>,
    pub nilpotent: bool,
    /// First `k` with `Δ^k = Δ^{k+1}`; `None` if `k_max` was reached first.
    pub stabilization_k: Option<usize>,
    #[serde(skip)]
    bases: Arc<Vec<FpMatrix>>,
}

fn serialize_group_label<S: serde::Serializer>(g: &OrderedGroup, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(g.label())
}

impl fmt::Debug for FiltrationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiltrationProfile")
            .field("p", &self.p)
            .field("group", &self.group)
            .field("delta_dims", &self.delta_dims)
            .field("lambdas", &self.lambdas)
            .field("nilpotent", &self.nilpotent)
            .field("stabilization_k", &self.stabilization_k)
            .finish()
    }
}

impl FiltrationProfile {
    /// Row-reduced basis of `Δ^k` (rows are coefficient vectors), for
    /// `k ≤ delta_dims.len() - 1`.
    pub fn basis(&self, k: usize) -> Option<&FpMatrix> {
        self.bases.get(k)
    }

    /// `dim Δ^k`, extended past stabilization by the stable value.
    pub fn delta_dim(&self, k: usize) -> Option<usize> {
        match self.delta_dims.get(k) {
            Some(&d) => Some(d),
            None if self.stabilization_k.is_some() => self.delta_dims.last().copied(),
            None => None,
        }
    }

    /// Whether `v ∈ Δ^k`, decided by checking that appending `v` to the
    /// basis does not raise the rank.
    pub fn contains(&self, k: usize, v: &GroupRingElement) -> Result<bool> {
        if v.modulus() != self.p || !v.group().same_as(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let k = match self.stabilization_k {
            Some(s) => k.min(s),
            None => k,
        };
        let basis = self
            .basis(k)
            .ok_or_else(|| Error::OutOfRange(format!("Δ^{k} was not computed")))?;
        if v.is_zero() {
            return Ok(true);
        }
        let row = FpMatrix::from_vec(1, self.group.size(), self.p, v.coeffs().to_vec())?;
        let stacked = basis.vstack(&row)?;
        Ok(fpexact::rank(&stacked) == basis.rows())
    }
}

struct FiltrationCache {
    bases: Vec<FpMatrix>,
    stabilized: bool,
}

type CacheSlot = (OrderedGroup, Arc<Mutex<FiltrationCache>>);
type Cache = Mutex<HashMap<(u32, u64), Vec<CacheSlot>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// Keyed by the table hash; the table itself is compared to rule out collisions.
fn cache_entry(p: Prime, h: &OrderedGroup) -> Result<Arc<Mutex<FiltrationCache>>> {
    let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
    let bucket = map.entry((p.get(), h.table_hash())).or_default();
    if let Some((_, entry)) = bucket.iter().find(|(g, _)| g.same_as(h)) {
        return Ok(entry.clone());
    }
    let entry = Arc::new(Mutex::new(FiltrationCache {
        bases: vec![FpMatrix::identity(h.size(), p)?],
        stabilized: false,
    }));
    bucket.push((h.clone(), entry.clone()));
    Ok(entry)
}

/// Right-multiply each basis row by `-δ_e + δ_s` for every generator `s` and
/// row-reduce. Because `Δ^k` is a two-sided ideal and `Δ` is generated by
/// `{-δ_e + δ_s}` over a generating set, this spans `Δ^{k+1}`.
fn next_power(h: &OrderedGroup, p: Prime, basis: &FpMatrix, gens: &[usize]) -> Result<FpMatrix> {
    let n = h.size();
    let rows = basis.rows() * gens.len();
    let mut data = Vec::with_capacity(rows * n);
    for i in 0..basis.rows() {
        let b = basis.row(i);
        for &s in gens {
            let mut out = vec![0u32; n];
            for (g, &c) in b.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let gs = h.mul(g, s);
                out[gs] = p.add(out[gs], c);
                out[g] = p.sub(out[g], c);
            }
            data.extend(out);
        }
    }
    let span = FpMatrix::from_vec(rows, n, p, data)?;
    Ok(fpexact::row_basis(&span))
}

/// Compute `dim Δ^k` for `k = 0, 1, …` until the filtration stabilizes or
/// `k_max` steps have been taken. Results are cached per `(p, group)`.
pub fn filtration_profile(p: Prime, h: &OrderedGroup, k_max: usize) -> Result<FiltrationProfile> {
    if k_max == 0 {
        return Err(Error::OutOfRange("k_max must be at least 1".into()));
    }
    let entry = cache_entry(p, h)?;
    let mut state = entry.lock().unwrap_or_else(|e| e.into_inner());
    let gens = h.generating_set();
    while !state.stabilized && state.bases.len() <= k_max {
        let last = state.bases.last().expect("Δ^0 present");
        let next = if state.bases.len() == 1 {
            // Δ^1 directly: {-δ_e + δ_h : h ≠ e}
            next_power(h, p, last, &(0..h.size()).collect::<Vec<_>>())?
        } else {
            next_power(h, p, last, &gens)?
        };
        if next.rows() == last.rows() {
            state.stabilized = true;
        } else {
            state.bases.push(next);
        }
    }
    if state.bases.last().is_some_and(|b| b.rows() == 0) {
        state.stabilized = true;
    }
    // bases[k] = Δ^k; when stabilized, Δ^{len-1} = Δ^{len}.
    let available = state.bases.len();
    let (count, stabilization_k) = if state.stabilized && available <= k_max + 1 {
        (available, Some(available - 1))
    } else {
        (available.min(k_max + 1), None)
    };
    let bases: Vec<FpMatrix> = state.bases[..count].to_vec();
    drop(state);
    let delta_dims: Vec<usize> = bases.iter().map(|b| b.rows()).collect();
    let lambdas = delta_dims.windows(2).map(|w| w[0] - w[1]).collect();
    let nilpotent = delta_dims.last() == Some(&0);
    Ok(FiltrationProfile {
        p,
        group: h.clone(),
        delta_dims,
        lambdas,
        nilpotent,
        stabilization_k,
        bases: Arc::new(bases),
    })
}

/// Filtration profile with the default `k_max = |H|`.
pub fn filtration_profile_default(p: Prime, h: &OrderedGroup) -> Result<FiltrationProfile> {
    filtration_profile(p, h, h.size().max(1))
}

/// The `|H| × |H|` equivariant matrix whose row `g` is `δ_g ∗ seed`.
pub fn equivariant_matrix(seed: &GroupRingElement) -> Result<FpMatrix> {
    let h = seed.group();
    let n = h.size();
    let mut m = FpMatrix::zeros(n, n, seed.modulus())?;
    for g in 0..n {
        for (x, &c) in seed.coeffs().iter().enumerate() {
            if c != 0 {
                m.set(g, h.mul(g, x), c);
            }
        }
    }
    Ok(m)
}
