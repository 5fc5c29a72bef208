//! Lower bounds on `b_1(N; F_p)` for a normal subgroup `N` with finite
//! quotient `H`, and the verdicts built on them.
//!
//! For a group with a presentation of deficiency `d` and every `k`,
//!
//! ```text
//! b_1(N) >= 1 + b_1(G)·λ^k + d·Σ_{j<k} λ^j - |H|
//! ```
//!
//! where `λ^j = dim Δ^j/Δ^{j+1}` for the augmentation ideal `Δ` of `F_p[H]`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::covers::Homomorphism;
use crate::error::{Error, Result};
use crate::fpexact::{smith_normal_form, FpMatrix, Prime};
use crate::groupring::FiltrationProfile;
use crate::omega::{binomial, omega_by_convolution};
use crate::presentations::{complex_summary, reidemeister_schreier, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KBound {
    pub k: usize,
    #[serde(serialize_with = "crate::json::bigint")]
    pub value: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVerdict {
    /// No actual value to compare with.
    Unchecked,
    /// `actual >= best`.
    Sound,
    /// `actual == best`.
    Tight,
    /// `actual < best`: the bound is contradicted.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub p: u32,
    pub target: String,
    #[serde(serialize_with = "crate::json::bigint")]
    pub order: BigInt,
    #[serde(rename = "b1_G")]
    pub b1_g: u64,
    /// Deficiency of the witness presentation.
    pub d: i64,
    #[serde(serialize_with = "crate::json::bigint_seq")]
    pub lambdas: Vec<BigInt>,
    pub bounds: Vec<KBound>,
    pub best: KBound,
    pub actual: Option<u64>,
    pub tight: Option<bool>,
    pub verdict: BoundVerdict,
}

impl BoundReport {
    pub fn per_k(&self) -> Vec<BigInt> {
        self.bounds.iter().map(|b| b.value.clone()).collect()
    }

    /// Attaches a computed `b_1(N)` and classifies it against the bound.
    pub fn with_actual(mut self, actual: u64) -> Self {
        let a = BigInt::from(actual);
        self.actual = Some(actual);
        self.tight = Some(a == self.best.value);
        self.verdict = if a < self.best.value {
            BoundVerdict::Violated
        } else if a == self.best.value {
            BoundVerdict::Tight
        } else {
            BoundVerdict::Sound
        };
        self
    }
}

/// The bound for every `k < lambdas.len()`; ties for the best go to the
/// smallest `k`.
pub fn bound_from_lambdas(p: Prime, target: &str, order: BigInt, b1_g: u64, d: i64, lambdas: &[BigInt]) -> Result<BoundReport> {
    if (b1_g as i128) < d as i128 {
        return Err(Error::Inconsistent(format!(
            "b1(G; F_p) = {b1_g} is smaller than the witness deficiency {d}"
        )));
    }
    if lambdas.is_empty() {
        return Err(Error::Inconsistent("empty filtration profile".into()));
    }
    let b1 = BigInt::from(b1_g);
    let dd = BigInt::from(d);
    let mut prefix = BigInt::zero();
    let mut bounds = Vec::with_capacity(lambdas.len());
    for (k, lam) in lambdas.iter().enumerate() {
        let value = BigInt::one() + &b1 * lam + &dd * &prefix - &order;
        bounds.push(KBound { k, value });
        prefix += lam;
    }
    let mut best = bounds[0].clone();
    for b in &bounds[1..] {
        if b.value > best.value {
            best = b.clone();
        }
    }
    Ok(BoundReport {
        p: p.get(),
        target: target.to_string(),
        order,
        b1_g,
        d,
        lambdas: lambdas.to_vec(),
        bounds,
        best,
        actual: None,
        tight: None,
        verdict: BoundVerdict::Unchecked,
    })
}

pub fn bound_general(b1_g: u64, d: i64, profile: &FiltrationProfile) -> Result<BoundReport> {
    let lambdas: Vec<BigInt> = profile.lambdas.iter().map(|&l| BigInt::from(l)).collect();
    bound_from_lambdas(
        profile.p,
        profile.group.label(),
        BigInt::from(profile.group.size()),
        b1_g,
        d,
        &lambdas,
    )
}

/// `λ^k((Z_p)^r) = |Ω^k_{p,r}|`, so no group ring computation is needed.
pub fn bound_elementary_abelian(b1_g: u64, d: i64, p: Prime, r: usize) -> Result<BoundReport> {
    let table = omega_by_convolution(p, r)?;
    let lambdas: Vec<BigInt> = table.coeffs().iter().cloned().map(BigInt::from).collect();
    let order = BigInt::from(p.get()).pow(r as u32);
    let label = if r == 1 { format!("Z_{p}") } else { format!("(Z_{p})^{r}") };
    bound_from_lambdas(p, &label, order, b1_g, d, &lambdas)
}

/// `1 + b·C(r,k) + d·Σ_{j<k} C(r,j) - 2^r`, the `p = 2` specialization.
pub fn binomial_bound(b1_g: u64, d: i64, r: usize, k: usize) -> BigInt {
    let partial: BigUint = (0..k).map(|j| binomial(r as u64, j as u64)).sum();
    BigInt::one() + BigInt::from(b1_g) * BigInt::from(binomial(r as u64, k as u64)) + BigInt::from(d) * BigInt::from(partial)
        - (BigInt::one() << r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    /// The balanced-presentation bound alone gives `b_1(M) >= 2^{r-1} - 1`.
    Method,
    /// The bound falls short; `hrk >= 2^r` rests on the known result for `r <= 3`.
    ExternalCitation,
}

/// `(b_0, b_1, b_2, b_3)` of `Q` and of `M` in an equality case.
pub type ManifoldProfile = ([usize; 4], [usize; 4]);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldVerdict {
    pub r: usize,
    #[serde(rename = "b1_Q")]
    pub b1_q: u64,
    /// `1 + b_1(Q)·C(r, [r/2]) - 2^r`.
    #[serde(serialize_with = "crate::json::bigint")]
    pub bound: BigInt,
    /// `2^{r-1} - 1`, what `b_1(M)` must reach for `hrk >= 2^r`.
    #[serde(serialize_with = "crate::json::bigint")]
    pub required: BigInt,
    /// `r·C(r, [r/2]) >= 3·2^{r-1} - 2`.
    pub balanced_inequality_holds: bool,
    pub certification: Certification,
    /// Betti profiles of `Q` and `M` compatible with `hrk(M) = 2^r`.
    pub equality_profile: Option<ManifoldProfile>,
}

/// Closed connected 3-manifolds `M` with a free `(Z_2)^r` action and orbit
/// space `Q` with `b_1(Q; F_2) = b1_q`.
pub fn verdict_3manifold_z2(b1_q: u64, r: usize) -> Result<ManifoldVerdict> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    if b1_q < r as u64 {
        return Err(Error::Inconsistent(format!(
            "b1(Q; F_2) = {b1_q} cannot be below r = {r} when Q has a (Z_2)^r cover"
        )));
    }
    let central = BigInt::from(binomial(r as u64, (r / 2) as u64));
    let two_r = BigInt::one() << r;
    let bound = BigInt::one() + BigInt::from(b1_q) * &central - &two_r;
    let required = (BigInt::one() << (r - 1)) - 1;
    let balanced_inequality_holds = BigInt::from(r) * &central >= BigInt::from(3) * (BigInt::one() << (r - 1)) - 2;
    let certification = if bound >= required {
        Certification::Method
    } else {
        Certification::ExternalCitation
    };
    Ok(ManifoldVerdict {
        r,
        b1_q,
        bound,
        required,
        balanced_inequality_holds,
        certification,
        equality_profile: manifold_equality_profile(r),
    })
}

/// RP³/S³, S¹×RP²/S¹×S², T³/T³.
pub fn manifold_equality_profile(r: usize) -> Option<ManifoldProfile> {
    match r {
        1 => Some(([1, 1, 1, 1], [1, 0, 0, 1])),
        2 => Some(([1, 2, 2, 1], [1, 1, 1, 1])),
        3 => Some(([1, 3, 3, 1], [1, 3, 3, 1])),
        _ => None,
    }
}

/// Equality profiles for free `(Z_p)^r` actions, `p` odd, on manifolds whose
/// orbit space has fundamental group of deficiency at least 1: `Q` and `M`
/// share the profile of `S¹` (r = 1) or of the torus (r = 2).
pub fn deficiency_one_equality_profile(p: u32, r: usize) -> Option<[usize; 3]> {
    match (p, r) {
        (2, _) => None,
        (_, 1) => Some([1, 1, 0]),
        (_, 2) => Some([1, 2, 1]),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthStage {
    pub stage: usize,
    /// Index of this stage in the previous one (1 for the start).
    #[serde(serialize_with = "crate::json::biguint")]
    pub index: BigUint,
    pub generators: usize,
    pub relators: usize,
    pub deficiency: i64,
    pub b1: usize,
    /// `2^{b_1(previous) - 1}`; absent for the starting group.
    #[serde(serialize_with = "crate::json::biguint_opt")]
    pub lower_bound: Option<BigUint>,
    /// `1 + index·(rank - 1)` when the previous stage is a free group.
    #[serde(serialize_with = "crate::json::biguint_opt")]
    pub nielsen_schreier: Option<BigUint>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub p: u32,
    pub stages: Vec<GrowthStage>,
    /// Why the iteration ended before the requested number of steps.
    pub stopped: Option<String>,
}

impl GrowthReport {
    pub fn b1_sequence(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.b1).collect()
    }
}

/// Images of the generators in `H_1(G; F_p) ≅ (Z_p)^{b_1}`: with
/// `P A Q = diag(D, 0)`, generator `j` goes to rows `rank..n` of column `j`
/// of `P`.
pub fn abelianization_images(pres: &Presentation, p: Prime) -> Result<Vec<Vec<u32>>> {
    let summary = complex_summary(pres, p)?;
    let n = pres.n_generators();
    let pm: FpMatrix = smith_normal_form(&summary.boundary_a).left_transform(n, p)?;
    Ok((0..n)
        .map(|j| (summary.rank_a..n).map(|i| pm.get(i, j)).collect())
        .collect())
}

/// Repeatedly passes to the kernel of `G_i → H_1(G_i; F_p)`.
pub fn growth_iterate(pres: &Presentation, p: Prime, steps: usize) -> Result<GrowthReport> {
    if pres.deficiency() < 1 {
        return Err(Error::Inconsistent(format!(
            "growth iteration needs witness deficiency at least 1, got {}",
            pres.deficiency()
        )));
    }
    let mut current = pres.clone();
    let b1 = complex_summary(&current, p)?.b1;
    let mut stages = vec![GrowthStage {
        stage: 0,
        index: BigUint::one(),
        generators: current.n_generators(),
        relators: current.relators().len(),
        deficiency: current.deficiency(),
        b1,
        lower_bound: None,
        nielsen_schreier: None,
        holds: true,
    }];
    let mut stopped = None;
    for step in 1..=steps {
        let prev = stages.last().expect("nonempty").clone();
        if prev.b1 == 0 {
            stopped = Some("b1 = 0: the elementary abelian quotient is trivial".to_string());
            break;
        }
        let next = Homomorphism::to_elementary_abelian(&current, p, &abelianization_images(&current, p)?)
            .and_then(|hom| reidemeister_schreier(&current, &hom).map(|rs| (hom, rs)))
            .and_then(|(hom, rs)| complex_summary(&rs.presentation, p).map(|s| (hom, rs, s)));
        let (hom, rs, summary) = match next {
            Ok(x) => x,
            Err(e @ Error::CapExceeded { .. }) => {
                stopped = Some(format!("stage {step}: {e}"));
                break;
            }
            Err(e) => return Err(e),
        };
        let index = BigUint::from(hom.image_size());
        let lower_bound = (prev.deficiency >= 1).then(|| BigUint::one() << (prev.b1 - 1));
        let nielsen_schreier = current.relators().is_empty().then(|| {
            BigUint::one() + &index * BigUint::from(current.n_generators() - 1)
        });
        let holds = lower_bound.as_ref().is_none_or(|lb| BigUint::from(summary.b1) >= *lb)
            && nielsen_schreier.as_ref().is_none_or(|ns| BigUint::from(summary.b1) == *ns);
        stages.push(GrowthStage {
            stage: step,
            index,
            generators: rs.presentation.n_generators(),
            relators: rs.presentation.relators().len(),
            deficiency: rs.presentation.deficiency(),
            b1: summary.b1,
            lower_bound,
            nielsen_schreier,
            holds,
        });
        current = rs.presentation;
    }
    Ok(GrowthReport {
        p: p.get(),
        stages,
        stopped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::{filtration_profile_default, make_cyclic, make_elementary_abelian};
    use crate::presentations::parse_presentation;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn worked_examples() {
        let z2sq = make_elementary_abelian(pr(2), 2).unwrap();
        let prof = filtration_profile_default(pr(2), &z2sq).unwrap();
        let rep = bound_general(2, 1, &prof).unwrap();
        assert_eq!(rep.per_k(), ints(&[-1, 2, 2]));
        assert_eq!((rep.best.k, rep.best.value.clone()), (1, BigInt::from(2)));
        assert_eq!(rep.clone().with_actual(2).verdict, BoundVerdict::Tight);
        assert_eq!(rep.with_actual(1).verdict, BoundVerdict::Violated);

        let z2 = make_cyclic(2).unwrap();
        let prof = filtration_profile_default(pr(2), &z2).unwrap();
        let rep = bound_general(2, 2, &prof).unwrap();
        assert_eq!(rep.best.value, BigInt::from(3));

        let rep = bound_general(5, 0, &prof).unwrap();
        assert_eq!(rep.bounds[0].value, BigInt::from(1 + 5 - 2));
    }

    #[test]
    fn rejects_b1_below_deficiency() {
        assert!(matches!(bound_elementary_abelian(1, 2, pr(2), 2), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn binomial_specialization() {
        for r in 1..10 {
            for (b, d) in [(r as u64, 1), (r as u64 + 2, 0), (r as u64 + 1, 2)] {
                let rep = bound_elementary_abelian(b, d, pr(2), r).unwrap();
                for kb in &rep.bounds {
                    assert_eq!(kb.value, binomial_bound(b, d, r, kb.k));
                }
            }
        }
    }

    #[test]
    fn manifold_verdicts() {
        let v = verdict_3manifold_z2(4, 4).unwrap();
        assert_eq!(v.bound, BigInt::from(9));
        assert_eq!(v.certification, Certification::Method);
        assert!(v.equality_profile.is_none());

        let v = verdict_3manifold_z2(3, 3).unwrap();
        assert_eq!(v.certification, Certification::ExternalCitation);
        assert!(!v.balanced_inequality_holds);
        assert_eq!(v.equality_profile, Some(([1, 3, 3, 1], [1, 3, 3, 1])));

        let v = verdict_3manifold_z2(1, 1).unwrap();
        assert_eq!(v.certification, Certification::Method);
        assert_eq!(v.equality_profile, Some(([1, 1, 1, 1], [1, 0, 0, 1])));

        // 1 + 2·2 - 4 = 1 = 2^1 - 1: the bound already suffices at r = 2.
        let v = verdict_3manifold_z2(2, 2).unwrap();
        assert_eq!(v.bound, v.required);
        assert_eq!(v.certification, Certification::Method);

        assert!(verdict_3manifold_z2(1, 2).is_err());
    }

    #[test]
    fn abelianization_of_small_groups() {
        let pres = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
        let imgs = abelianization_images(&pres, pr(2)).unwrap();
        assert_eq!(imgs.len(), 2);
        assert!(imgs.iter().all(|v| v.len() == 2));
        let pres = parse_presentation("< a, b | a b >").unwrap();
        let imgs = abelianization_images(&pres, pr(3)).unwrap();
        assert!(imgs.iter().all(|v| v.len() == 1));
        let hom = Homomorphism::to_elementary_abelian(&pres, pr(3), &imgs).unwrap();
        assert!(hom.is_surjective());
    }

    #[test]
    fn growth_of_free_and_abelian_groups() {
        let f2 = parse_presentation("< a, b | >").unwrap();
        let rep = growth_iterate(&f2, pr(2), 2).unwrap();
        assert_eq!(rep.b1_sequence(), vec![2, 5, 129]);
        assert!(rep.stages.iter().all(|s| s.holds));

        let torus = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
        let rep = growth_iterate(&torus, pr(2), 2).unwrap();
        assert_eq!(rep.b1_sequence(), vec![2, 2, 2]);
        assert!(rep.stages.iter().all(|s| s.holds && s.nielsen_schreier.is_none()));

        let rp2 = parse_presentation("< a | a^2 >").unwrap();
        assert!(growth_iterate(&rp2, pr(2), 1).is_err());
    }
}
