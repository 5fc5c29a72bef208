//! Reference instances: a presentation, a surjection onto a small group and
//! a prime, spanning free groups, surface groups and finite cyclic groups.

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{bound_general, BoundReport};
use crate::covers::{build_cover, hc_verdict, HcVerdict, Homomorphism};
use crate::error::Result;
use crate::fpexact::Prime;
use crate::groupring::{filtration_profile_default, make_cyclic};
use crate::presentations::{complex_summary, parse_presentation, reidemeister_schreier, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusTarget {
    /// Generator images as vectors of `(Z_p)^r`.
    Elementary(&'static [&'static [u32]]),
    /// Generator images in `Z_n`.
    Cyclic(usize, &'static [usize]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusItem {
    pub name: &'static str,
    pub presentation: &'static str,
    pub target: CorpusTarget,
    pub p: u64,
}

const F1: &str = "< a | >";
const F2: &str = "< a, b | >";
const F3: &str = "< a, b, c | >";
const TORUS: &str = "< a, b | a b a^-1 b^-1 >";
const KLEIN: &str = "< a, b | a b a b^-1 >";
const GENUS2: &str = "< a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1 >";

macro_rules! item {
    ($name:expr, $pres:expr, ea [$($v:expr),+], $p:expr) => {
        CorpusItem { name: $name, presentation: $pres, target: CorpusTarget::Elementary(&[$(&$v),+]), p: $p }
    };
    ($name:expr, $pres:expr, cyclic $n:expr, [$($g:expr),+], $p:expr) => {
        CorpusItem { name: $name, presentation: $pres, target: CorpusTarget::Cyclic($n, &[$($g),+]), p: $p }
    };
}

pub fn corpus() -> Vec<CorpusItem> {
    vec![
        item!("F1/Z2", F1, ea[[1]], 2),
        item!("F1/Z3", F1, ea[[1]], 3),
        item!("F2/Z2", F2, ea[[1], [0]], 2),
        item!("F2/Z2^2", F2, ea[[1, 0], [0, 1]], 2),
        item!("F2/Z3", F2, ea[[1], [0]], 3),
        item!("F2/Z3^2", F2, ea[[1, 0], [0, 1]], 3),
        item!("F2/Z4", F2, cyclic 4, [1, 0], 2),
        item!("F3/Z2^3", F3, ea[[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2),
        item!("F3/Z2^2", F3, ea[[1, 0], [0, 1], [1, 1]], 2),
        item!("F3/Z3", F3, ea[[1], [1], [2]], 3),
        item!("torus/Z2^2", TORUS, ea[[1, 0], [0, 1]], 2),
        item!("torus/Z2", TORUS, ea[[1], [0]], 2),
        item!("torus/Z3", TORUS, ea[[0], [1]], 3),
        item!("torus/Z3^2", TORUS, ea[[1, 0], [0, 1]], 3),
        item!("torus/Z4", TORUS, cyclic 4, [1, 0], 2),
        item!("torus/Z4-diag", TORUS, cyclic 4, [1, 1], 2),
        item!("klein/Z2-b", KLEIN, ea[[0], [1]], 2),
        item!("klein/Z2-a", KLEIN, ea[[1], [0]], 2),
        item!("klein/Z2-ab", KLEIN, ea[[1], [1]], 2),
        item!("klein/Z2^2", KLEIN, ea[[1, 0], [0, 1]], 2),
        item!("klein/Z3", KLEIN, ea[[0], [1]], 3),
        item!("klein/Z4", KLEIN, cyclic 4, [2, 1], 2),
        item!("genus2/Z2^4", GENUS2, ea[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 2),
        item!("genus2/Z2^2", GENUS2, ea[[1, 0], [0, 1], [0, 0], [0, 0]], 2),
        item!("genus2/Z2^3", GENUS2, ea[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], 2),
        item!("genus2/Z3", GENUS2, ea[[1], [0], [0], [0]], 3),
        item!("genus2/Z3^2", GENUS2, ea[[1, 0], [0, 0], [0, 1], [0, 0]], 3),
        item!("genus2/Z4", GENUS2, cyclic 4, [1, 0, 0, 0], 2),
        item!("a^2/Z2", "< a | a^2 >", ea[[1]], 2),
        item!("a^3/Z3", "< a | a^3 >", ea[[1]], 3),
        item!("a^4/Z4", "< a | a^4 >", cyclic 4, [1], 2),
        item!("a^4/Z2", "< a | a^4 >", ea[[1]], 2),
        item!("Z2*Z2/Z2^2", "< a, b | a^2, b^2 >", ea[[1, 0], [0, 1]], 2),
        item!("Z3*Z3/Z3^2", "< a, b | a^3, b^3 >", ea[[1, 0], [0, 1]], 3),
    ]
}

/// Items on which the bound is expected to be attained.
pub const TIGHT_ITEMS: [&str; 2] = ["torus/Z2^2", "F2/Z2"];

impl CorpusItem {
    pub fn build(&self) -> Result<(Presentation, Homomorphism, Prime)> {
        let p = Prime::new(self.p)?;
        let pres = parse_presentation(self.presentation)?;
        let hom = match self.target {
            CorpusTarget::Elementary(vs) => {
                let vs: Vec<Vec<u32>> = vs.iter().map(|v| v.to_vec()).collect();
                Homomorphism::to_elementary_abelian(&pres, p, &vs)?
            }
            CorpusTarget::Cyclic(n, images) => Homomorphism::new(&pres, &make_cyclic(n)?, images.to_vec())?,
        };
        Ok((pres, hom, p))
    }
}

/// Everything computed for one corpus item.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusOutcome {
    pub name: String,
    pub presentation: String,
    pub target: String,
    pub p: u32,
    pub surjective: bool,
    pub base_betti: [usize; 3],
    pub cover_betti: [usize; 3],
    pub hrk: usize,
    pub euler: i64,
    pub bound: BoundReport,
    pub hc: Option<HcVerdict>,
    /// `b_1` of the Reidemeister–Schreier presentation of the kernel.
    pub schreier_b1: Option<usize>,
}

/// Builds the cover, the bound report, the verdict (elementary abelian
/// targets) and, when `|H| <= schreier_limit`, the kernel presentation.
pub fn evaluate(item: &CorpusItem, schreier_limit: usize) -> Result<CorpusOutcome> {
    let (pres, hom, p) = item.build()?;
    let base = complex_summary(&pres, p)?;
    let cover = build_cover(&pres, &hom, p)?;
    let profile = filtration_profile_default(p, hom.target())?;
    let bound = bound_general(base.b1 as u64, pres.deficiency(), &profile)?.with_actual(cover.b1 as u64);
    let hc = match hom.target().elementary_abelian_rank(p) {
        Some(_) => Some(hc_verdict(&cover)?),
        None => None,
    };
    let schreier_b1 = if hom.target().size() <= schreier_limit {
        let rs = reidemeister_schreier(&pres, &hom)?;
        Some(complex_summary(&rs.presentation, p)?.b1)
    } else {
        None
    };
    Ok(CorpusOutcome {
        name: item.name.to_string(),
        presentation: item.presentation.to_string(),
        target: hom.target().label().to_string(),
        p: p.get(),
        surjective: hom.is_surjective(),
        base_betti: [base.b0, base.b1, base.b2],
        cover_betti: cover.betti(),
        hrk: cover.hrk,
        euler: cover.euler,
        bound,
        hc,
        schreier_b1,
    })
}

impl CorpusOutcome {
    pub fn order(&self) -> BigInt {
        self.bound.order.clone()
    }
}
