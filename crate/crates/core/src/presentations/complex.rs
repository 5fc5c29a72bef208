use serde::Serialize;

use super::word::{FreeWord, Letter};
use super::Presentation;
use crate::error::Result;
use crate::fpexact::{smith_normal_form, ElementaryOp, FpMatrix, Prime, SnfResult};

/// Mod-p data of the presentation complex: one 0-cell, `n` 1-cells, `m`
/// 2-cells, and `∂₂ = A` with `A[j][i]` the exponent sum of `a_j` in `R_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub p: u32,
    #[serde(serialize_with = "crate::json::matrix")]
    pub boundary_a: FpMatrix,
    pub rank_a: usize,
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub euler: i64,
}

pub fn complex_summary(pres: &Presentation, p: Prime) -> Result<ComplexSummary> {
    let n = pres.n_generators();
    let m = pres.relators().len();
    let mut a = FpMatrix::zeros(n, m, p)?;
    for (i, rel) in pres.relators().iter().enumerate() {
        for l in rel.letters() {
            let v = if l.inverse { p.neg(1) } else { 1 };
            a.set(l.gen, i, p.add(a.get(l.gen, i), v));
        }
    }
    let rank_a = a.rank();
    Ok(ComplexSummary {
        p: p.get(),
        boundary_a: a,
        rank_a,
        b0: 1,
        b1: n - rank_a,
        b2: m - rank_a,
        euler: 1 - n as i64 + m as i64,
    })
}

/// A presentation whose boundary matrix is `diag(D, 0)`, obtained by
/// replaying the Smith normal form of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub presentation: Presentation,
    /// New generator `k` as a word in the original generators.
    pub generator_words: Vec<FreeWord>,
    pub snf: SnfResult,
}

/// Column operations become relator transforms (`ω_i ← ω_i ω_j^q`, swaps),
/// applied first; row operations then become generator substitutions
/// (`a'_i = a_i a_j^{-q}`, swaps). Generator and relator counts are kept.
pub fn normalize_presentation(pres: &Presentation, p: Prime) -> Result<Normalization> {
    let summary = complex_summary(pres, p)?;
    let snf = smith_normal_form(&summary.boundary_a);
    let n = pres.n_generators();

    let mut rels: Vec<FreeWord> = pres.relators().to_vec();
    for &op in &snf.right_ops {
        match op {
            ElementaryOp::Transvection { i, j, q } => {
                let tail = rels[j].pow(q as i64);
                rels[i].extend(&tail);
            }
            ElementaryOp::Swap { i, j } => rels.swap(i, j),
        }
    }

    let mut words: Vec<FreeWord> = (0..n).map(|k| FreeWord::generator_power(k, 1)).collect();
    for &op in &snf.left_ops {
        // Images of the current generators in terms of the next ones.
        let mut images: Vec<FreeWord> = (0..n).map(|k| FreeWord::generator_power(k, 1)).collect();
        match op {
            ElementaryOp::Transvection { i, j, q } => {
                images[i] = FreeWord::from_letters([Letter::new(i, false)])
                    .concat(&FreeWord::generator_power(j, q as i64));
                let tail = words[j].pow(-(q as i64));
                words[i].extend(&tail);
            }
            ElementaryOp::Swap { i, j } => {
                images.swap(i, j);
                words.swap(i, j);
            }
        }
        for r in &mut rels {
            *r = r.substitute(&images);
        }
    }

    Ok(Normalization {
        presentation: Presentation::new(pres.generator_names().to_vec(), rels)?,
        generator_words: words,
        snf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::parse_presentation;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn torus_and_projective_plane() {
        let torus = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
        let s = complex_summary(&torus, pr(2)).unwrap();
        assert!(s.boundary_a.is_zero());
        assert_eq!((s.b0, s.b1, s.b2, s.euler), (1, 2, 1, 0));

        let rp2 = parse_presentation("< a | a a >").unwrap();
        let s = complex_summary(&rp2, pr(2)).unwrap();
        assert_eq!((s.b1, s.b2, s.euler), (1, 1, 1));
        let s = complex_summary(&rp2, pr(3)).unwrap();
        assert_eq!(s.boundary_a.get(0, 0), 2);
        assert_eq!((s.rank_a, s.b1, s.b2), (1, 0, 0));
    }

    #[test]
    fn already_diagonal_is_untouched() {
        let pres = parse_presentation("< a, b | a^2, b^3 >").unwrap();
        let norm = normalize_presentation(&pres, pr(5)).unwrap();
        assert!(norm.snf.left_ops.is_empty() && norm.snf.right_ops.is_empty());
        assert_eq!(norm.presentation, pres);
    }

    #[test]
    fn small_example_becomes_diagonal() {
        let pres = parse_presentation("< a, b | a b, b >").unwrap();
        let a = complex_summary(&pres, pr(2)).unwrap().boundary_a;
        assert_eq!(a.to_rows(), vec![vec![1, 0], vec![1, 1]]);
        let norm = normalize_presentation(&pres, pr(2)).unwrap();
        let s = complex_summary(&norm.presentation, pr(2)).unwrap();
        assert_eq!(s.boundary_a.to_rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn free_group_unchanged() {
        let pres = parse_presentation("< a, b, c | >").unwrap();
        let norm = normalize_presentation(&pres, pr(3)).unwrap();
        assert_eq!(norm.presentation, pres);
    }

    #[test]
    fn normalization_keeps_betti_numbers_and_is_diagonal() {
        let src = [
            "< a, b, c | a^2 b c^-1, b^3 c a, a b a^-1 b^-1 >",
            "< x, y | x^3 y^2, y x^2 y >",
            "< a, b | a b a b^-1 >",
            "< a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1 >",
        ];
        for p in [2, 3, 5] {
            for s in src {
                let pres = parse_presentation(s).unwrap();
                let before = complex_summary(&pres, pr(p)).unwrap();
                let norm = normalize_presentation(&pres, pr(p)).unwrap();
                let after = complex_summary(&norm.presentation, pr(p)).unwrap();
                assert_eq!((before.b1, before.b2), (after.b1, after.b2), "{s} p={p}");
                assert_eq!(norm.presentation.n_generators(), pres.n_generators());
                assert_eq!(norm.presentation.relators().len(), pres.relators().len());
                let a = &after.boundary_a;
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        let diag = r == c && r < after.rank_a;
                        assert_eq!(a.get(r, c) != 0, diag, "{s} p={p} at ({r},{c})");
                        if diag {
                            assert_eq!(a.get(r, c), norm.snf.diagonal[r].value());
                        }
                    }
                }
            }
        }
    }
}
