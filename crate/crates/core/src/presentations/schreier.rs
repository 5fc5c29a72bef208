use std::collections::VecDeque;

use super::word::{FreeWord, Letter};
use super::Presentation;
use crate::covers::Homomorphism;
use crate::error::{Error, Result};
use crate::fpexact::check_cap;

/// A presentation of `ker φ` together with the coset data used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierRewrite {
    pub presentation: Presentation,
    /// `[F : ker φ] = |im φ|`.
    pub index: usize,
    /// Cosets (elements of `im φ`) in breadth-first discovery order.
    pub cosets: Vec<usize>,
    /// Shortlex-minimal transversal word of each coset, aligned with `cosets`.
    pub transversal: Vec<FreeWord>,
    /// Output generator `k` is `t_h a_j t_{h·φ(a_j)}^{-1}` for `(h, j) = origin[k]`.
    pub origin: Vec<(usize, usize)>,
}

/// Schreier generators are the non-tree edges `(h, a_j)` of the coset graph,
/// named `{a_j}_{h}`; every relator is rewritten from every coset. Only free
/// reduction is applied, so the output has `|im φ|·(n-1) + 1` generators and
/// `|im φ|·m` relators.
pub fn reidemeister_schreier(pres: &Presentation, hom: &Homomorphism) -> Result<SchreierRewrite> {
    if hom.source() != pres {
        return Err(Error::Inconsistent("homomorphism is defined on a different presentation".into()));
    }
    let t = hom.target();
    let size = t.size();
    let n = pres.n_generators();
    let total_letters: u128 = pres.relators().iter().map(|r| r.len() as u128).sum();
    check_cap("Schreier rewriting", (hom.image_size() as u128) * total_letters.max(1))?;
    check_cap("Schreier generators", hom.image_size() as u128 * n.max(1) as u128)?;

    let mut rep: Vec<Option<FreeWord>> = vec![None; size];
    let mut tree = vec![false; size * n];
    let mut cosets = Vec::new();
    let mut queue = VecDeque::new();
    rep[t.identity()] = Some(FreeWord::empty());
    queue.push_back(t.identity());
    while let Some(h) = queue.pop_front() {
        cosets.push(h);
        for j in 0..n {
            for inverse in [false, true] {
                let g = hom.images()[j];
                let next = t.mul(h, if inverse { t.inverse(g) } else { g });
                if rep[next].is_none() {
                    let mut w = rep[h].clone().expect("visited");
                    w.push(Letter::new(j, inverse));
                    rep[next] = Some(w);
                    // The edge labelled a_j starts at h, or at next when
                    // traversed backwards.
                    let start = if inverse { next } else { h };
                    tree[start * n + j] = true;
                    queue.push_back(next);
                }
            }
        }
    }

    let mut gen_index = vec![usize::MAX; size * n];
    let mut origin = Vec::new();
    let mut names = Vec::new();
    for &h in &cosets {
        for j in 0..n {
            if !tree[h * n + j] {
                gen_index[h * n + j] = origin.len();
                origin.push((h, j));
                names.push(format!("{}_{}", pres.generator_names()[j], h));
            }
        }
    }

    let mut relators = Vec::with_capacity(cosets.len() * pres.relators().len());
    for rel in pres.relators() {
        for &start in &cosets {
            let mut at = start;
            let mut w = FreeWord::empty();
            for l in rel.letters() {
                let g = hom.images()[l.gen];
                if l.inverse {
                    at = t.mul(at, t.inverse(g));
                    let k = gen_index[at * n + l.gen];
                    if k != usize::MAX {
                        w.push(Letter::new(k, true));
                    }
                } else {
                    let k = gen_index[at * n + l.gen];
                    if k != usize::MAX {
                        w.push(Letter::new(k, false));
                    }
                    at = t.mul(at, g);
                }
            }
            debug_assert_eq!(at, start, "relator must lift to a closed loop");
            relators.push(w);
        }
    }

    let transversal = cosets.iter().map(|&h| rep[h].clone().expect("visited")).collect();
    Ok(SchreierRewrite {
        presentation: Presentation::new(names, relators)?,
        index: cosets.len(),
        cosets,
        transversal,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpexact::Prime;
    use crate::groupring::make_cyclic;
    use crate::presentations::{complex_summary, parse_presentation};

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn free_group_index_two() {
        let f2 = parse_presentation("< a, b | >").unwrap();
        let hom = Homomorphism::to_elementary_abelian(&f2, pr(2), &[vec![1], vec![0]]).unwrap();
        let rs = reidemeister_schreier(&f2, &hom).unwrap();
        assert_eq!(rs.index, 2);
        assert_eq!(rs.presentation.n_generators(), 3);
        assert_eq!(rs.presentation.deficiency(), 3);
        assert_eq!(complex_summary(&rs.presentation, pr(2)).unwrap().b1, 3);
        assert_eq!(rs.transversal, vec![FreeWord::empty(), FreeWord::generator_power(0, 1)]);
    }

    #[test]
    fn torus_kernel_is_a_torus() {
        let torus = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
        let hom = Homomorphism::to_elementary_abelian(&torus, pr(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        let rs = reidemeister_schreier(&torus, &hom).unwrap();
        assert_eq!(rs.presentation.n_generators(), 4 + 1);
        assert_eq!(rs.presentation.relators().len(), 4);
        assert_eq!(complex_summary(&rs.presentation, pr(2)).unwrap().b1, 2);
    }

    #[test]
    fn shortlex_transversal() {
        let f2 = parse_presentation("< a, b | >").unwrap();
        let z4 = make_cyclic(4).unwrap();
        let hom = Homomorphism::new(&f2, &z4, vec![1, 2]).unwrap();
        let rs = reidemeister_schreier(&f2, &hom).unwrap();
        let names = f2.generator_names();
        let reps: Vec<String> = rs.transversal.iter().map(|w| w.render(names)).collect();
        assert_eq!(rs.cosets, vec![0, 1, 3, 2]);
        assert_eq!(reps, vec!["1", "a", "a^-1", "b"]);
    }

    #[test]
    fn trivial_target_keeps_homology() {
        let pres = parse_presentation("< a, b | a^2 b^-3, a b a b^-1 >").unwrap();
        let rs = reidemeister_schreier(&pres, &Homomorphism::trivial(&pres).unwrap()).unwrap();
        for p in [2, 3, 5] {
            let a = complex_summary(&pres, pr(p)).unwrap();
            let b = complex_summary(&rs.presentation, pr(p)).unwrap();
            assert_eq!((a.b1, a.b2), (b.b1, b.b2));
        }
    }
}
