use hcc::covers::{build_cover, Homomorphism};
use hcc::groupring::{make_cyclic, make_elementary_abelian, OrderedGroup};
use hcc::presentations::{
    complex_summary, fox_derivative, normalize_presentation, parse_presentation, reidemeister_schreier, FreeWord,
    Presentation,
};
use hcc::Prime;
use proptest::prelude::*;

mod common;
use common::word;

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(word(n, 10), 0..=4)
            .prop_map(move |rels| Presentation::with_default_names(n, rels).unwrap())
    })
}

fn target() -> impl Strategy<Value = (OrderedGroup, Prime)> {
    prop::sample::select(vec![
        (make_cyclic(2).unwrap(), p(2)),
        (make_cyclic(3).unwrap(), p(3)),
        (make_cyclic(4).unwrap(), p(2)),
        (make_elementary_abelian(p(2), 2).unwrap(), p(2)),
        (make_elementary_abelian(p(3), 2).unwrap(), p(3)),
    ])
}

/// A presentation with a homomorphism to `h`: relators are powers `w^{ord φ(w)}`.
fn instance() -> impl Strategy<Value = (Presentation, Homomorphism, Prime)> {
    (target(), 1usize..=3).prop_flat_map(|((h, p), n)| {
        let images = prop::collection::vec(0..h.size(), n);
        let words = prop::collection::vec(word(n, 5), 0..=3);
        (images, words).prop_map(move |(images, words)| {
            let free = Presentation::with_default_names(n, vec![]).unwrap();
            let phi = Homomorphism::new(&free, &h, images.clone()).unwrap();
            let rels = words
                .into_iter()
                .map(|w| {
                    let e = h.element_order(phi.word_image(&w)) as i64;
                    w.pow(e)
                })
                .collect();
            let pres = Presentation::with_default_names(n, rels).unwrap();
            let hom = Homomorphism::new(&pres, &h, images).unwrap();
            (pres, hom, p)
        })
    })
}

#[test]
fn grammar_examples() {
    let t = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
    assert_eq!(t.n_generators(), 2);
    assert_eq!(t.deficiency(), 1);
    let s = complex_summary(&t, p(5)).unwrap();
    assert_eq!((s.b0, s.b1, s.b2, s.euler), (1, 2, 1, 0));

    let e = parse_presentation("< a | 1 >").unwrap();
    assert_eq!(e.relators(), &[FreeWord::empty()]);
    let f = parse_presentation("< | >").unwrap();
    assert_eq!(f.n_generators(), 0);
    assert_eq!(complex_summary(&f, p(2)).unwrap().b1, 0);

    for bad in ["< a, a | >", "< a | b >", "< a | a^ >", "a b", "< a | a >>"] {
        assert!(parse_presentation(bad).is_err(), "{bad}");
    }
}

#[test]
fn projective_plane_depends_on_the_prime() {
    let rp2 = parse_presentation("< a | a^2 >").unwrap();
    let two = complex_summary(&rp2, p(2)).unwrap();
    let three = complex_summary(&rp2, p(3)).unwrap();
    assert_eq!((two.b1, two.b2), (1, 1));
    assert_eq!((three.b1, three.b2), (0, 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_roundtrip(pres in presentation()) {
        let text = pres.render();
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(back, pres);
    }

    #[test]
    fn fox_augmentation_is_the_exponent_sum(w in word(3, 16), j in 0usize..3) {
        let sum: i64 = fox_derivative(&w, j).iter().map(|t| t.sign as i64).sum();
        prop_assert_eq!(sum, w.exponent_sum(j));
    }

    #[test]
    fn fox_fundamental_identity((h, p) in target(), w in word(3, 14), images in prop::collection::vec(0usize..9, 3)) {
        let images: Vec<usize> = images.into_iter().map(|x| x % h.size()).collect();
        let free = Presentation::with_default_names(3, vec![]).unwrap();
        let phi = Homomorphism::new(&free, &h, images.clone()).unwrap();
        // Σ_j φ(∂w/∂a_j)(φ(a_j) - 1) = φ(w) - 1 in F_p[H]
        let mut lhs = vec![0u32; h.size()];
        for (j, &a) in images.iter().enumerate() {
            for t in fox_derivative(&w, j) {
                let g = phi.word_image(&t.prefix);
                let c = p.reduce(t.sign as i64);
                lhs[h.mul(g, a)] = p.add(lhs[h.mul(g, a)], c);
                lhs[g] = p.sub(lhs[g], c);
            }
        }
        let mut rhs = vec![0u32; h.size()];
        let wi = phi.word_image(&w);
        rhs[wi] = p.add(rhs[wi], 1);
        rhs[h.identity()] = p.sub(rhs[h.identity()], 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalization_preserves_homology(pres in presentation(), prime in prop::sample::select(vec![2u64, 3, 5])) {
        let p = p(prime);
        let norm = normalize_presentation(&pres, p).unwrap();
        let before = complex_summary(&pres, p).unwrap();
        let after = complex_summary(&norm.presentation, p).unwrap();
        prop_assert_eq!(norm.presentation.n_generators(), pres.n_generators());
        prop_assert_eq!(norm.presentation.relators().len(), pres.relators().len());
        prop_assert_eq!((before.b1, before.b2), (after.b1, after.b2));
        // The new boundary matrix is diag(D, 0).
        let a = &after.boundary_a;
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j || i >= after.rank_a {
                    prop_assert_eq!(a.get(i, j), 0);
                }
            }
        }
    }

    #[test]
    fn schreier_counts_and_homology((pres, hom, p) in instance()) {
        let rs = reidemeister_schreier(&pres, &hom).unwrap();
        let index = hom.image_size();
        let (n, m) = (pres.n_generators(), pres.relators().len());
        prop_assert_eq!(rs.index, index);
        prop_assert_eq!(rs.presentation.n_generators(), index * (n - 1) + 1);
        prop_assert_eq!(rs.presentation.relators().len(), index * m);
        prop_assert_eq!(rs.transversal.len(), index);
        for (w, &h) in rs.transversal.iter().zip(&rs.cosets) {
            prop_assert_eq!(hom.word_image(w), h);
        }
        let cover = build_cover(&pres, &hom, p).unwrap();
        let b1 = complex_summary(&rs.presentation, p).unwrap().b1;
        prop_assert_eq!(cover.b1, cover.b0 * b1);
    }
}
