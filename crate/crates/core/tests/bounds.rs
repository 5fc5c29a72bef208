use hcc::bounds::{
    binomial_bound, bound_elementary_abelian, bound_general, growth_iterate, verdict_3manifold_z2, BoundVerdict,
    Certification,
};
use hcc::covers::{build_cover, Homomorphism};
use hcc::groupring::{filtration_profile_default, make_cyclic, make_elementary_abelian};
use hcc::presentations::{complex_summary, parse_presentation, Presentation};
use hcc::Prime;
use num_bigint::BigInt;
use proptest::prelude::*;

mod common;
use common::word;

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

#[test]
fn examples() {
    let rep = bound_elementary_abelian(2, 1, p(2), 2).unwrap();
    let per_k: Vec<i64> = rep.per_k().iter().map(|v| v.try_into().unwrap()).collect();
    assert_eq!(per_k, [-1, 2, 2]);
    assert_eq!(rep.best.k, 1);

    let prof = filtration_profile_default(p(2), &make_cyclic(2).unwrap()).unwrap();
    assert_eq!(bound_general(2, 2, &prof).unwrap().best.value, BigInt::from(3));
    assert_eq!(bound_general(7, 0, &prof).unwrap().bounds[0].value, BigInt::from(1 + 7 - 2));
    assert!(bound_general(1, 2, &prof).is_err());
}

#[test]
fn manifold_profiles() {
    let one = verdict_3manifold_z2(1, 1).unwrap();
    assert_eq!(one.equality_profile, Some(([1, 1, 1, 1], [1, 0, 0, 1])));
    let two = verdict_3manifold_z2(2, 2).unwrap();
    assert_eq!(two.certification, Certification::Method);
    assert_eq!(two.bound, two.required);
    let three = verdict_3manifold_z2(3, 3).unwrap();
    assert_eq!(three.certification, Certification::ExternalCitation);
    assert_eq!(three.equality_profile, Some(([1, 3, 3, 1], [1, 3, 3, 1])));
    assert!(!three.balanced_inequality_holds);
    for r in 4..=12 {
        let v = verdict_3manifold_z2(r as u64, r).unwrap();
        assert_eq!(v.certification, Certification::Method, "r = {r}");
        assert!(v.balanced_inequality_holds);
        assert_eq!(v.equality_profile, None);
    }
    assert!(verdict_3manifold_z2(1, 2).is_err());
}

#[test]
fn growth_sequences() {
    let torus = parse_presentation("< a, b | a b a^-1 b^-1 >").unwrap();
    assert_eq!(growth_iterate(&torus, p(2), 2).unwrap().b1_sequence(), [2, 2, 2]);
    let f2 = parse_presentation("< a, b | >").unwrap();
    let rep = growth_iterate(&f2, p(2), 2).unwrap();
    assert_eq!(rep.b1_sequence(), [2, 5, 129]);
    assert!(rep.stages.iter().all(|s| s.holds));
    let rp2 = parse_presentation("< a | a^2 >").unwrap();
    assert!(growth_iterate(&rp2, p(2), 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn elementary_abelian_shortcut_matches_the_group_ring(
        (prime, r) in prop::sample::select(vec![(2u64, 1usize), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)]),
        b1 in 0u64..12,
        d in -3i64..4,
    ) {
        prop_assume!(b1 as i64 >= d);
        let pr = p(prime);
        let prof = filtration_profile_default(pr, &make_elementary_abelian(pr, r).unwrap()).unwrap();
        let a = bound_general(b1, d, &prof).unwrap();
        let b = bound_elementary_abelian(b1, d, pr, r).unwrap();
        prop_assert_eq!(a.per_k(), b.per_k());
        if prime == 2 {
            for (k, v) in b.per_k().iter().enumerate() {
                prop_assert_eq!(v, &binomial_bound(b1, d, r, k));
            }
        }
    }

    #[test]
    fn best_is_the_first_maximum(b1 in 0u64..20, d in -2i64..5, r in 1usize..8) {
        prop_assume!(b1 as i64 >= d);
        let rep = bound_elementary_abelian(b1, d, p(2), r).unwrap();
        let vals = rep.per_k();
        let max = vals.iter().max().unwrap();
        prop_assert_eq!(&rep.best.value, max);
        prop_assert_eq!(rep.best.k, vals.iter().position(|v| v == max).unwrap());
    }

    /// The bound never exceeds `b_1` of an actual connected cover.
    #[test]
    fn bounds_are_sound_on_real_covers(
        (prime, r) in prop::sample::select(vec![(2u64, 1usize), (2, 2), (3, 1), (3, 2), (5, 1)]),
        n in 1usize..=3,
        seed_words in prop::collection::vec(word(3, 5), 0..=2),
        coords in prop::collection::vec(prop::collection::vec(0u32..5, 2), 3),
    ) {
        let pr = p(prime);
        let vectors: Vec<Vec<u32>> = coords[..n].iter().map(|v| v[..r].iter().map(|x| x % prime as u32).collect()).collect();
        // Relators w^p lie in the kernel of any map to (Z_p)^r.
        let rels = seed_words
            .into_iter()
            .map(|w| hcc::presentations::FreeWord::from_letters(w.letters().iter().copied().filter(|l| l.gen < n)).pow(prime as i64))
            .collect();
        let pres = Presentation::with_default_names(n, rels).unwrap();
        let hom = Homomorphism::to_elementary_abelian(&pres, pr, &vectors).unwrap();
        prop_assume!(hom.is_surjective());
        let b1 = complex_summary(&pres, pr).unwrap().b1 as u64;
        let d = pres.deficiency();
        prop_assume!(b1 as i64 >= d);
        let cover = build_cover(&pres, &hom, pr).unwrap();
        let rep = bound_elementary_abelian(b1, d, pr, r).unwrap().with_actual(cover.b1 as u64);
        prop_assert_ne!(rep.verdict, BoundVerdict::Violated, "{}", pres.render());
    }
}
