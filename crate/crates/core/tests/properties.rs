//! Property tests for the spec-level invariants.

use proptest::prelude::*;

use zigzag_core::algebra::{basis, multiply, AlgebraElement, AlgebraSpec};
use zigzag_core::braid::{apply_word, BraidWord};
use zigzag_core::complexes::{direct_sum, fingerprint, hom_poincare, projective, reduce, shift};
use zigzag_core::curves::{apply_word_curve, basic_curve, ibigr_basic, twist};

fn word_strategy(m: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..=m, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(k, pos)| if pos { k as i32 } else { -(k as i32) })
            .collect();
        BraidWord::new(m, letters).unwrap()
    })
}

fn element_strategy(m: usize) -> impl Strategy<Value = AlgebraElement> {
    let spec = AlgebraSpec::new(m);
    let b = basis(&spec);
    prop::collection::vec((0..b.len(), -3i64..=3), 0..=4).prop_map(move |terms| {
        let mut e = AlgebraElement::zero();
        for (idx, c) in terms {
            e.add_term(b[idx].clone(), c, &spec);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_associative_and_unital(
        a in element_strategy(3),
        b in element_strategy(3),
        c in element_strategy(3),
    ) {
        let s = AlgebraSpec::new(3);
        let left = multiply(&multiply(&a, &b, &s), &c, &s);
        let right = multiply(&a, &multiply(&b, &c, &s), &s);
        prop_assert_eq!(left, right);
        let u = AlgebraElement::unit(&s);
        prop_assert_eq!(multiply(&u, &a, &s), a.clone());
        prop_assert_eq!(multiply(&a, &u, &s), a);
    }

    #[test]
    fn hom_shift_covariance_and_additivity(
        w in word_strategy(3, 5),
        j in 0usize..=3,
        a in -2i32..=2,
        b in -2i32..=2,
    ) {
        let s = AlgebraSpec::new(3);
        let c = apply_word(&w, &projective(j, s)).unwrap();
        for i in 0..=3 {
            let base = hom_poincare(i, &c).poly;
            let shifted = hom_poincare(i, &shift(&c, a, b)).poly;
            prop_assert_eq!(&shifted, &base.shifted(-a, b));
            let doubled = hom_poincare(i, &direct_sum(&c, &c).unwrap()).poly;
            prop_assert_eq!(doubled, base.scale(2));
        }
    }

    #[test]
    fn reduce_is_stable_and_hom_invariant(
        w in word_strategy(3, 5),
        j in 0usize..=3,
    ) {
        let s = AlgebraSpec::new(3);
        let c = apply_word(&w, &projective(j, s)).unwrap();
        // pad with an acyclic piece and a shifted spectator, then reduce
        let padded = direct_sum(&c, &shift(&projective(j, s), 1, 0)).unwrap();
        let r = reduce(&padded);
        prop_assert_eq!(reduce(&r).summand_multiset(), r.summand_multiset());
        for i in 0..=3 {
            prop_assert_eq!(hom_poincare(i, &padded).poly, hom_poincare(i, &r).poly);
        }
    }

    #[test]
    fn twist_round_trip_and_node_bijection(
        w in word_strategy(3, 5),
        j in 0usize..=3,
        k in 1usize..=3,
    ) {
        let m = 3;
        let c = apply_word_curve(&w, &basic_curve(m, j)).unwrap();
        let t = twist(&c, k, 1).unwrap();
        prop_assert_eq!(&twist(&t, k, -1).unwrap(), &c);
        // nodes away from the twisting line are in bigrading-preserving
        // bijection
        let nodes = |cv: &zigzag_core::BigradedNormalCurve| {
            let mut v: Vec<_> = cv
                .crossings()
                .iter()
                .filter(|cr| cr.line != k)
                .map(|cr| (cr.line, cr.x1, cr.x2))
                .collect();
            v.sort_unstable();
            v
        };
        prop_assert_eq!(nodes(&c), nodes(&t));
    }

    #[test]
    fn curve_and_complex_sides_agree(
        w in word_strategy(2, 6),
        j in 0usize..=2,
    ) {
        let s = AlgebraSpec::new(2);
        let c = apply_word(&w, &projective(j, s)).unwrap();
        let curve = apply_word_curve(&w, &basic_curve(2, j)).unwrap();
        prop_assert_eq!(
            fingerprint(&zigzag_core::curves::l_complex(&curve, s).unwrap()),
            c.summand_multiset()
        );
        for i in 0..=2 {
            prop_assert_eq!(ibigr_basic(i, &curve).unwrap(), hom_poincare(i, &c).poly);
        }
    }
}
