use proptest::prelude::*;

use num_rational::{BigRational, Rational64};
use triples_hodge::triples_low_rank::{chamber_samples, hodge_12, hodge_21, TripleType};
use triples_hodge::xseries::{GeomExpr, Pole, XPoly};
use triples_hodge::BiLaurent;

fn laurent() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-3i64..4, -3i64..4, -6i64..7), 0..6).prop_map(BiLaurent::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = BiLaurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = BigRational> {
    (-5i64..6, 1i64..4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &BiLaurent::one(), a.clone());
    }

    #[test]
    fn exact_division_recovers_factor(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), x in point(), y in point()) {
        let lhs = (&a * &b).evaluate(&x, &y).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&x, &y).unwrap() * b.evaluate(&x, &y).unwrap());
    }

    #[test]
    fn reciprocal_dual_is_an_involution(a in laurent(), n in -4i64..8) {
        prop_assert_eq!(a.reciprocal_dual(n).reciprocal_dual(n), a);
    }

    #[test]
    fn swap_commutes_with_diagonal(a in laurent()) {
        prop_assert_eq!(a.swap_uv().diagonal(), a.diagonal());
        prop_assert_eq!(a.swap_uv().swap_uv(), a);
    }

    #[test]
    fn json_round_trip(a in laurent()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BiLaurent>(&s).unwrap(), a);
    }

    #[test]
    fn coefficient_extraction_is_linear(
        n1 in prop::collection::vec(-3i64..4, 1..4),
        n2 in prop::collection::vec(-3i64..4, 1..4),
        offset in 0i64..4,
        k in -2i64..3,
    ) {
        let xp = |cs: &[i64]| XPoly::from_coeffs(cs.iter().map(|c| BiLaurent::constant(*c)).collect());
        let poles = || vec![
            Pole::simple(BiLaurent::one()).unwrap(),
            Pole::new(BiLaurent::uv_pow(k), 2).unwrap(),
        ];
        let e1 = GeomExpr::new(xp(&n1), poles(), offset);
        let e2 = GeomExpr::new(xp(&n2), poles(), offset);
        let sum = GeomExpr::new(xp(&n1).add(&xp(&n2)), poles(), offset);
        prop_assert_eq!(sum.coeff_x0(), e1.coeff_x0() + e2.coeff_x0());
        prop_assert_eq!(e1.coeff_x0_truncated(e1.truncation_bound() + 3), e1.coeff_x0());
    }

    #[test]
    fn low_rank_moduli_are_smooth_projective(g in 2u32..4, d1 in 1i64..9, d2 in -2i64..2) {
        let t = TripleType::rank21(g, d1, d2);
        prop_assume!(t.slope_gap().unwrap() > Rational64::from_integer(0));
        for (s, _) in chamber_samples(&t).unwrap() {
            let h = hodge_21(&t, &s).unwrap();
            prop_assert!(h.projective_failures().is_empty(), "{} at {}", t, s);
            prop_assert_eq!(hodge_12(&t.dual(), &s).unwrap().poly, h.poly);
        }
    }
}
