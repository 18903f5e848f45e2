//! Property tests for the exact symbolic engine: ring laws, Hopf axioms and
//! the wire format, over randomly generated elements. Everything here is
//! exact arithmetic, so the assertions are structural equalities.

use kappa_minkowski::hopf::{
    hopf_element_from_json, hopf_element_to_json, HopfElement, LaurentScalar, Monomial, Rat,
};
use proptest::prelude::*;

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..=2, 0u32..=2, -2i32..=2).prop_map(|(i, j, k)| Monomial::new(i, j, k))
}

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    (-6i64..=6, 1i64..=4, -2i64..=2)
        .prop_map(|(num, den, exp)| LaurentScalar::term(Rat::new(num.into(), den.into()), exp))
}

fn element() -> impl Strategy<Value = HopfElement> {
    prop::collection::vec((monomial(), scalar()), 1..4).prop_map(|terms| {
        let mut out = HopfElement::zero();
        for (m, c) in terms {
            out.add_scaled_monomial(m, &c);
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative(a in element(), b in element()) {
        prop_assert_eq!(a.multiply(&b), b.multiply(&a));
    }

    #[test]
    fn product_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn coproduct_is_an_algebra_map(a in element(), b in element()) {
        prop_assert_eq!(
            a.multiply(&b).coproduct(),
            a.coproduct().multiply(&b.coproduct())
        );
    }

    #[test]
    fn hopf_axioms_hold(a in element()) {
        prop_assert!(a.hopf_axioms_check());
    }

    #[test]
    fn antipode_squares_to_identity(a in element()) {
        prop_assert_eq!(a.antipode().antipode(), a);
    }

    #[test]
    fn counit_is_multiplicative(a in element(), b in element()) {
        let lhs = a.multiply(&b).counit();
        let rhs = &a.counit() * &b.counit();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(a in element()) {
        let v = hopf_element_to_json(&a).unwrap();
        prop_assert_eq!(hopf_element_from_json(&v).unwrap(), a);
    }
}
