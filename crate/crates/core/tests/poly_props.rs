use proptest::prelude::*;
use seshadri_core::poly::linear::invert;
use seshadri_core::poly::{default_names, parse_polynomial, rat, Monomial, MonomialOrder, QPoly, Rational};

const N: usize = 3;

fn poly_strategy(max_deg: u16) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, N), -6i64..=6), 0..6).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(&e), rat(c)));
        QPoly::from_terms(N, MonomialOrder::GrevLex, terms)
    })
}

fn form_strategy(degree: u32) -> impl Strategy<Value = QPoly> {
    let monos = Monomial::all_of_degree(N, degree);
    prop::collection::vec(-5i64..=5, monos.len()).prop_map(move |cs| {
        let terms = monos.iter().cloned().zip(cs.into_iter().map(rat));
        QPoly::from_terms(N, MonomialOrder::GrevLex, terms)
    })
}

fn point_strategy() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-7i64..=7, 1i64..=4), N)
        .prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect())
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, N), N)
        .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(rat).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(2)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&a.neg()), QPoly::zero(N, MonomialOrder::GrevLex));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly_strategy(3), b in poly_strategy(3), p in point_strategy()) {
        let ea = a.evaluate(&p).unwrap();
        let eb = b.evaluate(&p).unwrap();
        prop_assert_eq!(a.mul(&b).evaluate(&p).unwrap(), &ea * &eb);
        prop_assert_eq!(a.add(&b).evaluate(&p).unwrap(), ea + eb);
    }

    #[test]
    fn linear_substitution_round_trip(f in poly_strategy(3), m in matrix_strategy()) {
        let Some(inv) = invert(&m) else { return Ok(()); };
        let g = f.substitute_linear(&m).unwrap();
        prop_assert_eq!(g.substitute_linear(&inv).unwrap(), f);
    }

    #[test]
    fn substitution_preserves_homogeneity(d in 1u32..4, m in matrix_strategy(), cs in prop::collection::vec(-5i64..=5, 10)) {
        let monos = Monomial::all_of_degree(N, d);
        let terms = monos.into_iter().zip(cs.into_iter().map(rat));
        let f = QPoly::from_terms(N, MonomialOrder::GrevLex, terms);
        prop_assume!(invert(&m).is_some());
        let g = f.substitute_linear(&m).unwrap();
        prop_assert!(g.is_homogeneous());
        if !g.is_zero() {
            prop_assert_eq!(g.total_degree(), Some(d));
        }
    }

    #[test]
    fn products_of_forms_are_forms(a in form_strategy(2), b in form_strategy(3)) {
        let c = a.mul(&b);
        prop_assert!(c.is_homogeneous());
        if !c.is_zero() {
            prop_assert_eq!(c.total_degree(), Some(5));
        }
    }

    #[test]
    fn display_reparses(f in poly_strategy(4)) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, &default_names(N)).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(2), b in poly_strategy(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }
}
