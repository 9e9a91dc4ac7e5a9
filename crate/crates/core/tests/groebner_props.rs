use proptest::prelude::*;
use seshadri_core::groebner::hilbert::binomial;
use seshadri_core::groebner::{
    groebner_basis, intersect, irrelevant_ideal, is_groebner_basis, quotient, quotient_by, reduce,
    saturate, QIdeal,
};
use seshadri_core::poly::{default_names, parse_polynomial, rat, Monomial, MonomialOrder, QPoly};

const N: usize = 4;

/// Sparse form of the given degree with at most three terms.
fn sparse_form(degree: u32) -> impl Strategy<Value = QPoly> {
    let monos = Monomial::all_of_degree(N, degree);
    let count = monos.len();
    prop::collection::vec((0..count, prop_oneof![-4i64..=-1, 1i64..=4]), 1..=3).prop_map(move |picks| {
        let terms = picks.into_iter().map(|(i, c)| (monos[i].clone(), rat(c)));
        QPoly::from_terms(N, MonomialOrder::GrevLex, terms)
    })
    .prop_filter("nonzero", |f| !f.is_zero())
}

fn ideal_strategy() -> impl Strategy<Value = QIdeal> {
    prop::collection::vec((1u32..=2).prop_flat_map(sparse_form), 1..=3)
        .prop_map(|gens| QIdeal::new(N, gens))
}

fn multiplier() -> impl Strategy<Value = QPoly> {
    (0u32..=1).prop_flat_map(sparse_form)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_s_pair_reduces_to_zero(i in ideal_strategy()) {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Block { split: 2 }] {
            let gb = groebner_basis(i.generators(), order);
            prop_assert!(is_groebner_basis(&gb));
            for g in i.generators() {
                prop_assert!(reduce(&g.with_order(order), &gb).is_zero());
            }
            // reduced bases are fixed points
            prop_assert_eq!(groebner_basis(&gb, order), gb);
        }
    }

    #[test]
    fn combinations_are_members(i in ideal_strategy(), a in multiplier(), b in multiplier()) {
        let gens = i.generators();
        let mut f = gens[0].mul(&a);
        if gens.len() > 1 {
            f = f.add(&gens[1].mul(&b));
        }
        prop_assert!(i.contains(&f));
        let outside = QPoly::var(N, 0).pow(7).add(&QPoly::from_int(1, N));
        prop_assert!(i.is_unit() || !i.contains(&outside));
    }

    #[test]
    fn hilbert_data_is_order_independent(i in ideal_strategy()) {
        let a = i.hilbert_data().unwrap();
        let b = i.hilbert_data_with_order(MonomialOrder::Lex).unwrap();
        prop_assert_eq!(&a, &b);
        for d in 1..=4u64 {
            let piece = i.graded_piece(d as i64).unwrap();
            let ambient = binomial(d + N as u64 - 1, N as u64 - 1);
            prop_assert_eq!(ambient - a.hilbert_function(d), (piece.len() as u64).into());
        }
    }

    #[test]
    fn intersection_and_quotient_identities(i in ideal_strategy(), j in ideal_strategy()) {
        let k = intersect(&i, &j);
        prop_assert!(i.contains_ideal(&k) && j.contains_ideal(&k));
        prop_assert!(k.contains_ideal(&i.product(&j)));
        let q = quotient(&i, &j);
        prop_assert!(q.contains_ideal(&i));
        prop_assert!(i.contains_ideal(&q.product(&j)));
        let f = &j.generators()[0];
        let qf = quotient_by(&i, f);
        for g in qf.generators() {
            prop_assert!(i.contains(&g.mul(f)));
        }
    }

    #[test]
    fn saturation_grows_and_is_idempotent(i in ideal_strategy()) {
        let m = irrelevant_ideal(N, &rat(1));
        let s = saturate(&i, &m);
        prop_assert!(s.contains_ideal(&i));
        prop_assert!(s.same_as(&saturate(&s, &m)));
        // saturation does not change the projective scheme
        let (a, b) = (i.hilbert_data().unwrap(), s.hilbert_data().unwrap());
        prop_assert_eq!((a.dim, a.degree), (b.dim, b.degree));
    }
}

#[test]
fn saturation_removes_an_embedded_point() {
    let names = default_names(3);
    let p = |s: &str| parse_polynomial(s, &names).unwrap();
    // (x0^2, x0*x1) = (x0) ∩ (x0^2, x1): the line x0 = 0 with an embedded point at [0:0:1]
    let i = QIdeal::new(3, vec![p("x0^2"), p("x0*x1")]);
    let s = saturate(&i, &QIdeal::new(3, vec![p("x0"), p("x1")]));
    assert!(s.same_as(&QIdeal::new(3, vec![p("x0")])));
    // irrelevant torsion
    let t = QIdeal::new(3, vec![p("x0^2"), p("x0*x1"), p("x0*x2")]);
    assert!(saturate(&t, &irrelevant_ideal(3, &rat(1))).same_as(&QIdeal::new(3, vec![p("x0")])));
}

#[test]
fn twisted_cubic_hilbert_data() {
    let names = default_names(4);
    let p = |s: &str| parse_polynomial(s, &names).unwrap();
    let i = QIdeal::new(4, vec![p("x0*x2 - x1^2"), p("x1*x3 - x2^2"), p("x0*x3 - x1*x2")]);
    let h = i.hilbert_data().unwrap();
    assert_eq!((h.dim, h.degree), (1, 3));
    assert_eq!(h.hilbert_poly, vec![rat(1), rat(3)]);
}
