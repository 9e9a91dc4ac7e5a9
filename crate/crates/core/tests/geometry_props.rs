use std::iter;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seshadri_core::geometry::{
    cone_ideal, cut_out_degree, line_scheme, multiplicity_at, normalize_point, ord_at,
    slice_decomposition, Order, DEFAULT_MAX_M,
};
use seshadri_core::groebner::QIdeal;
use seshadri_core::poly::{default_names, parse_polynomial, rat, Field, Monomial, MonomialOrder, QPoly, Rational};
use seshadri_core::seshadri::random::random_form;
use seshadri_core::seshadri::{aux_divisors, Options};

fn p(n: usize, s: &str) -> QPoly {
    parse_polynomial(s, &default_names(n)).unwrap()
}

fn ideal(n: usize, gens: &[&str]) -> QIdeal {
    QIdeal::new(n, gens.iter().map(|g| p(n, g)).collect())
}

fn pt(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&x| rat(x)).collect()
}

fn base_point(n: usize) -> Vec<Rational> {
    iter::once(rat(1)).chain(std::iter::repeat_n(rat(0), n - 1)).collect()
}

/// `Σ_{i >= low} x0^{d-i} f^i` with random slices, so `[1:0:…:0]` has order at least `low`.
fn form_with_low_order<R: Rng>(rng: &mut R, n: usize, d: u32, low: u32) -> QPoly {
    let mut f = QPoly::zero(n, MonomialOrder::GrevLex);
    for i in low..=d {
        let mut shift = vec![0u16; n];
        shift[0] = (d - i) as u16;
        let slice = random_form(rng, n, 1, i);
        f = f.add(&slice.mul_term(&Monomial::from_exponents(&shift), &rat(1)));
    }
    f
}

/// Whether every generator vanishes on the line through `point` in direction `dir`.
fn line_lies_on(gens: &[QPoly], point: &[Rational], dir: &[Rational]) -> bool {
    let images: Vec<QPoly> = point
        .iter()
        .zip(dir)
        .map(|(a, b)| {
            let s = QPoly::var(2, 0).scale(a);
            s.add(&QPoly::var(2, 1).scale(b))
        })
        .collect();
    gens.iter().all(|g| g.substitute(&images).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn slices_reassemble(seed in any::<u64>(), d in 1u32..5, low in 1u32..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = form_with_low_order(&mut rng, 4, d.max(low), low.min(d));
        let dec = slice_decomposition(&f).unwrap();
        prop_assert_eq!(dec.reassemble(), f.clone());
        prop_assert_eq!(dec.partial_sum(dec.degree() as usize), f);
        for i in 1..=dec.degree() as usize {
            let s = dec.slice(i);
            prop_assert!(s.is_zero() || (s.is_homogeneous() && s.total_degree() == Some(i as u32)));
            prop_assert!(s.terms().iter().all(|(m, _)| m.exponent(0) == 0));
        }
    }
}

#[test]
fn line_scheme_matches_lines_on_rational_directions() {
    let cases = [
        (4, vec!["x0*x3 - x1*x2"], pt(&[1, 2, 3, 6])),
        (4, vec!["x1*x3 - x2^2"], pt(&[1, 0, 0, 0])),
        (4, vec!["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], pt(&[1, 1, 1, 1])),
        (4, vec!["x0^2*x3 - x1^3 + x0*x1*x2 - x2^2*x3"], pt(&[1, 0, 0, 0])),
        (5, vec!["x0*x4 - x1*x3", "x2^2 - x1*x3 + x0*x2 - x0*x1"], pt(&[1, 0, 0, 0, 0])),
        (4, vec!["x3", "x2"], pt(&[1, 5, 0, 0])),
    ];
    for (n, gens, point) in cases {
        let i = ideal(n, &gens);
        let x = normalize_point(&i, &point).unwrap();
        let lines = line_scheme(&x, None).unwrap();
        // every direction with entries in -2..=2, up to sign
        let mut checked = 0;
        for code in 0..5usize.pow(n as u32 - 1) {
            let mut c = code;
            let dir: Vec<i64> = (0..n - 1).map(|_| { let v = (c % 5) as i64 - 2; c /= 5; v }).collect();
            if dir.iter().all(|&v| v == 0) {
                continue;
            }
            let v: Vec<Rational> = dir.iter().map(|&d| rat(d)).collect();
            let on_scheme = lines.ideal.generators().iter().all(|g| g.evaluate(&v).unwrap().is_zero());
            let full: Vec<Rational> = iter::once(rat(0)).chain(v.iter().cloned()).collect();
            let original = x.to_original(&full);
            assert_eq!(on_scheme, line_lies_on(i.generators(), &point, &original), "{gens:?} at {dir:?}");
            checked += 1;
        }
        assert!(checked > 0);
    }
}

#[test]
fn cone_law() {
    let samples = [
        (3, vec!["x0*x2 - x1^2"]),
        (4, vec!["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
        (3, vec!["x0^3 + x1^3 + x2^3"]),
        (2, vec!["x0*x1*(x0 - x1)"]),
        (4, vec!["x0*x1 - x2*x3", "x0^2 + x1^2 - x2^2 - 2*x3^2"]),
    ];
    for (n, gens) in samples {
        let z = ideal(n, &gens);
        let cone = cone_ideal(&z);
        let dz = z.hilbert_data().unwrap();
        let dc = cone.hilbert_data().unwrap();
        assert_eq!(dc.dim, dz.dim + 1);
        assert_eq!(dc.degree, dz.degree);
        let vertex = normalize_point(&cone, &base_point(n + 1)).unwrap();
        assert_eq!(multiplicity_at(&vertex, DEFAULT_MAX_M).unwrap() as u64, dz.degree, "{gens:?}");
    }
}

#[test]
fn bezout_inequality_for_plane_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    while pairs < 10 {
        let (df, dg) = (rng.gen_range(2..=4), rng.gen_range(1..=3));
        let (lf, lg) = (rng.gen_range(1..=df.min(3)), rng.gen_range(1..=dg));
        let f = form_with_low_order(&mut rng, 3, df, lf);
        let g = form_with_low_order(&mut rng, 3, dg, lg);
        let x = normalize_point(&QIdeal::new(3, vec![f.clone()]), &base_point(3)).unwrap();
        let mult = multiplicity_at(&x, DEFAULT_MAX_M).unwrap();
        let Order::Finite(ord) = ord_at(&g, &x, DEFAULT_MAX_M).unwrap() else {
            continue;
        };
        assert!(df * dg >= ord * mult, "{f} / {g}: {ord} * {mult} > {df} * {dg}");
        pairs += 1;
    }
}

#[test]
fn cut_out_degree_at_most_degree() {
    let cases = [
        (4, vec!["x0*x3 - x1*x2"], pt(&[1, 0, 0, 0])),
        (4, vec!["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], pt(&[1, 2, 4, 8])),
        (4, vec!["x0^3 + x1^3 + x2^3 + x3^3"], pt(&[1, 6, 8, -9])),
        (3, vec!["x0*x2^2 - x1^3"], pt(&[1, 0, 0])),
        (4, vec!["x3", "x0*x2 - x1^2"], pt(&[1, 0, 0, 0])),
        (5, vec!["x0*x4 - x1*x3 + x2^2"], pt(&[1, 0, 0, 0, 0])),
        (4, vec!["x2", "x1*x3"], pt(&[1, 0, 0, 0])),
    ];
    for (n, gens, point) in cases {
        let x = normalize_point(&ideal(n, &gens), &point).unwrap();
        let dp = cut_out_degree(&x).unwrap();
        let deg = x.ideal().hilbert_data().unwrap().degree;
        assert!(dp as u64 <= deg, "{gens:?}: d_p = {dp} > {deg}");
    }
    // a plane and a line through p: only the plane counts towards the degree
    let mixed = normalize_point(&ideal(4, &["x1*x3", "x2*x3"]), &pt(&[1, 0, 0, 0])).unwrap();
    assert_eq!(cut_out_degree(&mixed).unwrap(), 2);
    assert_eq!(mixed.ideal().hilbert_data().unwrap().degree, 1);
    // the twisted cubic needs quadrics
    let tc = normalize_point(&ideal(4, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]), &pt(&[1, 0, 0, 0])).unwrap();
    assert_eq!(cut_out_degree(&tc).unwrap(), 2);
}

#[test]
fn auxiliary_divisors_orders_and_common_zero() {
    let opts = Options::default();
    let cases = [
        (4, vec!["x0^3 + x1^3 + x2^3 + x3^3"], pt(&[1, 6, 8, -9])),
        (4, vec!["x0*x3 - x1*x2"], pt(&[1, 0, 0, 0])),
        (3, vec!["x0*x2 - x1^2"], pt(&[1, 0, 0])),
        (4, vec!["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], pt(&[1, 0, 0, 0])),
        (4, vec!["x0^2*x3 - x1^3 + x0*x1*x2 - x2^2*x3"], pt(&[1, 0, 0, 0])),
    ];
    for (n, gens, point) in cases {
        let x = normalize_point(&ideal(n, &gens), &point).unwrap();
        let aux = aux_divisors(&x, &opts).unwrap();
        for d in &aux.divisors {
            assert!(d.ord >= Order::Finite(d.i as u32 + 1), "{gens:?}: D_{}^{} has {:?}", d.j, d.i, d.ord);
        }
        let empty = line_scheme(&x, None).unwrap().is_empty();
        assert_eq!(aux.common_zero, empty, "{gens:?}");
    }
}
