use std::iter;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seshadri_core::geometry::{line_scheme, multiplicity_at, normalize_point, DEFAULT_MAX_M};
use seshadri_core::groebner::QIdeal;
use seshadri_core::oracle::{agreement, count_lines_mod_q, lowest_form_mult, Agreement, ModularInstance, DEFAULT_PRIMES};
use seshadri_core::poly::{default_names, parse_polynomial, rat, Field, Fp, Monomial, MonomialOrder, QPoly, Rational};
use seshadri_core::seshadri::random::{random_form, random_linear_through};

fn p(n: usize, s: &str) -> QPoly {
    parse_polynomial(s, &default_names(n)).unwrap()
}

fn pt(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&x| rat(x)).collect()
}

fn base_point(n: usize) -> Vec<Rational> {
    iter::once(rat(1)).chain(std::iter::repeat_n(rat(0), n - 1)).collect()
}

fn form_with_low_order<R: Rng>(rng: &mut R, n: usize, d: u32, low: u32) -> QPoly {
    let mut f = QPoly::zero(n, MonomialOrder::GrevLex);
    for i in low..=d {
        let mut shift = vec![0u16; n];
        shift[0] = (d - i) as u16;
        f = f.add(&random_form(rng, n, 1, i).mul_term(&Monomial::from_exponents(&shift), &rat(1)));
    }
    f
}

/// Moves `[1:0:0]` to `[1:a:b]` by `x1 -> x1 - a x0`, `x2 -> x2 - b x0`.
fn translate(f: &QPoly, a: i64, b: i64) -> QPoly {
    let m = vec![
        vec![rat(1), rat(0), rat(0)],
        vec![rat(-a), rat(1), rat(0)],
        vec![rat(-b), rat(0), rat(1)],
    ];
    f.substitute_linear(&m).unwrap()
}

#[test]
fn lowest_form_agrees_with_hilbert_samuel() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = [0usize; 4];
    for k in 0..15 {
        let mult = 1 + (k % 3) as u32;
        let d = mult + rng.gen_range(0..=2);
        let f = form_with_low_order(&mut rng, 3, d, mult);
        let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let g = translate(&f, a, b);
        let point = pt(&[1, a, b]);
        let oracle = lowest_form_mult(&g, &point).unwrap();
        let x = normalize_point(&QIdeal::new(3, vec![g.clone()]), &point).unwrap();
        assert_eq!(multiplicity_at(&x, DEFAULT_MAX_M).unwrap(), oracle, "{g} at {point:?}");
        seen[oracle as usize] += 1;
    }
    assert!(seen[1] > 0 && seen[2] > 0 && seen[3] > 0, "{seen:?}");
}

fn reduce_mod(f: &QPoly, q: u32) -> Option<seshadri_core::oracle::FpPoly> {
    f.try_map_coeffs(|c| Fp::from_rational(c, q))
}

#[test]
fn modular_directions_satisfy_the_slices() {
    let cases = [
        (4, vec!["x0*x3 - x1*x2"], pt(&[1, 2, 3, 6])),
        (4, vec!["x1*x3 - x2^2"], pt(&[1, 0, 0, 0])),
        (5, vec!["x0*x4 - x1*x3 + x2^2"], pt(&[1, 0, 0, 0, 0])),
        (4, vec!["x2*(x0^2 + x1*x3) + x3*(x1^2 - x0*x3)"], pt(&[1, 0, 0, 0])),
        (4, vec!["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], pt(&[1, 1, 1, 1])),
    ];
    for (n, gens, point) in cases {
        let i = QIdeal::new(n, gens.iter().map(|g| p(n, g)).collect());
        let x = normalize_point(&i, &point).unwrap();
        let scheme = line_scheme(&x, None).unwrap();
        for q in DEFAULT_PRIMES {
            let inst = ModularInstance::new(q, i.generators(), &point).unwrap();
            let pivot = inst.pivot();
            for v in count_lines_mod_q(&inst).directions {
                let coords: Vec<Fp> = v
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != pivot)
                    .map(|(_, &c)| Fp::new(c as i64, q))
                    .collect();
                for g in scheme.ideal.generators() {
                    let gq = reduce_mod(g, q).unwrap();
                    assert!(gq.evaluate(&coords).unwrap().is_zero(), "{gens:?} mod {q}: {v:?} misses {g}");
                }
            }
        }
    }
}

#[test]
fn gb_and_oracle_agree_on_random_surfaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let point = base_point(4);
    let mut tallies = [0usize; 2];
    for k in 0..24 {
        let f = match k % 3 {
            // general cubic through p
            0 => form_with_low_order(&mut rng, 4, 3, 1),
            // cubic containing the rational line x2 = x3 = 0
            1 => {
                let a = random_form(&mut rng, 4, 0, 2);
                let b = random_form(&mut rng, 4, 0, 2);
                QPoly::var(4, 2).mul(&a).add(&QPoly::var(4, 3).mul(&b))
            }
            // quadric through p: its lines may be irrational
            _ => {
                let l = random_linear_through(&mut rng, &point);
                form_with_low_order(&mut rng, 4, 2, 2).add(&l.mul(&QPoly::var(4, 0)))
            }
        };
        let x = normalize_point(&QIdeal::new(4, vec![f.clone()]), &point).unwrap();
        let empty = line_scheme(&x, None).unwrap().is_empty();
        let counts: Vec<_> = DEFAULT_PRIMES
            .iter()
            .filter_map(|&q| ModularInstance::new(q, std::slice::from_ref(&f), &point).ok())
            .map(|inst| count_lines_mod_q(&inst))
            .collect();
        assert_eq!(counts.len(), 3);
        let verdict = agreement(empty, &counts);
        assert_ne!(verdict, Agreement::Disagree, "{f}");
        if k % 3 == 1 {
            // a rational line reduces to a line at every prime
            assert!(!empty);
            assert_eq!(verdict, Agreement::Agree, "{f}");
        }
        tallies[empty as usize] += 1;
    }
    assert!(tallies[0] > 0 && tallies[1] > 0, "{tallies:?}");
}

#[test]
fn fermat_cubic_lines_depend_on_the_prime() {
    let f = p(4, "x0^3 + x1^3 + x2^3 + x3^3");
    let point = pt(&[1, 6, 8, -9]);
    let x = normalize_point(&QIdeal::new(4, vec![f.clone()]), &point).unwrap();
    assert!(line_scheme(&x, None).unwrap().is_empty());
    let count = |q| count_lines_mod_q(&ModularInstance::new(q, std::slice::from_ref(&f), &point).unwrap()).count;
    // q = 2 mod 3: agreement with the empty line scheme
    for q in [5, 11, 17] {
        assert_eq!(count(q), 0, "q = {q}");
    }
    // q = 1 mod 3: the 27 lines are defined over F_q and cover every point
    for q in [7, 13] {
        assert!(count(q) > 0, "q = {q}");
    }
}
