//! Random "general" data: small integer coefficients from a seeded generator.

use rand::Rng;

use crate::poly::{rat, Field, Monomial, MonomialOrder, QPoly, Rational};

/// Coefficients are drawn uniformly from `-COEFF_RANGE..=COEFF_RANGE`.
pub const COEFF_RANGE: i64 = 9;

/// Random form of degree `degree` in the variables `first..nvars`.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, first: usize, degree: u32) -> QPoly {
    let terms = Monomial::all_of_degree(nvars - first, degree)
        .into_iter()
        .map(|m| m.insert_vars(0, first))
        .map(|m| (m, rat(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))))
        .collect::<Vec<_>>();
    let f = QPoly::from_terms(nvars, MonomialOrder::GrevLex, terms);
    if f.is_zero() {
        // all coefficients zero has negligible probability but must not escape
        return random_form(rng, nvars, first, degree);
    }
    f
}

/// Random linear form vanishing at `point`.
pub fn random_linear_through<R: Rng>(rng: &mut R, point: &[Rational]) -> QPoly {
    let n = point.len();
    let pivot = point.iter().position(|c| !c.is_zero()).expect("nonzero point");
    loop {
        let mut coeffs: Vec<Rational> = (0..n)
            .map(|_| rat(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)))
            .collect();
        let rest = coeffs
            .iter()
            .zip(point)
            .enumerate()
            .filter(|(j, _)| *j != pivot)
            .fold(rat(0), |acc, (_, (c, x))| acc + c * x);
        coeffs[pivot] = -rest / &point[pivot];
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| (Monomial::var(n, j), c));
        let f = QPoly::from_terms(n, MonomialOrder::GrevLex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random form of degree `degree` vanishing at `point`: `l · g` plus a multiple of a
/// second such product, with `l` linear through `point`.
pub fn random_form_through<R: Rng>(rng: &mut R, point: &[Rational], degree: u32) -> QPoly {
    let n = point.len();
    let mut f = QPoly::zero(n, MonomialOrder::GrevLex);
    for _ in 0..n {
        let l = random_linear_through(rng, point);
        let g = if degree > 1 {
            random_form(rng, n, 0, degree - 1)
        } else {
            QPoly::from_int(rng.gen_range(1..=COEFF_RANGE), n)
        };
        f = f.add(&l.mul(&g));
    }
    if f.is_zero() {
        return random_form_through(rng, point, degree);
    }
    f
}
