use rand::Rng;
use rayon::prelude::*;

use crate::poly::linear::{nullspace, rank, solve_particular};
use crate::poly::{Field, Fp, QPoly, Rational};

use super::modular::{restrict, ModularInstance, Univariate};
use super::OracleError;

/// Lines through the base point over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCount {
    pub q: u32,
    pub count: usize,
    /// Direction vectors `v` (with `v_pivot = 0`, first nonzero entry 1), sorted.
    pub directions: Vec<Vec<u32>>,
}

/// Decodes the `index`-th normalized point of `P^{k-1}(F_q)`.
fn direction(index: u64, k: usize, q: u64) -> Vec<u64> {
    // points with leading 1 in position s: q^(k-1-s) of them
    let mut rest = index;
    for s in 0..k {
        let block = q.pow((k - 1 - s) as u32);
        if rest < block {
            let mut v = vec![0u64; k];
            v[s] = 1;
            let mut r = rest;
            for slot in v.iter_mut().skip(s + 1).rev() {
                *slot = r % q;
                r /= q;
            }
            return v;
        }
        rest -= block;
    }
    unreachable!("index beyond the projective space")
}

fn projective_size(k: usize, q: u64) -> u64 {
    (0..k).map(|s| q.pow(s as u32)).sum()
}

/// Number of directions through a point of `P^{nvars-1}(F_q)`, i.e. `#P^{nvars-2}(F_q)`.
pub fn direction_count(nvars: usize, q: u32) -> u64 {
    projective_size(nvars - 1, q as u64)
}

fn line_lies_on(inst: &ModularInstance, v: &[Fp]) -> bool {
    let z = inst.zero();
    let curve: Vec<Univariate> = inst
        .point()
        .iter()
        .zip(v)
        .map(|(p, d)| vec![*p, *d])
        .collect();
    inst.generators()
        .iter()
        .all(|g| restrict(g, &curve, z).iter().all(|c| c.is_zero()))
}

/// Enumerates every direction through `p` and keeps those whose line lies on `X`.
pub fn count_lines_mod_q(inst: &ModularInstance) -> LineCount {
    let q = inst.q() as u64;
    let n = inst.nvars();
    let pivot = inst.pivot();
    let k = n - 1;
    let total = projective_size(k, q);
    let mut directions: Vec<Vec<u32>> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let short = direction(idx, k, q);
            let mut v = Vec::with_capacity(n);
            let mut it = short.iter();
            for j in 0..n {
                let c = if j == pivot { 0 } else { *it.next().unwrap() };
                v.push(Fp::new(c as i64, inst.q()));
            }
            line_lies_on(inst, &v).then(|| v.iter().map(|c| c.value()).collect())
        })
        .collect();
    directions.sort();
    LineCount {
        q: inst.q(),
        count: directions.len(),
        directions,
    }
}

/// A conic `t ↦ p + t·v + t²·w` lying on `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicWitness {
    pub q: u32,
    pub v: Vec<u32>,
    pub w: Vec<u32>,
    pub draws: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicSearch {
    Found(ConicWitness),
    /// Inconclusive: no conic turned up within the budget.
    NotFound { draws: usize },
}

fn gradient_rows(inst: &ModularInstance) -> Vec<Vec<Fp>> {
    let n = inst.nvars();
    inst.generators()
        .iter()
        .map(|g| {
            (0..n)
                .map(|i| g.partial_derivative(i).evaluate(inst.point()).expect("sizes match"))
                .collect()
        })
        .collect()
}

fn random_combination<R: Rng>(rng: &mut R, basis: &[Vec<Fp>], q: u32, n: usize) -> Vec<Fp> {
    let mut v = vec![Fp::new(0, q); n];
    for b in basis {
        let c = Fp::new(rng.gen_range(0..q as i64), q);
        for (x, y) in v.iter_mut().zip(b) {
            *x = x.plus(&c.times(y));
        }
    }
    v
}

/// Randomized search for a smooth conic through `p` on `X`.
///
/// `v` is drawn from the tangent space at `p` and `w` from the affine space making the
/// `t²` coefficients vanish, so only the higher coefficients are left to chance.
pub fn find_conic_mod_q<R: Rng>(inst: &ModularInstance, budget: usize, rng: &mut R) -> ConicSearch {
    let q = inst.q();
    let n = inst.nvars();
    let z = inst.zero();
    let jac = gradient_rows(inst);
    let tangent = nullspace(&jac, n, &z);
    let kernel = tangent.clone();
    for draw in 1..=budget {
        let v = random_combination(rng, &tangent, q, n);
        // t^2 coefficient of g(p + t v)
        let line: Vec<Univariate> = inst.point().iter().zip(&v).map(|(p, d)| vec![*p, *d]).collect();
        let rhs: Vec<Fp> = inst
            .generators()
            .iter()
            .map(|g| restrict(g, &line, z).get(2).copied().unwrap_or(z).negated())
            .collect();
        let Some(w0) = solve_particular(&jac, &rhs, n, &z) else {
            continue;
        };
        let shift = random_combination(rng, &kernel, q, n);
        let w: Vec<Fp> = w0.iter().zip(&shift).map(|(a, b)| a.plus(b)).collect();
        let frame = vec![inst.point().to_vec(), v.clone(), w.clone()];
        if rank(&frame) < 3 {
            continue;
        }
        let curve: Vec<Univariate> = (0..n).map(|i| vec![inst.point()[i], v[i], w[i]]).collect();
        let on_x = inst
            .generators()
            .iter()
            .all(|g| restrict(g, &curve, z).iter().all(|c| c.is_zero()));
        if on_x {
            return ConicSearch::Found(ConicWitness {
                q,
                v: v.iter().map(|c| c.value()).collect(),
                w: w.iter().map(|c| c.value()).collect(),
                draws: draw,
            });
        }
    }
    ConicSearch::NotFound { draws: budget }
}

/// Multiplicity of a plane curve at `p` as the degree of the lowest form after moving `p`
/// to the affine origin.
pub fn lowest_form_mult(curve: &QPoly, point: &[Rational]) -> Result<u32, OracleError> {
    if curve.nvars() != 3 || point.len() != 3 {
        return Err(OracleError::DimensionMismatch {
            expected: 3,
            found: curve.nvars().max(point.len()),
        });
    }
    if !curve.evaluate(point)?.is_zero() {
        return Err(OracleError::NotOnCurve);
    }
    let k = point.iter().position(|c| !c.is_zero()).ok_or(OracleError::NotOnCurve)?;
    let scaled: Vec<Rational> = point.iter().map(|c| c / &point[k]).collect();
    // x_k = 1, x_j = y_j + p_j: translate first, then drop x_k
    let one = QPoly::from_int(1, 3);
    let images: Vec<QPoly> = (0..3)
        .map(|j| {
            if j == k {
                one.clone()
            } else {
                QPoly::var(3, j).add(&QPoly::constant(scaled[j].clone(), 3, one.order()))
            }
        })
        .collect();
    let moved = curve.substitute(&images).dehomogenize(k);
    moved
        .terms()
        .iter()
        .map(|(m, _)| m.degree())
        .min()
        .ok_or(OracleError::NotOnCurve)
}
