//! Hilbert series of monomial ideals and the derived dimension, degree and Hilbert polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{Monomial, Rational};

/// Dimension, degree and Hilbert polynomial of `Proj(R/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    /// Degree; `0` exactly when the scheme is empty.
    pub degree: u64,
    /// Coefficients of the Hilbert polynomial, constant term first.
    pub hilbert_poly: Vec<Rational>,
    /// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n`, constant term first.
    pub numerator: Vec<i64>,
    /// Number of variables `n` of the ambient polynomial ring.
    pub nvars: usize,
}

impl HilbertData {
    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    /// Exact value of the Hilbert function `dim_k (R/I)_s`.
    pub fn hilbert_function(&self, s: u64) -> BigInt {
        let n = self.nvars as u64;
        if n == 0 {
            return self.numerator.get(s as usize).map(|&c| BigInt::from(c)).unwrap_or_default();
        }
        let mut acc = BigInt::zero();
        for (i, &c) in self.numerator.iter().enumerate() {
            let i = i as u64;
            if i > s || c == 0 {
                continue;
            }
            acc += BigInt::from(c) * binomial(s - i + n - 1, n - 1);
        }
        acc
    }

    /// Evaluates the Hilbert polynomial at `s`.
    pub fn hilbert_poly_at(&self, s: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(s));
        self.hilbert_poly
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Numerator `N(t)` with `HS(R/M) = N(t) / (1 - t)^n` for a monomial ideal `M`.
pub fn series_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec())))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators form a regular sequence
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // pivot on the variable shared by the most non-linear generators
    let nvars = gens[0].nvars();
    let pivot = (0..nvars)
        .max_by_key(|&v| {
            let count = gens.iter().filter(|g| g.exponent(v) > 0 && g.degree() > 1).count();
            (count, std::cmp::Reverse(v))
        })
        .expect("at least one variable");
    let x = Monomial::var(nvars, pivot);

    // N(M) = N(M + (x)) + t * N(M : x)
    let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    with_x.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let e = g.exponent(pivot);
            if e > 0 {
                g.with_exponent(pivot, e - 1)
            } else {
                g.clone()
            }
        })
        .collect();
    let mut acc = numerator_rec(minimalize(with_x));
    let rest = numerator_rec(minimalize(colon));
    poly_add_shifted(&mut acc, &rest, 1);
    acc
}

/// Derives dimension, degree and Hilbert polynomial from the series numerator.
pub fn hilbert_data_from_numerator(numerator: Vec<i64>, nvars: usize) -> HilbertData {
    let numerator = trim(numerator);
    if numerator.iter().all(|&c| c == 0) {
        return HilbertData {
            dim: -1,
            degree: 0,
            hilbert_poly: Vec::new(),
            numerator,
            nvars,
        };
    }
    // divide by (1 - t) while t = 1 is a root
    let mut q = numerator.clone();
    let mut k = 0usize;
    while q.iter().sum::<i64>() == 0 {
        let mut quotient = vec![0i64; q.len() - 1];
        let mut carry = 0i64;
        for i in 0..quotient.len() {
            carry += q[i];
            quotient[i] = carry;
        }
        q = trim(quotient);
        k += 1;
    }
    let krull = nvars - k;
    let degree: i64 = q.iter().sum();
    if krull == 0 {
        return HilbertData {
            dim: -1,
            degree: 0,
            hilbert_poly: Vec::new(),
            numerator,
            nvars,
        };
    }
    // HP(s) = sum_i q_i * C(s - i + D - 1, D - 1), D = krull
    let d = krull;
    let mut hp = vec![Rational::zero(); d];
    let mut fact = BigInt::one();
    for j in 1..d {
        fact *= BigInt::from(j);
    }
    for (i, &qi) in q.iter().enumerate() {
        if qi == 0 {
            continue;
        }
        // prod_{j=1}^{d-1} (s - i + j)
        let mut prod = vec![Rational::one()];
        for j in 1..d {
            let shift = Rational::from_integer(BigInt::from(j as i64 - i as i64));
            let mut next = vec![Rational::zero(); prod.len() + 1];
            for (e, c) in prod.iter().enumerate() {
                next[e + 1] += c;
                next[e] += c * &shift;
            }
            prod = next;
        }
        let scale = Rational::new(BigInt::from(qi), fact.clone());
        for (e, c) in prod.into_iter().enumerate() {
            hp[e] += c * &scale;
        }
    }
    HilbertData {
        dim: krull as i64 - 1,
        degree: degree as u64,
        hilbert_poly: hp,
        numerator,
        nvars,
    }
}
