use crate::poly::field::{is_prime, primitive_integer_vector};
use crate::poly::{Field, Fp, Polynomial, QPoly, Rational};

use super::OracleError;

pub type FpPoly = Polynomial<Fp>;

/// Generators and base point reduced modulo a prime `q`.
#[derive(Clone, Debug)]
pub struct ModularInstance {
    q: u32,
    gens: Vec<FpPoly>,
    point: Vec<Fp>,
}

impl ModularInstance {
    /// Fails when `q` is not prime, a denominator is divisible by `q`, the point
    /// reduces to zero, or a generator stops vanishing at the point.
    pub fn new(q: u32, gens: &[QPoly], point: &[Rational]) -> Result<Self, OracleError> {
        if !is_prime(q) {
            return Err(OracleError::NotPrime(q));
        }
        let n = point.len();
        let mut reduced = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != n {
                return Err(OracleError::DimensionMismatch {
                    expected: n,
                    found: g.nvars(),
                });
            }
            let r = g
                .try_map_coeffs(|c| Fp::from_rational(c, q))
                .ok_or(OracleError::BadReduction { q })?;
            if !r.is_zero() {
                reduced.push(r);
            }
        }
        // clear denominators first: the projective point is unchanged by scaling
        let ints = primitive_integer_vector(point);
        let point: Vec<Fp> = ints
            .iter()
            .map(|c| Fp::from_rational(&Rational::from_integer(c.clone()), q).expect("integer"))
            .collect();
        if point.iter().all(|c| c.is_zero()) {
            return Err(OracleError::BadReduction { q });
        }
        for g in &reduced {
            if !g.evaluate(&point)?.is_zero() {
                return Err(OracleError::BadReduction { q });
            }
        }
        Ok(Self {
            q,
            gens: reduced,
            point,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn generators(&self) -> &[FpPoly] {
        &self.gens
    }

    pub fn point(&self) -> &[Fp] {
        &self.point
    }

    pub fn nvars(&self) -> usize {
        self.point.len()
    }

    /// Index of the first nonzero coordinate of the point.
    pub fn pivot(&self) -> usize {
        self.point.iter().position(|c| !c.is_zero()).expect("nonzero point")
    }

    pub fn zero(&self) -> Fp {
        Fp::new(0, self.q)
    }
}

/// Dense univariate polynomial over `F_q`, constant term first.
pub(crate) type Univariate = Vec<Fp>;

pub(crate) fn uni_mul(a: &[Fp], b: &[Fp], zero: Fp) -> Univariate {
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].plus(&x.times(y));
        }
    }
    out
}

/// `g(curve(t))` where `curve[i]` is the univariate polynomial substituted for `x_i`.
pub(crate) fn restrict(g: &FpPoly, curve: &[Univariate], zero: Fp) -> Univariate {
    let max_deg = g.total_degree().unwrap_or(0) as usize;
    // powers[i][e] = curve[i]^e
    let powers: Vec<Vec<Univariate>> = curve
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let top = g.terms().iter().map(|(m, _)| m.exponent(i) as usize).max().unwrap_or(0);
            let mut list = vec![vec![zero.one_like()]];
            for _ in 0..top.min(max_deg) {
                let next = uni_mul(list.last().unwrap(), c, zero);
                list.push(next);
            }
            list
        })
        .collect();
    let width = curve.iter().map(|c| c.len() - 1).max().unwrap_or(0) * max_deg + 1;
    let mut acc = vec![zero; width];
    for (m, coeff) in g.terms() {
        let mut t = vec![*coeff];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = uni_mul(&t, &powers[i][e as usize], zero);
            }
        }
        for (k, c) in t.into_iter().enumerate() {
            acc[k] = acc[k].plus(&c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, rat, ratio};

    #[test]
    fn reduction_and_bad_primes() {
        let names = default_names(3);
        let f = parse_polynomial("x0*x2 - 1/7*x1^2", &names).unwrap();
        let p = vec![rat(1), rat(0), rat(0)];
        assert!(matches!(ModularInstance::new(7, std::slice::from_ref(&f), &p), Err(OracleError::BadReduction { q: 7 })));
        assert!(ModularInstance::new(5, std::slice::from_ref(&f), &p).is_ok());
        assert!(matches!(ModularInstance::new(6, &[f], &p), Err(OracleError::NotPrime(6))));
        let scaled = vec![ratio(1, 3), rat(0), rat(0)];
        let g = parse_polynomial("x1", &names).unwrap();
        let inst = ModularInstance::new(3, &[g], &scaled).unwrap();
        assert_eq!(inst.point()[0].value(), 1);
    }

    #[test]
    fn restriction_to_a_line() {
        let names = default_names(2);
        let f = parse_polynomial("x0^2 - x1^2", &names).unwrap();
        let inst = ModularInstance::new(7, &[f], &[rat(1), rat(1)]).unwrap();
        let z = inst.zero();
        // x0 = 1 + t, x1 = 1 + t: identically zero
        let curve = vec![vec![Fp::new(1, 7), Fp::new(1, 7)], vec![Fp::new(1, 7), Fp::new(1, 7)]];
        assert!(restrict(&inst.generators()[0], &curve, z).iter().all(|c| c.is_zero()));
    }
}
