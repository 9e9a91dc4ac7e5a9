use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};
use super::monomial::{Exponent, Monomial, MonomialOrder};
use super::PolyError;

/// Sparse multivariate polynomial over a field.
///
/// Terms are kept strictly decreasing in `order`, with no zero coefficients and no
/// repeated monomials. Changing the order goes through [`Polynomial::with_order`].
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

pub type QPoly = Polynomial<Rational>;

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Self {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: F, nvars: usize, order: MonomialOrder) -> Self {
        Self::monomial(Monomial::one(nvars), c, order)
    }

    pub fn monomial(m: Monomial, c: F, order: MonomialOrder) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Self { nvars, order, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(existing) => *existing = existing.plus(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { nvars, order, terms }
    }

    /// Trusts the caller that `terms` are already sorted and nonzero.
    fn from_sorted(nvars: usize, order: MonomialOrder, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Coefficient of `m`, if present.
    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms
            .binary_search_by(|(t, _)| self.order.cmp(m, t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Smallest total degree of a term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// True for zero and for polynomials whose terms all share one degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree)
            .cloned()
            .collect();
        Self::from_sorted(self.nvars, self.order, terms)
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_degree(&self, bound: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() < bound)
            .cloned()
            .collect();
        Self::from_sorted(self.nvars, self.order, terms)
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self::from_sorted(self.nvars, order, terms)
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
        assert_eq!(self.order, other.order, "polynomials sorted under different orders");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        self.merge(other, |c| c.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other);
        self.merge(other, |c| c.negated())
    }

    fn merge(&self, other: &Self, map_other: impl Fn(&F) -> F) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), map_other(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.plus(&map_other(&b[j].1));
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), map_other(c))));
        Self::from_sorted(self.nvars, self.order, out)
    }

    /// `self - c * m * g`, the basic reduction step.
    pub fn sub_scaled(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        self.check_compatible(g);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (a, b) = (&self.terms, &g.terms);
        let (mut i, mut j) = (0, 0);
        // multiplying by a monomial preserves the relative order of g's terms
        let shifted = |k: usize| (b[k].0.mul(m), c.times(&b[k].1).negated());
        let mut next_b = if b.is_empty() { None } else { Some(shifted(0)) };
        while i < a.len() {
            let Some((bm, bc)) = next_b.take() else { break };
            match self.order.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    next_b = Some((bm, bc));
                }
                Ordering::Less => {
                    out.push((bm, bc));
                    j += 1;
                    next_b = if j < b.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let s = a[i].1.plus(&bc);
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                    next_b = if j < b.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(t) = next_b {
            out.push(t);
            j += 1;
            while j < b.len() {
                out.push(shifted(j));
                j += 1;
            }
        }
        Self::from_sorted(self.nvars, self.order, out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect();
        Self::from_sorted(self.nvars, self.order, terms)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect();
        Self::from_sorted(self.nvars, self.order, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.times(c))).collect();
        Self::from_sorted(self.nvars, self.order, terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let products = self.terms.iter().flat_map(|(m1, c1)| {
            other.terms.iter().map(move |(m2, c2)| (m1.mul(m2), c1.times(c2)))
        });
        Self::from_terms(self.nvars, self.order, products)
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = match self.terms.first() {
            Some((_, c)) => c.one_like(),
            // 0^0 is taken to be 0 here; callers never raise the zero polynomial
            None => return self.clone(),
        };
        let mut acc = Self::constant(one, self.nvars, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let Some(sample) = point.first().or_else(|| self.terms.first().map(|(_, c)| c)) else {
            return Err(PolyError::EmptyEvaluation);
        };
        let mut acc = sample.zero_like();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.times(x);
                }
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// `f(M·x)`: substitutes `x_i -> sum_j M[i][j] x_j`.
    pub fn substitute_linear(&self, matrix: &[Vec<F>]) -> Result<Self, PolyError> {
        let n = self.nvars;
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                found: matrix.len(),
            });
        }
        if super::linear::invert(matrix).is_none() {
            return Err(PolyError::SingularMatrix);
        }
        let images: Vec<Self> = matrix
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::var(n, j), c.clone()));
                Self::from_terms(n, self.order, terms)
            })
            .collect();
        Ok(self.substitute(&images))
    }

    /// Substitutes a polynomial for every variable. `images` must share this ring's order.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: HashMap<(usize, Exponent), Self> = HashMap::new();
        let mut acc = Self::zero(target_vars, self.order);
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone(), target_vars, self.order);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32))
                    .clone();
                t = t.mul(&power);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Adds `count` new variables at index `at` (existing indices `>= at` shift up).
    pub fn insert_vars(&self, at: usize, count: usize, order: MonomialOrder) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.insert_vars(at, count), c.clone()));
        Self::from_terms(self.nvars + count, order, terms)
    }

    /// Sets variable `index` to 1 and removes it from the ring.
    pub fn dehomogenize(&self, index: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remove_var(index).0, c.clone()));
        Self::from_terms(self.nvars - 1, self.order, terms)
    }

    /// Removes a variable that does not occur; `None` if it does.
    pub fn drop_unused_var(&self, index: usize) -> Option<Self> {
        if self.terms.iter().any(|(m, _)| m.exponent(index) != 0) {
            return None;
        }
        Some(self.dehomogenize(index))
    }

    pub fn partial_derivative(&self, index: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(index) > 0).map(|(m, c)| {
            let e = m.exponent(index);
            (m.with_exponent(index, e - 1), c.times(&c.from_i64_like(e as i64)))
        });
        Self::from_terms(self.nvars, self.order, terms)
    }

    /// Quotient of exact division, `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.check_compatible(divisor);
        let (dm, dc) = divisor.leading_term()?;
        let dc_inv = dc.inverse()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            let q = m.div(dm)?;
            let qc = c.times(&dc_inv);
            rest = rest.sub_scaled(&qc, &q, divisor);
            quotient.push((q, qc));
        }
        Some(Self::from_terms(self.nvars, self.order, quotient))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(
            self.nvars,
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Fallible coefficient map, e.g. reduction modulo a prime.
    pub fn try_map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Polynomial<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Some(Polynomial::from_terms(self.nvars, self.order, terms))
    }

    /// Renders with the given variable names, in a form the expression parser accepts.
    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            if m.is_one() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&magnitude);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl Polynomial<Rational> {
    /// The variable `x_index` in a grevlex ring of `nvars` variables.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::var(nvars, index), super::field::rat(1), MonomialOrder::GrevLex)
    }

    pub fn from_int(n: i64, nvars: usize) -> Self {
        Self::constant(super::field::rat(n), nvars, MonomialOrder::GrevLex)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.fmt_with(&[]))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        Polynomial::add(self, rhs)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        Polynomial::sub(self, rhs)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        Polynomial::mul(self, rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{rat, ratio};
    use crate::poly::parse::parse_polynomial;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    fn p(s: &str, n: usize) -> QPoly {
        parse_polynomial(s, &names(n)).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let f = p("x0 + x1", 2);
        let sq = f.pow(2);
        assert_eq!(sq, p("x0^2 + 2*x0*x1 + x1^2", 2));
        assert_eq!(&sq - &sq, QPoly::zero(2, MonomialOrder::GrevLex));
        assert_eq!(sq.total_degree(), Some(2));
        assert!(sq.is_homogeneous());
        assert!(!p("x0 + 1", 2).is_homogeneous());
    }

    #[test]
    fn sub_scaled_matches_naive() {
        let f = p("x0^3 + 2*x0*x1^2 - x1 + 7", 2);
        let g = p("x0*x1 - 3*x1^2 + 1", 2);
        let m = Monomial::from_exponents(&[1, 0]);
        let c = ratio(5, 3);
        let naive = &f - &g.mul_term(&m, &c);
        assert_eq!(f.sub_scaled(&c, &m, &g), naive);
    }

    #[test]
    fn evaluate_examples() {
        let conic = p("x0*x2 - x1^2", 4);
        assert_eq!(conic.evaluate(&[rat(1), rat(0), rat(0), rat(0)]).unwrap(), rat(0));
        assert_eq!(conic.evaluate(&[rat(1), rat(1), rat(1), rat(0)]).unwrap(), rat(0));
        let fermat = p("x0^3 + x1^3 + x2^3 + x3^3", 4);
        assert_eq!(fermat.evaluate(&[rat(1), rat(-1), rat(0), rat(0)]).unwrap(), rat(0));
        assert!(matches!(
            conic.evaluate(&[rat(1)]),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn substitute_linear_examples() {
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let swap = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(p("x1", 2).substitute_linear(&id).unwrap(), p("x1", 2));
        assert_eq!(p("x0^2", 2).substitute_linear(&swap).unwrap(), p("x1^2", 2));
        let singular = vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]];
        assert_eq!(p("x0", 2).substitute_linear(&singular), Err(PolyError::SingularMatrix));
        assert!(matches!(
            p("x0", 2).substitute_linear(&[vec![rat(1)]]),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn substitute_sends_point_to_origin_chart() {
        // columns p = (1,1,1), e1, e2: x0 = y0, x1 = y0 + y1, x2 = y0 + y2
        let m = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(1)],
        ];
        let g = p("x0*x2 - x1^2", 3).substitute_linear(&m).unwrap();
        assert_eq!(g.evaluate(&[rat(1), rat(0), rat(0)]).unwrap(), rat(0));
        assert_eq!(g, p("x0*x2 - 2*x0*x1 - x1^2", 3));
    }

    #[test]
    fn exact_division_and_derivatives() {
        let f = p("x0^2 - x1^2", 2);
        assert_eq!(f.exact_div(&p("x0 - x1", 2)), Some(p("x0 + x1", 2)));
        assert_eq!(f.exact_div(&p("x0", 2)), None);
        assert_eq!(p("x0^3*x1 + x1", 2).partial_derivative(0), p("3*x0^2*x1", 2));
    }

    #[test]
    fn display_round_trips_through_parser() {
        let f = p("-3/2*x0^2*x1 + x1 - 4 + x0", 2);
        let shown = f.fmt_with(&names(2));
        assert_eq!(p(&shown, 2), f);
    }

    #[test]
    fn dehomogenize_and_insert() {
        let f = p("x0^2*x1 + x0*x2^2", 3);
        assert_eq!(f.dehomogenize(0), p("x0 + x1^2", 2));
        let g = p("x0 + x1", 2).insert_vars(0, 1, MonomialOrder::GrevLex);
        assert_eq!(g, p("x1 + x2", 3));
    }
}
