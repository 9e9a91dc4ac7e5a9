use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::ToPrimitive;

use super::buchberger::{groebner_basis, reduce};
use super::hilbert::{binomial, hilbert_data_from_numerator, series_numerator, HilbertData};
use super::GroebnerError;
use crate::poly::linear::row_reduce;
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Rational};

/// Ideal given by generators, with reduced Gröbner bases cached per monomial order.
pub struct Ideal<F: Field> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    homogeneous: bool,
    cache: RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial<F>>>>>,
}

pub type QIdeal = Ideal<Rational>;

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("cache lock").clone();
        Self {
            nvars: self.nvars,
            gens: self.gens.clone(),
            homogeneous: self.homogeneous,
            cache: RwLock::new(cache),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; the rest are stored in grevlex.
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Self {
        let gens: Vec<Polynomial<F>> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.nvars(), nvars, "generator lives in a different ring");
                g.with_order(MonomialOrder::GrevLex)
            })
            .collect();
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Self {
            nvars,
            gens,
            homogeneous,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under `order`, computed once and then shared.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<Vec<Polynomial<F>>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return Arc::clone(gb);
        }
        let gb = Arc::new(groebner_basis(&self.gens, order));
        let mut cache = self.cache.write().expect("cache lock");
        Arc::clone(cache.entry(order).or_insert(gb))
    }

    pub fn grevlex_basis(&self) -> Arc<Vec<Polynomial<F>>> {
        self.groebner_basis(MonomialOrder::GrevLex)
    }

    /// Remainder of `f` modulo the reduced basis for `order`, sorted under `order`.
    pub fn normal_form(&self, f: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
        let gb = self.groebner_basis(order);
        reduce(&f.with_order(order), &gb)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        f.is_zero() || self.normal_form(f, MonomialOrder::GrevLex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_as(&self, other: &Ideal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.grevlex_basis();
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial<F>]) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ideal::new(self.nvars, gens)
    }

    /// Dimension, degree and Hilbert polynomial of `Proj(R/I)`, from grevlex leading terms.
    pub fn hilbert_data(&self) -> Result<HilbertData, GroebnerError> {
        self.hilbert_data_with_order(MonomialOrder::GrevLex)
    }

    /// Same as [`Ideal::hilbert_data`] using another order's leading-term ideal.
    /// For homogeneous ideals the answer does not depend on the order.
    pub fn hilbert_data_with_order(&self, order: MonomialOrder) -> Result<HilbertData, GroebnerError> {
        if !self.homogeneous {
            return Err(GroebnerError::NotHomogeneous);
        }
        let gb = self.groebner_basis(order);
        let lead: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        Ok(hilbert_data_from_numerator(series_numerator(&lead), self.nvars))
    }

    /// Dimension of `R/I` as a vector space when it is finite, i.e. the number of
    /// standard monomials of the grevlex basis. Works for inhomogeneous ideals.
    pub fn colength(&self) -> Option<u64> {
        let gb = self.grevlex_basis();
        let lead: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        let num = series_numerator(&lead);
        let n = self.nvars;
        // finite quotient iff N(t) = (1 - t)^n * Q(t); then dim = Q(1)
        let mut q = num;
        for _ in 0..n {
            if q.iter().sum::<i64>() != 0 {
                return None;
            }
            let mut quotient = vec![0i64; q.len().saturating_sub(1).max(1)];
            let mut carry = 0i64;
            for i in 0..q.len() - 1 {
                carry += q[i];
                quotient[i] = carry;
            }
            q = quotient;
        }
        let total: i64 = q.iter().sum();
        total.to_u64()
    }

    /// Vector-space basis of the degree-`d` component, in reduced row echelon form.
    pub fn graded_piece(&self, d: i64) -> Result<Vec<Polynomial<F>>, GroebnerError> {
        if !self.homogeneous {
            return Err(GroebnerError::NotHomogeneous);
        }
        if d <= 0 {
            return Err(GroebnerError::NonPositiveDegree(d));
        }
        let d = d as u32;
        let gb = self.grevlex_basis();
        let Some(sample) = gb.first().and_then(|g| g.leading_coeff()).cloned() else {
            return Ok(Vec::new());
        };
        let zero = sample.zero_like();
        let order = MonomialOrder::GrevLex;
        let mut columns = Monomial::all_of_degree(self.nvars, d);
        columns.sort_by(|a, b| order.cmp(b, a));
        let index: HashMap<Monomial, usize> =
            columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in gb.iter() {
            let Some(e) = g.total_degree() else { continue };
            if e > d {
                continue;
            }
            for u in Monomial::all_of_degree(self.nvars, d - e) {
                let mut row = vec![zero.clone(); columns.len()];
                for (m, c) in g.terms() {
                    row[index[&m.mul(&u)]] = c.clone();
                }
                rows.push(row);
            }
        }
        row_reduce(&mut rows);
        Ok(rows
            .into_iter()
            .map(|row| {
                let terms = columns.iter().cloned().zip(row).filter(|(_, c)| !c.is_zero());
                Polynomial::from_terms(self.nvars, order, terms)
            })
            .collect())
    }

    /// `dim_k I_d` computed from the Hilbert function, for cross-checks.
    pub fn graded_dimension(&self, d: u64) -> Result<u64, GroebnerError> {
        let data = self.hilbert_data()?;
        let ambient = binomial(d + self.nvars as u64 - 1, self.nvars as u64 - 1);
        let quotient = data.hilbert_function(d);
        Ok((ambient - quotient).to_u64().expect("small dimension"))
    }

    /// Applies `f` to every generator.
    pub fn map<G: Field>(&self, nvars: usize, f: impl Fn(&Polynomial<F>) -> Polynomial<G>) -> Ideal<G> {
        Ideal::new(nvars, self.gens.iter().map(f).collect())
    }
}
