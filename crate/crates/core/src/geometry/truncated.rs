//! The image of an affine ideal in `k[x] / m^m`, as an echelon basis of the span of the
//! truncated multiples `u * g` with `deg u < m`.
//!
//! Rows are primitive integer vectors over the monomials of degree `< m`, ordered by
//! ascending degree; the pivot of a row is its lowest-degree term.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::groebner::QIdeal;
use crate::poly::{Monomial, QPoly};

type Row = Vec<(usize, BigInt)>;

pub struct TruncatedQuotient {
    m: u32,
    columns: HashMap<Monomial, usize>,
    width: usize,
    pivots: HashMap<usize, Row>,
}

impl TruncatedQuotient {
    pub fn new(affine: &QIdeal, m: u32) -> Self {
        let n = affine.nvars();
        let mut columns = HashMap::new();
        for d in 0..m {
            for u in Monomial::all_of_degree(n, d) {
                let next = columns.len();
                columns.insert(u, next);
            }
        }
        let width = columns.len();
        let mut tq = Self {
            m,
            columns,
            width,
            pivots: HashMap::new(),
        };
        let mut rows: Vec<Row> = Vec::new();
        for g in affine.generators() {
            let g = g.truncate_degree(m);
            let Some(low) = g.terms().iter().map(|(u, _)| u.degree()).min() else {
                continue;
            };
            for d in 0..m - low {
                for u in Monomial::all_of_degree(n, d) {
                    let shifted = QPoly::from_terms(
                        n,
                        g.order(),
                        g.terms().iter().map(|(v, c)| (v.mul(&u), c.clone())),
                    );
                    if let Some(row) = tq.row_of(&shifted) {
                        rows.push(row);
                    }
                }
            }
        }
        // low pivots first keeps the reductions short
        rows.sort_by_key(|r| r[0].0);
        for row in rows {
            let reduced = tq.reduce(row);
            if let Some(&(lead, _)) = reduced.first() {
                tq.pivots.insert(lead, reduced);
            }
        }
        tq
    }

    /// `dim_k k[x] / (I + m^m)`.
    pub fn colength(&self) -> u64 {
        (self.width - self.pivots.len()) as u64
    }

    /// Whether `f ∈ I + m^m`.
    pub fn contains(&self, f: &QPoly) -> bool {
        match self.row_of(f) {
            None => true,
            Some(row) => self.reduce(row).is_empty(),
        }
    }

    /// Terms of degree `>= m` are dropped; denominators are cleared.
    fn row_of(&self, f: &QPoly) -> Option<Row> {
        let kept: Vec<_> = f.terms().iter().filter(|(u, c)| u.degree() < self.m && !c.is_zero()).collect();
        if kept.is_empty() {
            return None;
        }
        let lcm = kept.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row: Row = kept
            .iter()
            .map(|(u, c)| (self.columns[u], c.numer() * (&lcm / c.denom())))
            .collect();
        row.sort_by_key(|(i, _)| *i);
        make_primitive(&mut row);
        Some(row)
    }

    /// Eliminates pivot columns until the leading column has no pivot.
    fn reduce(&self, mut row: Row) -> Row {
        while let Some((lead, a)) = row.first() {
            let Some(pivot) = self.pivots.get(lead) else {
                break;
            };
            let b = &pivot[0].1;
            let g = a.gcd(b);
            let (sr, sp) = (b / &g, a / &g);
            row = combine(&row, &sr, pivot, &sp);
            make_primitive(&mut row);
        }
        row
    }
}

/// `sr * row - sp * pivot`, keeping nonzero entries.
fn combine(row: &Row, sr: &BigInt, pivot: &Row, sp: &BigInt) -> Row {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, sr * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(sp * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, sr * &row[i - 1].1 - sp * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn make_primitive(row: &mut Row) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in row.iter_mut() {
        *c = &*c / &g;
    }
    if row[0].1.is_negative() {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial};

    fn ideal(n: usize, gens: &[&str]) -> QIdeal {
        let names = default_names(n);
        QIdeal::new(n, gens.iter().map(|g| parse_polynomial(g, &names).unwrap()).collect())
    }

    /// The Groebner basis of `I + m^m` gives the same answers.
    #[test]
    fn agrees_with_groebner_bases() {
        let cases = [
            ideal(2, &["x1^2 - x0^3"]),
            ideal(3, &["x0 + x1^2 - 3*x2^3", "x1*x2 - x0^2"]),
            ideal(3, &["x0*x1", "x0*x2"]),
            ideal(2, &["x0 - x1^2"]),
            QIdeal::zero(3),
        ];
        let probes = ["x1", "x0", "x1^3", "x0*x1 + x1^4", "x2^2"];
        for i in &cases {
            let n = i.nvars();
            for m in 1..6 {
                let mut gens: Vec<QPoly> = i.generators().iter().map(|g| g.truncate_degree(m)).collect();
                gens.extend(
                    Monomial::all_of_degree(n, m)
                        .into_iter()
                        .map(|u| QPoly::monomial(u, crate::poly::rat(1), crate::poly::MonomialOrder::GrevLex)),
                );
                let gb = QIdeal::new(n, gens);
                let tq = TruncatedQuotient::new(i, m);
                assert_eq!(tq.colength(), gb.colength().unwrap(), "{i:?} m = {m}");
                for p in probes {
                    let Ok(f) = parse_polynomial(p, &default_names(n)) else { continue };
                    assert_eq!(tq.contains(&f), gb.contains(&f), "{p} in {i:?} + m^{m}");
                }
            }
        }
    }
}
