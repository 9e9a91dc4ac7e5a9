use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// Exponent vector with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> Exponent {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exponent; 12]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Inserts `count` zero exponents at position `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.nvars() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat_n(0, count));
        exps.extend_from_slice(&self.exps[at..]);
        Monomial { exps, degree: self.degree }
    }

    /// Drops the variable at `index`, returning the removed exponent.
    pub fn remove_var(&self, index: usize) -> (Monomial, Exponent) {
        let e = self.exps[index];
        let mut exps = self.exps.clone();
        exps.remove(index);
        (
            Monomial {
                exps,
                degree: self.degree - e as u32,
            },
            e,
        )
    }

    pub fn with_exponent(&self, index: usize, e: Exponent) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[index] as u32 + e as u32;
        m.exps[index] = e;
        m
    }

    /// All monomials of total degree `degree` in `nvars` variables, lex-descending.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0 as Exponent; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(Monomial::from_exponents(cur));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left as Exponent;
                out.push(Monomial::from_exponents(cur));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as Exponent;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, degree, &mut current, &mut out);
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

/// Monomial orders. Variables are compared by index; there is no separate permutation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x0 > x1 > ...`.
    #[default]
    GrevLex,
    Lex,
    /// Product order: the first `split` variables are compared first (grevlex on that
    /// block), ties broken by grevlex on the remaining variables. Eliminates the first block.
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a.exponents(), b.exponents(), a.degree(), b.degree()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block { split } => {
                let (a1, a2) = a.exponents().split_at(split);
                let (b1, b2) = b.exponents().split_at(split);
                let da1: u32 = a1.iter().map(|&e| e as u32).sum();
                let db1: u32 = b1.iter().map(|&e| e as u32).sum();
                grevlex(a1, b1, da1, db1)
                    .then_with(|| grevlex(a2, b2, a.degree() - da1, b.degree() - db1))
            }
        }
    }

    /// True when the order refines total degree, as needed for Hilbert series of homogeneous ideals.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

fn grevlex(a: &[Exponent], b: &[Exponent], da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
