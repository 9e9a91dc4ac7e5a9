//! Brute-force checks over small prime fields: lines and conics through the base point,
//! and lowest-form multiplicity of plane curves.

pub mod modular;
pub mod search;

pub use modular::{FpPoly, ModularInstance};
pub use search::{count_lines_mod_q, direction_count, find_conic_mod_q, lowest_form_mult, ConicSearch, ConicWitness, LineCount};

use crate::poly::PolyError;

pub const DEFAULT_PRIMES: [u32; 3] = [7, 11, 13];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("bad reduction modulo {q}")]
    BadReduction { q: u32 },
    #[error("the point does not lie on the curve")]
    NotOnCurve,
    #[error("size mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// How modular line counts compare with the exact line scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// Counts contradict the exact answer at these primes only.
    BadPrimes(Vec<u32>),
    /// Every prime contradicts an empty line scheme.
    Disagree,
    /// The line scheme is nonempty but no prime sees a line; its points may be irrational.
    Unconfirmed,
}

impl Agreement {
    pub fn as_str(&self) -> &'static str {
        match self {
            Agreement::Agree => "agree",
            Agreement::BadPrimes(_) => "bad-primes",
            Agreement::Disagree => "disagree",
            Agreement::Unconfirmed => "unconfirmed",
        }
    }
}

/// Compares an exact emptiness verdict with line counts at several primes.
pub fn agreement(line_scheme_empty: bool, counts: &[LineCount]) -> Agreement {
    if counts.is_empty() {
        return Agreement::Unconfirmed;
    }
    if line_scheme_empty {
        let bad: Vec<u32> = counts.iter().filter(|c| c.count > 0).map(|c| c.q).collect();
        if bad.is_empty() {
            Agreement::Agree
        } else if bad.len() == counts.len() {
            Agreement::Disagree
        } else {
            Agreement::BadPrimes(bad)
        }
    } else {
        let missing: Vec<u32> = counts.iter().filter(|c| c.count == 0).map(|c| c.q).collect();
        if missing.is_empty() {
            Agreement::Agree
        } else if missing.len() == counts.len() {
            Agreement::Unconfirmed
        } else {
            Agreement::BadPrimes(missing)
        }
    }
}
