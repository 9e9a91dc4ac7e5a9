//! Exact sparse polynomials, monomial orders and the expression parser.

pub mod field;
pub mod linear;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use field::{format_rational, parse_rational, rat, ratio, Field, Fp, Rational};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, QPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable \"{name}\" at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("division is not allowed (position {position})")]
    Division { position: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot evaluate the zero polynomial in zero variables")]
    EmptyEvaluation,
}

/// Standard variable names `x0, x1, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}
