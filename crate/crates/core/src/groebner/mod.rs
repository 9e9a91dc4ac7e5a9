//! Gröbner bases and the ideal operations built on them.

pub mod buchberger;
pub mod hilbert;
pub mod ideal;
pub mod quotient;

pub use buchberger::{groebner_basis, is_groebner_basis, reduce, s_polynomial};
pub use hilbert::HilbertData;
pub use ideal::{Ideal, QIdeal};
pub use quotient::{intersect, irrelevant_ideal, quotient, quotient_by, saturate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),
}
