//! Lower bounds, exact values for complete intersections and Seshadri-curve certificates.

pub mod bounds;
pub mod ci;
pub mod curve;
pub mod random;
pub mod report;

pub use bounds::{aux_divisors, lower_bound, AuxDivisor, AuxDivisors};
pub use ci::{classify_ci, CompleteIntersectionInput};
pub use curve::{seshadri_curve, sharpness_example, ConstructionTrace, CurveCertificate, SharpnessExample};
pub use report::{LedgerEntry, Provenance, SeshadriReport, Status};

use crate::geometry::{GeometryError, DEFAULT_MAX_M};
use crate::poly::{format_rational, Rational};

/// Knobs shared by the procedures in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Truncation cap for multiplicity and order computations.
    pub max_m: u32,
    /// Extra randomized attempts after a degenerate draw.
    pub retries: u32,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_m: DEFAULT_MAX_M,
            retries: 8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum SeshadriError {
    #[error("hypothesis {condition} failed: {detail}")]
    HypothesisFailed { condition: String, detail: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error(
        "counterexample candidate: curve ratio {} differs from expected {}",
        format_rational(&certificate.ratio),
        format_rational(expected)
    )]
    CounterexampleCandidate {
        expected: Rational,
        certificate: Box<CurveCertificate>,
    },
    #[error("every one of {attempts} random draws was degenerate")]
    Degenerate { attempts: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
