//! Pointed varieties: normalization of the base point, slices and lines through it,
//! cut-out degree, multiplicity and order of vanishing.

pub mod cutout;
pub mod local;
pub mod pointed;
pub mod slices;
pub mod truncated;

pub use cutout::cut_out_degree;
pub use local::{affine_ideal, multiplicity_at, ord_at, Order, DEFAULT_MAX_M};
pub use pointed::{normalize_point, PointedVariety};
pub use slices::{cone_ideal, line_scheme, line_scheme_of_normalized, slice_decomposition, LineScheme, SliceDecomposition};

use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("the point does not lie on the variety")]
    PointNotOnVariety,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("size mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial has no slice decomposition")]
    ZeroPolynomial,
    #[error("polynomial has a pure power of x0, so it does not vanish at the base point")]
    PointNotOnHypersurface,
    #[error("the variety is empty")]
    EmptyVariety,
    #[error("ideal is not saturated")]
    NotSaturated,
    #[error("multiplicity did not stabilize for m <= {cap}")]
    StabilizationCapExceeded { cap: u32 },
    #[error("order exceeds {cap} but the form does not vanish on the variety")]
    OrderCapExceeded { cap: u32 },
    #[error("no degree up to {degree} cuts out the variety at the point; is the ideal saturated?")]
    CutOutBoundExceeded { degree: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}
