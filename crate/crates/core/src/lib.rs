//! Exact computation of Seshadri-constant data for projective varieties at a point:
//! polynomial arithmetic, Gröbner bases, lines through a point, cut-out degrees,
//! complete-intersection classification and a finite-field cross-check.

pub mod poly;
pub mod groebner;
pub mod geometry;
pub mod seshadri;
pub mod oracle;
