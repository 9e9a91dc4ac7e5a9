use crate::groebner::{quotient, QIdeal};
use crate::poly::Field;

use super::pointed::PointedVariety;
use super::GeometryError;

/// `d_p(X)`: the least `d` such that forms of degree `d` in `I_X` cut out `X` near `p`.
///
/// Degree `d` works when `J_d : I_X` has a generator not vanishing at `p`, where `J_d` is
/// generated by `(I_X)_d`. For pure-dimensional `X` the answer is at most `deg X`; the
/// generators of a saturated ideal always suffice, so their degree bounds the search too.
pub fn cut_out_degree(x: &PointedVariety) -> Result<u32, GeometryError> {
    let ideal = x.ideal();
    let hilbert = ideal.hilbert_data()?;
    if hilbert.is_empty() {
        return Err(GeometryError::EmptyVariety);
    }
    if ideal.is_zero() {
        // the whole projective space is cut out by the empty set of linear forms
        return Ok(1);
    }
    let top_generator = ideal
        .grevlex_basis()
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(1);
    let bound = (hilbert.degree as u32).max(top_generator);
    for d in 1..=bound {
        let piece = ideal.graded_piece(d as i64)?;
        if piece.is_empty() {
            continue;
        }
        let jd = QIdeal::new(ideal.nvars(), piece);
        let colon = quotient(&jd, ideal);
        for g in colon.generators() {
            if !g.evaluate(x.point())?.is_zero() {
                log::debug!("d_p = {d}");
                return Ok(d);
            }
        }
    }
    Err(GeometryError::CutOutBoundExceeded { degree: bound })
}
