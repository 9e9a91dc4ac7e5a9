use crate::groebner::{irrelevant_ideal, saturate, QIdeal};
use crate::poly::linear::{invert, mat_vec, Matrix};
use crate::poly::{rat, Field, QPoly, Rational};

use super::GeometryError;

/// A projective variety `X ⊂ P^N` with a point `p ∈ X` moved to `[1:0:…:0]`.
#[derive(Clone, Debug)]
pub struct PointedVariety {
    ideal: QIdeal,
    point: Vec<Rational>,
    /// Columns: `p`, then the standard basis vectors other than the pivot.
    basis: Matrix<Rational>,
    /// `basis⁻¹`, sending `p` to `e_0`.
    inverse: Matrix<Rational>,
    normalized: QIdeal,
}

impl PointedVariety {
    pub fn ideal(&self) -> &QIdeal {
        &self.ideal
    }

    pub fn point(&self) -> &[Rational] {
        &self.point
    }

    /// Number of homogeneous coordinates, `N + 1`.
    pub fn nvars(&self) -> usize {
        self.point.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.point.len() - 1
    }

    /// Coordinate change `A` with `x = A·y`; the first column is `p`.
    pub fn basis(&self) -> &Matrix<Rational> {
        &self.basis
    }

    /// `M = A⁻¹`, so that `M·p = e_0`.
    pub fn transform(&self) -> &Matrix<Rational> {
        &self.inverse
    }

    /// The ideal in coordinates where `p = [1:0:…:0]`.
    pub fn normalized_ideal(&self) -> &QIdeal {
        &self.normalized
    }

    /// `f(A·y)`: rewrites a form on `P^N` in normalized coordinates.
    pub fn normalize_poly(&self, f: &QPoly) -> Result<QPoly, GeometryError> {
        Ok(f.substitute_linear(&self.basis)?)
    }

    /// Inverse of [`PointedVariety::normalize_poly`].
    pub fn denormalize_poly(&self, g: &QPoly) -> Result<QPoly, GeometryError> {
        Ok(g.substitute_linear(&self.inverse)?)
    }

    /// Maps normalized coordinates back to the original ones.
    pub fn to_original(&self, v: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.basis, v)
    }

    /// Maps original coordinates to normalized ones.
    pub fn to_normalized(&self, v: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.inverse, v)
    }

    /// Checks that the ideal equals its saturation by the irrelevant ideal.
    pub fn check_saturated(&self) -> Result<(), GeometryError> {
        let sat = saturate(&self.ideal, &irrelevant_ideal(self.nvars(), &rat(1)));
        if sat.same_as(&self.ideal) {
            Ok(())
        } else {
            Err(GeometryError::NotSaturated)
        }
    }
}

/// Moves `p` to `[1:0:…:0]` by a linear change of coordinates pivoting on its first nonzero entry.
pub fn normalize_point(ideal: &QIdeal, point: &[Rational]) -> Result<PointedVariety, GeometryError> {
    let n = ideal.nvars();
    if point.len() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: point.len(),
        });
    }
    let Some(pivot) = point.iter().position(|c| !c.is_zero()) else {
        return Err(GeometryError::ZeroPoint);
    };
    for g in ideal.generators() {
        if !g.evaluate(point)?.is_zero() {
            return Err(GeometryError::PointNotOnVariety);
        }
    }
    let mut basis = vec![vec![rat(0); n]; n];
    for (i, c) in point.iter().enumerate() {
        basis[i][0] = c.clone();
    }
    let mut col = 1;
    for j in (0..n).filter(|&j| j != pivot) {
        basis[j][col] = rat(1);
        col += 1;
    }
    let inverse = invert(&basis).expect("pivoted basis is invertible");
    let normalized_gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute_linear(&basis))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PointedVariety {
        ideal: ideal.clone(),
        point: point.to_vec(),
        basis,
        inverse,
        normalized: QIdeal::new(n, normalized_gens),
    })
}
