//! Local invariants at the base point through truncated quotients `R / (I_aff + m^m)`.

use crate::groebner::QIdeal;
use crate::poly::{Field, QPoly};

use super::pointed::PointedVariety;
use super::truncated::TruncatedQuotient;
use super::GeometryError;

pub const DEFAULT_MAX_M: u32 = 24;

/// Consecutive equal finite differences required before a multiplicity is accepted.
const STABLE_WINDOW: usize = 3;

/// `ord_p` of a form restricted to `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

/// Affine chart `x0 = 1` of the normalized ideal; `p` becomes the origin.
pub fn affine_ideal(x: &PointedVariety) -> QIdeal {
    let gens = x
        .normalized_ideal()
        .generators()
        .iter()
        .map(|g| g.dehomogenize(0))
        .collect();
    QIdeal::new(x.nvars() - 1, gens)
}

/// Hilbert–Samuel function `H(m) = dim_k R / (I_aff + m^m)`.
pub fn hilbert_samuel(affine: &QIdeal, m: u32) -> u64 {
    if m == 0 {
        return 0;
    }
    TruncatedQuotient::new(affine, m).colength()
}

fn difference(values: &[i64], order: usize) -> Vec<i64> {
    let mut v = values.to_vec();
    for _ in 0..order {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v
}

/// Hilbert–Samuel multiplicity `mult_p(X)`.
///
/// Tries the global dimension first and falls back to lower local dimensions when the
/// top difference settles at zero.
pub fn multiplicity_at(x: &PointedVariety, max_m: u32) -> Result<u32, GeometryError> {
    let hilbert = x.ideal().hilbert_data()?;
    if hilbert.is_empty() {
        return Err(GeometryError::EmptyVariety);
    }
    let top = hilbert.dim as usize;
    let affine = affine_ideal(x);
    let mut values = vec![0i64];
    for m in 1..=max_m {
        values.push(hilbert_samuel(&affine, m) as i64);
        log::trace!("H({m}) = {}", values[m as usize]);
        for dim in (0..=top).rev() {
            let diffs = difference(&values, dim);
            if diffs.len() < STABLE_WINDOW + 1 {
                break;
            }
            let tail = &diffs[diffs.len() - STABLE_WINDOW..];
            if tail.iter().any(|&v| v != tail[0]) {
                break;
            }
            if tail[0] > 0 {
                log::debug!("multiplicity {} in local dimension {dim} at m = {m}", tail[0]);
                return Ok(tail[0] as u32);
            }
            if dim == 0 {
                return Err(GeometryError::PointNotOnVariety);
            }
        }
    }
    Err(GeometryError::StabilizationCapExceeded { cap: max_m })
}

/// Largest `m` with `f ∈ I_aff + m^m` in the chart at `p`, for `f` given in original coordinates.
pub fn ord_at(f: &QPoly, x: &PointedVariety, max_m: u32) -> Result<Order, GeometryError> {
    if !f.is_homogeneous() {
        return Err(GeometryError::NotHomogeneous);
    }
    let g = x.normalize_poly(f)?.dehomogenize(0);
    ord_of_affine(&g, &affine_ideal(x), max_m)
}

/// Same as [`ord_at`] for an already dehomogenized function.
pub fn ord_of_affine(g: &QPoly, affine: &QIdeal, max_m: u32) -> Result<Order, GeometryError> {
    for m in 1..=max_m {
        if !TruncatedQuotient::new(affine, m).contains(g) {
            return Ok(Order::Finite(m - 1));
        }
    }
    if affine.contains(g) {
        Ok(Order::Infinite)
    } else {
        Err(GeometryError::OrderCapExceeded { cap: max_m })
    }
}

/// Order of the lowest form of `g` at the origin, ignoring any ideal.
pub fn lowest_degree(g: &QPoly) -> Option<u32> {
    g.terms().iter().filter(|(_, c)| !c.is_zero()).map(|(m, _)| m.degree()).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::pointed::normalize_point;
    use crate::poly::{default_names, parse_polynomial, rat, Rational};

    fn ideal(n: usize, gens: &[&str]) -> QIdeal {
        let names = default_names(n);
        QIdeal::new(n, gens.iter().map(|g| parse_polynomial(g, &names).unwrap()).collect())
    }

    fn pt(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x)).collect()
    }

    fn p(n: usize, s: &str) -> QPoly {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    #[test]
    fn smooth_conic_point() {
        let x = normalize_point(&ideal(3, &["x0*x2 - x1^2"]), &pt(&[1, 1, 1])).unwrap();
        assert_eq!(multiplicity_at(&x, DEFAULT_MAX_M).unwrap(), 1);
    }

    #[test]
    fn cusp_has_multiplicity_two() {
        // x0 = 1 chart: x2^2 - x1^3
        let x = normalize_point(&ideal(3, &["x0*x2^2 - x1^3"]), &pt(&[1, 0, 0])).unwrap();
        assert_eq!(multiplicity_at(&x, DEFAULT_MAX_M).unwrap(), 2);
    }

    #[test]
    fn cone_vertex() {
        let x = normalize_point(&ideal(4, &["x1*x3 - x2^2"]), &pt(&[1, 0, 0, 0])).unwrap();
        assert_eq!(multiplicity_at(&x, DEFAULT_MAX_M).unwrap(), 2);
    }

    #[test]
    fn isolated_point_falls_back_to_local_dimension() {
        // the line x0 = 0 together with the point [1:0:0]
        let x = normalize_point(&ideal(3, &["x0*x1", "x0*x2"]), &pt(&[1, 0, 0])).unwrap();
        assert_eq!(multiplicity_at(&x, DEFAULT_MAX_M).unwrap(), 1);
    }

    #[test]
    fn orders_on_plane_and_conic() {
        let plane = normalize_point(&QIdeal::zero(3), &pt(&[1, 0, 0])).unwrap();
        assert_eq!(ord_at(&p(3, "x1"), &plane, 10).unwrap(), Order::Finite(1));
        assert_eq!(ord_at(&p(3, "x1^2"), &plane, 10).unwrap(), Order::Finite(2));
        assert_eq!(ord_at(&p(3, "x0"), &plane, 10).unwrap(), Order::Finite(0));
        let conic = normalize_point(&ideal(3, &["x0*x2 - x1^2"]), &pt(&[1, 0, 0])).unwrap();
        assert_eq!(ord_at(&p(3, "x2"), &conic, 10).unwrap(), Order::Finite(2));
        assert_eq!(ord_at(&p(3, "x0*x2 - x1^2"), &conic, 6).unwrap(), Order::Infinite);
    }
}
