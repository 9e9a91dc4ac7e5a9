use crate::geometry::{
    affine_ideal, cut_out_degree, line_scheme, slice_decomposition, Order, PointedVariety,
};
use crate::geometry::local::ord_of_affine;
use crate::groebner::QIdeal;
use crate::poly::{rat, ratio, Monomial, MonomialOrder, QPoly};

use super::report::{LedgerEntry, Provenance, SeshadriReport, Status};
use super::{Options, SeshadriError};

/// `ε ≥ d_p/(d_p - 1)` when no line through `p` lies on `X`, and `ε = 1` otherwise.
pub fn lower_bound(x: &PointedVariety, _opts: &Options) -> Result<SeshadriReport, SeshadriError> {
    let hilbert = x.ideal().hilbert_data().map_err(crate::geometry::GeometryError::from)?;
    if hilbert.dim <= 0 {
        return Err(SeshadriError::InvalidInput(
            "the variety must have positive dimension".into(),
        ));
    }
    let lines = line_scheme(x, None)?;
    let dp = cut_out_degree(x)?;
    let mut ledger = vec![LedgerEntry::new(
        "line scheme",
        Provenance::Machine,
        format!("dim F_p(X) = {}", lines.dim()),
    )];
    if !lines.is_empty() {
        return Ok(SeshadriReport {
            status: Status::LineFound,
            epsilon: rat(1),
            dp: Some(dp),
            ambient_dp: None,
            dr: None,
            line_scheme_dim: lines.dim(),
            ledger,
            notes: vec!["a line on X passes through p".into()],
        });
    }
    if dp == 1 {
        return Err(SeshadriError::Inconsistency(
            "d_p = 1 but no line through p: a linear space always contains such lines".into(),
        ));
    }
    ledger.push(LedgerEntry::new("d_p(X)", Provenance::Machine, format!("d_p = {dp}")));
    Ok(SeshadriReport {
        status: Status::LowerBoundOnly,
        epsilon: ratio(dp as i64, dp as i64 - 1),
        dp: Some(dp),
        ambient_dp: None,
        dr: None,
        line_scheme_dim: lines.dim(),
        ledger,
        notes: Vec::new(),
    })
}

/// `D_j^i = x0^{i-1} f_j^1 + … + f_j^i`, written in normalized coordinates.
#[derive(Clone, Debug)]
pub struct AuxDivisor {
    /// Index of the basis element `f_j` of `(I_X)_{d_p}`.
    pub j: usize,
    pub i: usize,
    pub poly: QPoly,
    pub ord: Order,
}

#[derive(Clone, Debug)]
pub struct AuxDivisors {
    pub dp: u32,
    pub divisors: Vec<AuxDivisor>,
    /// True when `X ∩ ⋂ D_j^i = {p}` as sets.
    pub common_zero: bool,
}

/// Builds every auxiliary divisor from a basis of `(I_X)_{d_p}`, computes its order at `p`,
/// and tests whether they meet `X` only at `p`.
pub fn aux_divisors(x: &PointedVariety, opts: &Options) -> Result<AuxDivisors, SeshadriError> {
    let dp = cut_out_degree(x)?;
    let basis = x
        .ideal()
        .graded_piece(dp as i64)
        .map_err(crate::geometry::GeometryError::from)?;
    let affine = affine_ideal(x);
    let mut divisors = Vec::new();
    for (j, f) in basis.iter().enumerate() {
        let dec = slice_decomposition(&x.normalize_poly(f)?)?;
        for i in 1..dp as usize {
            let poly = dec.partial_sum(i);
            let ord = ord_of_affine(&poly.dehomogenize(0), &affine, opts.max_m)?;
            divisors.push(AuxDivisor { j, i, poly, ord });
        }
    }
    let common_zero = meets_only_at_base_point(x.normalized_ideal(), &divisors)?;
    Ok(AuxDivisors {
        dp,
        divisors,
        common_zero,
    })
}

/// `V(I + Σ D) = {[1:0:…:0]}` as a set.
fn meets_only_at_base_point(ideal: &QIdeal, divisors: &[AuxDivisor]) -> Result<bool, SeshadriError> {
    let n = ideal.nvars();
    let extra: Vec<QPoly> = divisors.iter().map(|d| d.poly.clone()).collect();
    let k = ideal.with_generators(&extra);
    // nothing at infinity
    let x0 = QPoly::var(n, 0);
    let at_infinity = k.with_generators(&[x0]);
    let h = at_infinity.hilbert_data().map_err(crate::geometry::GeometryError::from)?;
    if !h.is_empty() {
        return Ok(false);
    }
    // the affine part is a fat point at the origin
    let affine = QIdeal::new(n - 1, k.generators().iter().map(|g| g.dehomogenize(0)).collect());
    let Some(length) = affine.colength() else {
        return Ok(false);
    };
    if length == 0 {
        // the base point itself is missing, which would contradict p ∈ X
        return Ok(false);
    }
    for v in 0..n - 1 {
        let mut e = vec![0u16; n - 1];
        e[v] = length as u16;
        let power = QPoly::monomial(Monomial::from_exponents(&e), rat(1), MonomialOrder::GrevLex);
        if !affine.contains(&power) {
            return Ok(false);
        }
    }
    Ok(true)
}
