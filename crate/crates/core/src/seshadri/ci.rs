use crate::geometry::{cut_out_degree, line_scheme, normalize_point, GeometryError, PointedVariety};
use crate::groebner::QIdeal;
use crate::poly::{rat, ratio, Field, QPoly, Rational};

use super::report::{LedgerEntry, Provenance, SeshadriReport, Status};
use super::{Options, SeshadriError};

/// `X = Y ∩ V(f_1, …, f_r)` through `p`, with `deg f_1 <= … <= deg f_r`.
#[derive(Clone, Debug)]
pub struct CompleteIntersectionInput {
    ambient: PointedVariety,
    variety: PointedVariety,
    cuts: Vec<QPoly>,
    degrees: Vec<u32>,
    pub ambient_homogeneous: bool,
}

impl CompleteIntersectionInput {
    /// Cuts are reordered by ascending degree (stable for ties).
    pub fn new(
        ambient_ideal: &QIdeal,
        point: &[Rational],
        cuts: Vec<QPoly>,
        ambient_homogeneous: bool,
    ) -> Result<Self, SeshadriError> {
        if cuts.is_empty() {
            return Err(SeshadriError::InvalidInput("at least one cutting polynomial is required".into()));
        }
        let mut cuts = cuts;
        for f in &cuts {
            if f.is_zero() || !f.is_homogeneous() {
                return Err(SeshadriError::InvalidInput(format!(
                    "cutting polynomial {f} must be a nonzero form"
                )));
            }
            if !f.evaluate(point).map_err(GeometryError::from)?.is_zero() {
                return Err(SeshadriError::InvalidInput(format!(
                    "cutting polynomial {f} does not vanish at the point"
                )));
            }
        }
        cuts.sort_by_key(|f| f.total_degree());
        let degrees = cuts.iter().map(|f| f.total_degree().unwrap()).collect();
        let ambient = normalize_point(ambient_ideal, point)?;
        let variety = normalize_point(&ambient_ideal.with_generators(&cuts), point)?;
        Ok(Self {
            ambient,
            variety,
            cuts,
            degrees,
            ambient_homogeneous,
        })
    }

    pub fn ambient(&self) -> &PointedVariety {
        &self.ambient
    }

    pub fn variety(&self) -> &PointedVariety {
        &self.variety
    }

    pub fn cuts(&self) -> &[QPoly] {
        &self.cuts
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dr(&self) -> u32 {
        *self.degrees.last().expect("nonempty")
    }

    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

fn failed(condition: &str, detail: String) -> SeshadriError {
    SeshadriError::HypothesisFailed {
        condition: condition.to_string(),
        detail,
    }
}

/// Exact `ε(X, O_X(1); p)` for a complete intersection satisfying the cone-cutting hypotheses.
pub fn classify_ci(input: &CompleteIntersectionInput, _opts: &Options) -> Result<SeshadriReport, SeshadriError> {
    let r = input.degrees().len() as i64;
    let dr = input.dr();
    let sum = input.degree_sum() as i64;
    let mut ledger = Vec::new();

    let hy = input.ambient().ideal().hilbert_data().map_err(GeometryError::from)?;
    let hx = input.variety().ideal().hilbert_data().map_err(GeometryError::from)?;
    if hx.dim != hy.dim - r {
        return Err(failed(
            "i",
            format!("codim(X, Y) = {} but there are {r} cuts", hy.dim - hx.dim),
        ));
    }
    ledger.push(LedgerEntry::new(
        "i) r = codim(X, Y)",
        Provenance::Machine,
        format!("dim Y = {}, dim X = {}, r = {r}", hy.dim, hx.dim),
    ));

    let fy = line_scheme(input.ambient(), None)?;
    if fy.is_empty() {
        return Err(failed("ii", "F_p(Y) is empty".into()));
    }
    if sum > fy.dim() + 1 {
        return Err(failed(
            "ii",
            format!("sum of degrees {sum} exceeds dim F_p(Y) + 1 = {}", fy.dim() + 1),
        ));
    }
    ledger.push(LedgerEntry::new(
        "ii) F_p(Y) nonempty, sum d_j <= dim F_p(Y) + 1",
        Provenance::Machine,
        format!("dim F_p(Y) = {}, sum d_j = {sum}", fy.dim()),
    ));

    let dpy = cut_out_degree(input.ambient())?;
    let fx = line_scheme(input.variety(), None)?;
    let base = |status, epsilon: Rational, ledger: Vec<LedgerEntry>, notes: Vec<String>| SeshadriReport {
        status,
        epsilon,
        dp: None,
        ambient_dp: Some(dpy),
        dr: Some(dr),
        line_scheme_dim: fx.dim(),
        ledger,
        notes,
    };

    if dr >= 2 {
        if dpy > dr {
            return Err(failed("iii", format!("d_p(Y) = {dpy} exceeds d_r = {dr}")));
        }
        ledger.push(LedgerEntry::new(
            "iii) d_p(Y) <= d_r",
            Provenance::Machine,
            format!("d_p(Y) = {dpy}, d_r = {dr}"),
        ));
        ledger.push(LedgerEntry::new("ambient homogeneous", Provenance::NotApplicable, "unused when d_r >= 2"));
    } else {
        ledger.push(LedgerEntry::new("iii) d_p(Y) <= d_r", Provenance::NotApplicable, "replaced by d_p(Y) <= 2 when d_r = 1"));
    }

    if !fx.is_empty() {
        return Ok(base(
            Status::Exact,
            rat(1),
            ledger,
            vec!["F_p(X) is nonempty: a line through p lies on X".into()],
        ));
    }
    if sum < fy.dim() + 1 {
        return Err(SeshadriError::Inconsistency(format!(
            "F_p(X) is empty although it is cut from F_p(Y) (dim {}) by only {sum} hypersurfaces",
            fy.dim()
        )));
    }

    if dr >= 2 {
        return Ok(base(
            Status::Exact,
            ratio(dr as i64, dr as i64 - 1),
            ledger,
            vec!["F_p(X) is empty".into()],
        ));
    }

    // hyperplane sections: also need Y cut out by quadrics at p and a homogeneous ambient
    if dpy > 2 {
        return Err(failed("quadrics", format!("d_p(Y) = {dpy} > 2: Y is not cut out by quadrics at p")));
    }
    ledger.push(LedgerEntry::new("d_p(Y) <= 2", Provenance::Machine, format!("d_p(Y) = {dpy}")));
    if input.ambient_homogeneous {
        ledger.push(LedgerEntry::new(
            "ambient homogeneous of Picard number 1",
            Provenance::UserAsserted,
            "flag ambient_homogeneous",
        ));
        return Ok(base(Status::Exact, rat(2), ledger, vec!["F_p(X) is empty and d_r = 1".into()]));
    }
    ledger.push(LedgerEntry::new(
        "ambient homogeneous of Picard number 1",
        Provenance::NotApplicable,
        "not asserted",
    ));
    Ok(base(
        Status::LowerBoundOnly,
        rat(2),
        ledger,
        vec![
            "ambient homogeneity not asserted: only the lower bound 2 is certified".into(),
            "suggestion: run the oracle conic search; a conic through p would give equality".into(),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial};

    fn p(n: usize, s: &str) -> QPoly {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    fn pt(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn cubic_surface_through_origin_point() {
        let f = p(4, "x0^2*x1 + x0*(x2^2 - x3^2 + x1*x3) + x1^3 + x2^3 + x3^3 - x1*x2*x3");
        let input = CompleteIntersectionInput::new(&QIdeal::zero(4), &pt(&[1, 0, 0, 0]), vec![f], false).unwrap();
        let report = classify_ci(&input, &Options::default()).unwrap();
        assert_eq!(report.status, Status::Exact);
        if report.line_scheme_dim < 0 {
            assert_eq!(report.epsilon, ratio(3, 2));
        } else {
            assert_eq!(report.epsilon, rat(1));
        }
    }

    #[test]
    fn plane_conic_has_epsilon_two() {
        let input =
            CompleteIntersectionInput::new(&QIdeal::zero(3), &pt(&[1, 0, 0]), vec![p(3, "x0*x2 - x1^2")], false)
                .unwrap();
        let report = classify_ci(&input, &Options::default()).unwrap();
        assert_eq!((report.status, report.epsilon), (Status::Exact, rat(2)));
    }

    #[test]
    fn too_many_cuts_fail_condition_two() {
        let input = CompleteIntersectionInput::new(
            &QIdeal::zero(3),
            &pt(&[1, 0, 0]),
            vec![p(3, "x0*x2^2 - x1^3")],
            false,
        )
        .unwrap();
        let err = classify_ci(&input, &Options::default()).unwrap_err();
        assert!(matches!(err, SeshadriError::HypothesisFailed { ref condition, .. } if condition == "ii"));
    }

    #[test]
    fn cuts_must_vanish_at_the_point() {
        let err = CompleteIntersectionInput::new(&QIdeal::zero(3), &pt(&[1, 0, 0]), vec![p(3, "x0")], false);
        assert!(matches!(err, Err(SeshadriError::InvalidInput(_))));
    }
}
