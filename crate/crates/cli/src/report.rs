//! The report document. Both renderings are produced from the same values.

use std::fmt::Write as _;

use seshadri_core::groebner::HilbertData;
use seshadri_core::poly::{format_rational, Rational};
use seshadri_core::seshadri::{ConstructionTrace, CurveCertificate, SeshadriReport};
use serde::{Deserialize, Serialize};

use crate::instance::Instance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub name: String,
    pub variables: Vec<String>,
    pub ambient: Vec<String>,
    pub cuts: Vec<String>,
    pub degrees: Vec<u32>,
    pub point: Vec<String>,
    pub ambient_homogeneous: bool,
}

impl InstanceEcho {
    pub fn from_instance(inst: &Instance) -> Self {
        Self {
            name: inst.file.name.clone(),
            variables: inst.names.clone(),
            ambient: inst.file.ambient.clone(),
            cuts: inst.file.cuts.iter().map(|c| c.poly.clone()).collect(),
            degrees: inst.file.cuts.iter().map(|c| c.degree).collect(),
            point: inst.point_strings(),
            ambient_homogeneous: inst.file.ambient_homogeneous,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerJson {
    pub condition: String,
    pub provenance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriJson {
    pub status: String,
    pub epsilon: String,
    pub dp: Option<u32>,
    pub ambient_dp: Option<u32>,
    pub dr: Option<u32>,
    pub line_scheme_dim: i64,
    pub ledger: Vec<LedgerJson>,
    pub notes: Vec<String>,
}

impl From<&SeshadriReport> for SeshadriJson {
    fn from(r: &SeshadriReport) -> Self {
        Self {
            status: r.status.as_str().into(),
            epsilon: format_rational(&r.epsilon),
            dp: r.dp,
            ambient_dp: r.ambient_dp,
            dr: r.dr,
            line_scheme_dim: r.line_scheme_dim,
            ledger: r
                .ledger
                .iter()
                .map(|e| LedgerJson {
                    condition: e.condition.clone(),
                    provenance: e.provenance.as_str().into(),
                    detail: e.detail.clone(),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub dim: i64,
    pub degree: u64,
    /// Coefficients, constant term first.
    pub hilbert_polynomial: Vec<String>,
    pub numerator: Vec<i64>,
}

impl From<&HilbertData> for HilbertJson {
    fn from(h: &HilbertData) -> Self {
        Self {
            dim: h.dim,
            degree: h.degree,
            hilbert_polynomial: h.hilbert_poly.iter().map(format_rational).collect(),
            numerator: h.numerator.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSchemeJson {
    /// Direction coordinates: every variable except the pivot of the point.
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub hilbert: HilbertJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyJson {
    pub hilbert: HilbertJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpJson {
    pub x: u32,
    pub y: u32,
    pub degree_x: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub construction: String,
    pub component: Vec<String>,
    pub cuts: Vec<String>,
    pub seed: u64,
    pub attempt: u32,
    pub randomized: bool,
    pub irreducibility_certified: bool,
    pub assumptions: Vec<String>,
}

impl From<&ConstructionTrace> for TraceJson {
    fn from(t: &ConstructionTrace) -> Self {
        Self {
            construction: t.construction.clone(),
            component: t.component.clone(),
            cuts: t.cuts.clone(),
            seed: t.seed,
            attempt: t.attempt,
            randomized: t.randomized,
            irreducibility_certified: t.irreducibility_certified,
            assumptions: t.assumptions.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    /// Curve ideal in the instance variables.
    pub ideal: Vec<String>,
    pub degree: u64,
    pub multiplicity: u32,
    pub ratio: String,
    pub trace: TraceJson,
}

impl CertificateJson {
    pub fn new(c: &CurveCertificate, names: &[String]) -> Self {
        Self {
            ideal: c.ideal.generators().iter().map(|g| g.fmt_with(names)).collect(),
            degree: c.degree,
            multiplicity: c.multiplicity,
            ratio: format_rational(&c.ratio),
            trace: (&c.trace).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessJson {
    pub n: u32,
    pub d: u32,
    pub variables: Vec<String>,
    pub hypersurface: String,
    pub line_scheme: HilbertJson,
    pub expected_ratio: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeJson {
    pub q: u32,
    /// `None` when the prime was skipped; see `note`.
    pub line_count: Option<usize>,
    pub directions: Vec<Vec<u32>>,
    pub conic: Option<ConicJson>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicJson {
    pub found: bool,
    pub draws: usize,
    pub v: Vec<u32>,
    pub w: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub line_scheme_empty: bool,
    pub primes: Vec<PrimeJson>,
    pub agreement: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub ambient_saturated: bool,
    pub variety_saturated: bool,
    pub multiplicity_at_p: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub condition: Option<String>,
    pub message: String,
}

/// Everything one command produced. Timing lives outside so the JSON stays reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub instance: Option<InstanceEcho>,
    pub seed: u64,
    pub max_m: u32,
    pub retries: u32,
    pub primes: Vec<u32>,
    pub exit_code: i32,
    pub error: Option<ErrorJson>,
    pub seshadri: Option<SeshadriJson>,
    pub variety: Option<VarietyJson>,
    pub line_scheme: Option<LineSchemeJson>,
    pub dp: Option<DpJson>,
    pub certificate: Option<CertificateJson>,
    pub sharpness: Option<SharpnessJson>,
    pub oracle: Option<OracleJson>,
    pub validation: Option<ValidationJson>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering; `elapsed` is appended when given.
    pub fn to_text(&self, elapsed: Option<std::time::Duration>) -> String {
        let mut out = String::new();
        let w = &mut out;
        let name = self.instance.as_ref().map(|i| i.name.as_str()).unwrap_or("-");
        let _ = writeln!(w, "{} on {name} (seed {}, max-m {})", self.command, self.seed, self.max_m);
        if let Some(i) = &self.instance {
            let _ = writeln!(w, "  point [{}]", i.point.join(" : "));
        }
        if let Some(s) = &self.seshadri {
            let _ = writeln!(w, "status {}  epsilon {}", s.status, s.epsilon);
            for (label, v) in [("d_p(X)", s.dp), ("d_p(Y)", s.ambient_dp), ("d_r", s.dr)] {
                if let Some(v) = v {
                    let _ = writeln!(w, "  {label} = {v}");
                }
            }
            let _ = writeln!(w, "  dim F_p(X) = {}", s.line_scheme_dim);
            for e in &s.ledger {
                let _ = writeln!(w, "  [{}] {}: {}", e.provenance, e.condition, e.detail);
            }
            for n in &s.notes {
                let _ = writeln!(w, "  note: {n}");
            }
        }
        if let Some(v) = &self.variety {
            let _ = writeln!(w, "X: dim {} degree {}", v.hilbert.dim, v.hilbert.degree);
        }
        if let Some(l) = &self.line_scheme {
            let _ = writeln!(
                w,
                "F_p(X) in ({}): dim {} degree {}",
                l.variables.join(", "),
                l.hilbert.dim,
                l.hilbert.degree
            );
            let _ = writeln!(w, "  Hilbert polynomial (constant first) [{}]", l.hilbert.hilbert_polynomial.join(", "));
            for g in &l.generators {
                let _ = writeln!(w, "  {g}");
            }
        }
        if let Some(d) = &self.dp {
            let _ = writeln!(w, "d_p(X) = {}  d_p(Y) = {}  deg X = {}", d.x, d.y, d.degree_x);
        }
        if let Some(s) = &self.sharpness {
            let _ = writeln!(w, "sharpness n = {} d = {}: f = {}", s.n, s.d, s.hypersurface);
            let _ = writeln!(w, "  dim F_p = {}, expected ratio {}", s.line_scheme.dim, s.expected_ratio);
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(w, "curve: deg {} mult {} ratio {}", c.degree, c.multiplicity, c.ratio);
            let _ = writeln!(w, "  attempt {} (randomized {})", c.trace.attempt, c.trace.randomized);
            for g in &c.ideal {
                let _ = writeln!(w, "  {g}");
            }
            for a in &c.trace.assumptions {
                let _ = writeln!(w, "  assumes: {a}");
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(w, "oracle: {} (line scheme empty: {})", o.agreement, o.line_scheme_empty);
            for p in &o.primes {
                match p.line_count {
                    Some(c) => {
                        let _ = write!(w, "  q = {}: {c} lines", p.q);
                    }
                    None => {
                        let _ = write!(w, "  q = {}: skipped", p.q);
                    }
                }
                if let Some(c) = &p.conic {
                    let _ = write!(w, ", conic {} after {} draws", if c.found { "found" } else { "not found" }, c.draws);
                }
                if let Some(n) = &p.note {
                    let _ = write!(w, " ({n})");
                }
                let _ = writeln!(w);
            }
            for n in &o.notes {
                let _ = writeln!(w, "  note: {n}");
            }
        }
        if let Some(v) = &self.validation {
            let _ = writeln!(
                w,
                "validation: Y saturated {}, X saturated {}, mult_p X = {}",
                v.ambient_saturated,
                v.variety_saturated,
                v.multiplicity_at_p.map(|m| m.to_string()).unwrap_or_else(|| "-".into())
            );
        }
        if let Some(e) = &self.error {
            match &e.condition {
                Some(c) => {
                    let _ = writeln!(w, "error ({}, condition {c}): {}", e.kind, e.message);
                }
                None => {
                    let _ = writeln!(w, "error ({}): {}", e.kind, e.message);
                }
            }
        }
        if let Some(t) = elapsed {
            let _ = writeln!(w, "time {:.3}s", t.as_secs_f64());
        }
        let _ = writeln!(w, "exit code {}", self.exit_code);
        out
    }
}

/// Parses a rational field of a report back into an exact value.
pub fn rational_field(text: &str) -> Option<Rational> {
    seshadri_core::poly::parse_rational(text)
}
