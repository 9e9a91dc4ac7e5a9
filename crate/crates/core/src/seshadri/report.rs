use std::fmt;

use crate::poly::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// A line on `X` passes through `p`, so `ε = 1`.
    LineFound,
    /// `ε` is known exactly.
    Exact,
    /// Only a lower bound is established.
    LowerBoundOnly,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::LineFound => "LINE_FOUND",
            Status::Exact => "EXACT",
            Status::LowerBoundOnly => "LOWER_BOUND_ONLY",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Who vouches for a hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Machine,
    UserAsserted,
    NotApplicable,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Machine => "machine-verified",
            Provenance::UserAsserted => "user-asserted",
            Provenance::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub condition: String,
    pub provenance: Provenance,
    pub detail: String,
}

impl LedgerEntry {
    pub fn new(condition: &str, provenance: Provenance, detail: impl Into<String>) -> Self {
        Self {
            condition: condition.to_string(),
            provenance,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeshadriReport {
    pub status: Status,
    /// The exact value, or the lower bound when `status` is `LowerBoundOnly`.
    pub epsilon: Rational,
    /// `d_p(X)`, when it was computed.
    pub dp: Option<u32>,
    /// `d_p(Y)` for complete intersections.
    pub ambient_dp: Option<u32>,
    /// Largest cut degree for complete intersections.
    pub dr: Option<u32>,
    pub line_scheme_dim: i64,
    pub ledger: Vec<LedgerEntry>,
    pub notes: Vec<String>,
}

impl SeshadriReport {
    pub fn summary(&self) -> String {
        let rel = if self.status == Status::LowerBoundOnly { ">=" } else { "=" };
        format!("{} epsilon {rel} {}", self.status, format_rational(&self.epsilon))
    }
}
