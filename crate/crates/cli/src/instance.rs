//! Instance files: JSON documents naming the variables, the ambient ideal, the cutting
//! forms and the point.

use std::fs;
use std::path::Path;

use seshadri_core::groebner::QIdeal;
use seshadri_core::poly::{format_rational, parse_polynomial, parse_rational, QPoly, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutSpec {
    pub degree: u32,
    pub poly: String,
}

/// A coordinate written either as a JSON integer or as a string like `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub variables: Vec<String>,
    /// Generators of `Y`; empty means all of `P^N`.
    #[serde(default)]
    pub ambient: Vec<String>,
    #[serde(default)]
    pub cuts: Vec<CutSpec>,
    pub point: Vec<Coordinate>,
    #[serde(default)]
    pub ambient_homogeneous: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retries: Option<u32>,
    /// Component `Z` of `F_p(Y)` for `curve`, in the variables other than the first one
    /// where the point is nonzero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<Vec<String>>,
}

/// A validated instance with every expression parsed.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub names: Vec<String>,
    pub ambient: QIdeal,
    pub cuts: Vec<QPoly>,
    pub point: Vec<Rational>,
    pub component: Option<QIdeal>,
}

impl Instance {
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// `X = Y ∩ V(cuts)`.
    pub fn variety_ideal(&self) -> QIdeal {
        self.ambient.with_generators(&self.cuts)
    }

    pub fn pivot(&self) -> usize {
        self.point.iter().position(|c| c != &Rational::from_integer(0.into())).unwrap_or(0)
    }

    /// Names of the direction coordinates: every variable except the pivot.
    pub fn direction_names(&self) -> Vec<String> {
        let pivot = self.pivot();
        self.names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pivot)
            .map(|(_, n)| n.clone())
            .collect()
    }

    pub fn point_strings(&self) -> Vec<String> {
        self.point.iter().map(format_rational).collect()
    }
}

pub const BUILTINS: &[(&str, &str)] = &[
    ("quadric-surface", include_str!("../instances/quadric-surface.json")),
    ("quadric-threefold", include_str!("../instances/quadric-threefold.json")),
    ("twisted-cubic", include_str!("../instances/twisted-cubic.json")),
    ("fermat-cubic", include_str!("../instances/fermat-cubic.json")),
    ("random-quartic-threefold", include_str!("../instances/random-quartic-threefold.json")),
    ("two-quadrics-p4", include_str!("../instances/two-quadrics-p4.json")),
    ("gr24-hyperplanes", include_str!("../instances/gr24-hyperplanes.json")),
    ("gr25", include_str!("../instances/gr25.json")),
];

/// Loads `builtin:<name>` or a path on disk.
pub fn load(source: &str) -> Result<Instance, CliError> {
    let text = match source.strip_prefix("builtin:") {
        Some(name) => BUILTINS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| {
                let known: Vec<&str> = BUILTINS.iter().map(|(n, _)| *n).collect();
                CliError::Input(format!("unknown builtin {name:?}; known: {}", known.join(", ")))
            })?,
        None => fs::read_to_string(Path::new(source))
            .map_err(|e| CliError::Input(format!("cannot read {source}: {e}")))?,
    };
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed instance file: {e}")))?;
    validate(file)
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_with(expr: &str, names: &[String], what: &str) -> Result<QPoly, CliError> {
    parse_polynomial(expr, names).map_err(|e| CliError::Input(format!("{what} {expr:?}: {e}")))
}

pub fn validate(file: InstanceFile) -> Result<Instance, CliError> {
    let names = file.variables.clone();
    if names.len() < 2 {
        return Err(CliError::Input("need at least two variables".into()));
    }
    for (i, n) in names.iter().enumerate() {
        if !is_identifier(n) {
            return Err(CliError::Input(format!("variable name {n:?} is not an identifier")));
        }
        if names[..i].contains(n) {
            return Err(CliError::Input(format!("variable {n:?} is repeated")));
        }
    }
    if file.point.len() != names.len() {
        return Err(CliError::Input(format!(
            "point has {} coordinates but there are {} variables",
            file.point.len(),
            names.len()
        )));
    }
    let point = file
        .point
        .iter()
        .map(|c| match c {
            Coordinate::Int(v) => Ok(Rational::from_integer((*v).into())),
            Coordinate::Text(t) => {
                parse_rational(t).ok_or_else(|| CliError::Input(format!("coordinate {t:?} is not a rational number")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut ambient = Vec::new();
    for g in &file.ambient {
        let f = parse_with(g, &names, "ambient generator")?;
        if !f.is_homogeneous() {
            return Err(CliError::Input(format!("ambient generator {g:?} is not homogeneous")));
        }
        ambient.push(f);
    }
    let mut cuts = Vec::new();
    let mut last = 0;
    for c in &file.cuts {
        let f = parse_with(&c.poly, &names, "cutting polynomial")?;
        if f.is_zero() || !f.is_homogeneous() || f.total_degree() != Some(c.degree) {
            return Err(CliError::Input(format!(
                "cutting polynomial {:?} is not a nonzero form of declared degree {}",
                c.poly, c.degree
            )));
        }
        if c.degree < last {
            return Err(CliError::Input("cutting polynomials must be listed by ascending degree".into()));
        }
        last = c.degree;
        cuts.push(f);
    }
    if let Some(primes) = &file.primes {
        if primes.is_empty() {
            return Err(CliError::Input("the prime list is empty".into()));
        }
    }

    let ambient = QIdeal::new(names.len(), ambient);
    let mut instance = Instance {
        file,
        names,
        ambient,
        cuts,
        point,
        component: None,
    };
    if let Some(z) = instance.file.component.clone() {
        let dir = instance.direction_names();
        let gens = z
            .iter()
            .map(|g| parse_with(g, &dir, "component generator"))
            .collect::<Result<Vec<_>, _>>()?;
        instance.component = Some(QIdeal::new(dir.len(), gens));
    }
    Ok(instance)
}
