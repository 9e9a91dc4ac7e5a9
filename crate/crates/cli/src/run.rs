//! Command dispatch and exit codes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seshadri_core::geometry::{cut_out_degree, line_scheme, multiplicity_at, normalize_point, GeometryError, PointedVariety};
use seshadri_core::oracle::{
    agreement, count_lines_mod_q, direction_count, find_conic_mod_q, Agreement, ConicSearch, ModularInstance,
    DEFAULT_PRIMES,
};
use seshadri_core::poly::{default_names, format_rational, ratio};
use seshadri_core::seshadri::{
    classify_ci, lower_bound, seshadri_curve, sharpness_example, CompleteIntersectionInput, Options, SeshadriError,
};

use crate::instance::Instance;
use crate::report::{
    CertificateJson, ConicJson, DpJson, ErrorJson, InstanceEcho, LineSchemeJson, OracleJson, PrimeJson, Report,
    SeshadriJson, SharpnessJson, ValidationJson, VarietyJson,
};
use crate::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

/// Enumeration above this many directions per prime is refused.
pub const MAX_DIRECTIONS: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Bound,
    Fano,
    Dp,
    Classify,
    Curve,
    Sharpness,
    Oracle,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Bound => "bound",
            Command::Fano => "fano",
            Command::Dp => "dp",
            Command::Classify => "classify",
            Command::Curve => "curve",
            Command::Sharpness => "sharpness",
            Command::Oracle => "oracle",
        }
    }
}

/// Command-line overrides; `None` falls back to the instance file, then to defaults.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub seed: Option<u64>,
    pub primes: Option<Vec<u32>>,
    pub max_m: Option<u32>,
    pub retries: Option<u32>,
    pub validate: bool,
    /// Conic-search draws per prime.
    pub budget: Option<usize>,
    pub n: u32,
    pub d: u32,
}

pub const DEFAULT_BUDGET: usize = 2000;

fn options(flags: &Flags, inst: Option<&Instance>) -> Options {
    let file = inst.map(|i| &i.file);
    let defaults = Options::default();
    Options {
        max_m: flags.max_m.or(file.and_then(|f| f.max_m)).unwrap_or(defaults.max_m),
        retries: flags.retries.or(file.and_then(|f| f.retries)).unwrap_or(defaults.retries),
        seed: flags.seed.or(file.and_then(|f| f.seed)).unwrap_or(defaults.seed),
    }
}

fn primes(flags: &Flags, inst: Option<&Instance>) -> Vec<u32> {
    flags
        .primes
        .clone()
        .or_else(|| inst.and_then(|i| i.file.primes.clone()))
        .unwrap_or_else(|| DEFAULT_PRIMES.to_vec())
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Oracle(_) => EXIT_INPUT,
            CliError::Inconsistency(_) => EXIT_INCONSISTENT,
            CliError::Seshadri(e) => match e {
                SeshadriError::HypothesisFailed { .. } => EXIT_HYPOTHESIS,
                SeshadriError::InvalidInput(_) | SeshadriError::Geometry(_) => EXIT_INPUT,
                SeshadriError::Inconsistency(_)
                | SeshadriError::CounterexampleCandidate { .. }
                | SeshadriError::Degenerate { .. } => EXIT_INCONSISTENT,
            },
        }
    }

    fn to_json(&self) -> ErrorJson {
        let (kind, condition) = match self {
            CliError::Input(_) => ("input", None),
            CliError::Oracle(_) => ("oracle", None),
            CliError::Inconsistency(_) => ("inconsistency", None),
            CliError::Seshadri(e) => match e {
                SeshadriError::HypothesisFailed { condition, .. } => ("hypothesis", Some(condition.clone())),
                SeshadriError::InvalidInput(_) => ("input", None),
                SeshadriError::Geometry(_) => ("input", None),
                SeshadriError::Inconsistency(_) => ("inconsistency", None),
                SeshadriError::CounterexampleCandidate { .. } => ("counterexample-candidate", None),
                SeshadriError::Degenerate { .. } => ("degenerate", None),
            },
        };
        ErrorJson {
            kind: kind.into(),
            condition,
            message: self.to_string(),
        }
    }
}

/// Runs one command. Failures are recorded in the report, never returned.
pub fn run(command: Command, inst: Option<&Instance>, flags: &Flags) -> Report {
    let opts = options(flags, inst);
    let mut report = Report {
        command: command.name().into(),
        instance: inst.map(InstanceEcho::from_instance),
        seed: opts.seed,
        max_m: opts.max_m,
        retries: opts.retries,
        primes: primes(flags, inst),
        ..Report::default()
    };
    let outcome = match (command, inst) {
        (Command::Sharpness, _) => sharpness(&mut report, flags, &opts),
        (_, None) => Err(CliError::Input(format!("{} needs an instance", command.name()))),
        (_, Some(inst)) => {
            let validated = if flags.validate { validate(&mut report, inst, &opts) } else { Ok(()) };
            validated.and_then(|_| match command {
                Command::Bound => bound(&mut report, inst, &opts),
                Command::Fano => fano(&mut report, inst),
                Command::Dp => dp(&mut report, inst),
                Command::Classify => classify(&mut report, inst, &opts),
                Command::Curve => curve(&mut report, inst, &opts),
                Command::Oracle => oracle(&mut report, inst, flags, &opts),
                Command::Sharpness => unreachable!(),
            })
        }
    };
    match outcome {
        Ok(()) => report.exit_code = EXIT_OK,
        Err(e) => {
            log::warn!("{e}");
            report.exit_code = e.exit_code();
            report.error = Some(e.to_json());
            if let CliError::Seshadri(SeshadriError::CounterexampleCandidate { certificate, .. }) = &e {
                // dump everything needed to reproduce the mismatch
                let names = inst.map(|i| i.names.clone()).unwrap_or_else(|| default_names(certificate.ideal.nvars()));
                report.certificate = Some(CertificateJson::new(certificate, &names));
            }
        }
    }
    report
}

fn geometry(e: GeometryError) -> CliError {
    CliError::Seshadri(SeshadriError::Geometry(e))
}

fn pointed(inst: &Instance) -> Result<PointedVariety, CliError> {
    normalize_point(&inst.variety_ideal(), &inst.point).map_err(geometry)
}

fn variety_json(x: &PointedVariety) -> Result<VarietyJson, CliError> {
    let h = x.ideal().hilbert_data().map_err(|e| geometry(e.into()))?;
    Ok(VarietyJson { hilbert: (&h).into() })
}

fn validate(report: &mut Report, inst: &Instance, opts: &Options) -> Result<(), CliError> {
    let y = normalize_point(&inst.ambient, &inst.point).map_err(geometry)?;
    let x = pointed(inst)?;
    let ambient_saturated = y.check_saturated().is_ok();
    let variety_saturated = x.check_saturated().is_ok();
    let multiplicity_at_p = if variety_saturated { Some(multiplicity_at(&x, opts.max_m).map_err(geometry)?) } else { None };
    report.validation = Some(ValidationJson {
        ambient_saturated,
        variety_saturated,
        multiplicity_at_p,
    });
    if !ambient_saturated || !variety_saturated {
        return Err(geometry(GeometryError::NotSaturated));
    }
    Ok(())
}

fn bound(report: &mut Report, inst: &Instance, opts: &Options) -> Result<(), CliError> {
    let x = pointed(inst)?;
    report.variety = Some(variety_json(&x)?);
    let r = lower_bound(&x, opts).map_err(CliError::Seshadri)?;
    report.seshadri = Some((&r).into());
    Ok(())
}

fn fano(report: &mut Report, inst: &Instance) -> Result<(), CliError> {
    let x = pointed(inst)?;
    report.variety = Some(variety_json(&x)?);
    let lines = line_scheme(&x, None).map_err(geometry)?;
    let names = inst.direction_names();
    report.line_scheme = Some(LineSchemeJson {
        generators: lines.ideal.grevlex_basis().iter().map(|g| g.fmt_with(&names)).collect(),
        variables: names,
        hilbert: (&lines.hilbert).into(),
    });
    Ok(())
}

fn dp(report: &mut Report, inst: &Instance) -> Result<(), CliError> {
    let x = pointed(inst)?;
    let y = normalize_point(&inst.ambient, &inst.point).map_err(geometry)?;
    let variety = variety_json(&x)?;
    report.dp = Some(DpJson {
        x: cut_out_degree(&x).map_err(geometry)?,
        y: cut_out_degree(&y).map_err(geometry)?,
        degree_x: variety.hilbert.degree,
    });
    report.variety = Some(variety);
    Ok(())
}

fn ci_input(inst: &Instance) -> Result<CompleteIntersectionInput, CliError> {
    CompleteIntersectionInput::new(&inst.ambient, &inst.point, inst.cuts.clone(), inst.file.ambient_homogeneous)
        .map_err(CliError::Seshadri)
}

fn classify(report: &mut Report, inst: &Instance, opts: &Options) -> Result<(), CliError> {
    let input = ci_input(inst)?;
    report.variety = Some(variety_json(input.variety())?);
    let r = classify_ci(&input, opts).map_err(CliError::Seshadri)?;
    report.seshadri = Some((&r).into());
    Ok(())
}

fn curve(report: &mut Report, inst: &Instance, opts: &Options) -> Result<(), CliError> {
    let input = ci_input(inst)?;
    let cert = seshadri_curve(&input, inst.component.as_ref(), opts).map_err(CliError::Seshadri)?;
    report.certificate = Some(CertificateJson::new(&cert, &inst.names));
    // cross-check against the classification when it applies
    match classify_ci(&input, opts) {
        Ok(r) => {
            report.seshadri = Some(SeshadriJson::from(&r));
            if r.line_scheme_dim < 0 && r.epsilon != cert.ratio {
                return Err(CliError::Inconsistency(format!(
                    "curve ratio {} but classification gives {}",
                    format_rational(&cert.ratio),
                    format_rational(&r.epsilon)
                )));
            }
        }
        Err(e) => log::info!("classification unavailable: {e}"),
    }
    Ok(())
}

fn sharpness(report: &mut Report, flags: &Flags, opts: &Options) -> Result<(), CliError> {
    let ex = sharpness_example(flags.n, flags.d, opts).map_err(CliError::Seshadri)?;
    let names = default_names(ex.variety.nvars());
    report.sharpness = Some(SharpnessJson {
        n: ex.n,
        d: ex.d,
        variables: names.clone(),
        hypersurface: ex.hypersurface.fmt_with(&names),
        line_scheme: (&ex.line_scheme.hilbert).into(),
        expected_ratio: format_rational(&ratio(ex.d as i64, ex.d as i64 - 1)),
    });
    report.certificate = Some(CertificateJson::new(&ex.certificate, &names));
    Ok(())
}

fn oracle(report: &mut Report, inst: &Instance, flags: &Flags, opts: &Options) -> Result<(), CliError> {
    let x = pointed(inst)?;
    let empty = line_scheme(&x, None).map_err(geometry)?.is_empty();
    let gens = inst.variety_ideal().generators().to_vec();
    let budget = flags.budget.unwrap_or(DEFAULT_BUDGET);
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for &q in &report.primes {
        let modular = match ModularInstance::new(q, &gens, &inst.point) {
            Ok(m) => m,
            Err(e) => {
                rows.push(PrimeJson {
                    q,
                    line_count: None,
                    directions: Vec::new(),
                    conic: None,
                    note: Some(e.to_string()),
                });
                continue;
            }
        };
        let size = direction_count(inst.nvars(), q);
        if size > MAX_DIRECTIONS {
            rows.push(PrimeJson {
                q,
                line_count: None,
                directions: Vec::new(),
                conic: None,
                note: Some(format!("{size} directions exceed the enumeration limit; use a smaller prime")),
            });
            continue;
        }
        let lines = count_lines_mod_q(&modular);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ q as u64);
        let conic = match find_conic_mod_q(&modular, budget, &mut rng) {
            ConicSearch::Found(w) => ConicJson { found: true, draws: w.draws, v: w.v, w: w.w },
            ConicSearch::NotFound { draws } => ConicJson { found: false, draws, v: Vec::new(), w: Vec::new() },
        };
        rows.push(PrimeJson {
            q,
            line_count: Some(lines.count),
            directions: lines.directions.clone(),
            conic: Some(conic),
            note: None,
        });
        counts.push(lines);
    }
    let verdict = agreement(empty, &counts);
    let mut notes = Vec::new();
    match &verdict {
        Agreement::Agree => {}
        Agreement::BadPrimes(bad) => notes.push(format!("warning: bad reduction suspected at {bad:?}")),
        Agreement::Unconfirmed => {
            notes.push("lines exist over Q-bar but none was seen mod the tested primes; they may be irrational".into())
        }
        Agreement::Disagree => {}
    }
    if rows.iter().any(|r| r.conic.as_ref().is_some_and(|c| !c.found)) {
        notes.push("conic search NOT_FOUND is inconclusive".into());
    }
    report.oracle = Some(OracleJson {
        line_scheme_empty: empty,
        primes: rows,
        agreement: verdict.as_str().into(),
        notes,
    });
    if verdict == Agreement::Disagree {
        return Err(CliError::Inconsistency(
            "the exact line scheme is empty but every tested prime sees lines through p".into(),
        ));
    }
    Ok(())
}
