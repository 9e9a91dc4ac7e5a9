use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{
    cone_ideal, line_scheme, multiplicity_at, normalize_point, slice_decomposition, GeometryError,
    LineScheme, PointedVariety,
};
use crate::groebner::QIdeal;
use crate::poly::{default_names, rat, ratio, Monomial, QPoly, Rational};

use super::ci::CompleteIntersectionInput;
use super::random::{random_form, random_form_through};
use super::{Options, SeshadriError};

/// How a certificate curve was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub construction: String,
    /// Generators of the cone base `Z` (direction coordinates), rendered as text.
    pub component: Vec<String>,
    /// Cutting equations in normalized coordinates, rendered as text.
    pub cuts: Vec<String>,
    pub seed: u64,
    pub attempt: u32,
    pub randomized: bool,
    pub irreducibility_certified: bool,
    pub assumptions: Vec<String>,
}

/// A curve through `p` with its degree and multiplicity, both recomputed from the ideal.
#[derive(Clone, Debug)]
pub struct CurveCertificate {
    /// Ideal of the curve in the original coordinates.
    pub ideal: QIdeal,
    /// Ideal of the curve with `p = [1:0:…:0]`.
    pub normalized_ideal: QIdeal,
    pub degree: u64,
    pub multiplicity: u32,
    pub ratio: Rational,
    pub trace: ConstructionTrace,
}

impl CurveCertificate {
    /// Recomputes `(deg C, mult_p C)` from the normalized ideal.
    pub fn recompute(&self, max_m: u32) -> Result<(u64, u32), GeometryError> {
        measure(&self.normalized_ideal, max_m).map(|(_, deg, mult)| (deg, mult))
    }
}

fn base_point(n: usize) -> Vec<Rational> {
    (0..n).map(|i| rat((i == 0) as i64)).collect()
}

/// `(dim, deg, mult at [1:0:…:0])` of a normalized ideal; multiplicity only for curves.
fn measure(normalized: &QIdeal, max_m: u32) -> Result<(i64, u64, u32), GeometryError> {
    let h = normalized.hilbert_data()?;
    if h.dim != 1 {
        return Ok((h.dim, h.degree, 0));
    }
    let pointed = normalize_point(normalized, &base_point(normalized.nvars()))?;
    let mult = multiplicity_at(&pointed, max_m)?;
    Ok((1, h.degree, mult))
}

fn render(polys: &[QPoly]) -> Vec<String> {
    let names = default_names(polys.first().map(|p| p.nvars()).unwrap_or(0));
    polys.iter().map(|p| p.fmt_with(&names)).collect()
}

fn x0_times(f: &QPoly) -> QPoly {
    let mut e = vec![0u16; f.nvars()];
    e[0] = 1;
    f.mul_term(&Monomial::from_exponents(&e), &rat(1))
}

enum Outcome {
    Certificate(Box<CurveCertificate>),
    Degenerate(String),
}

/// Measures a candidate curve and checks its ratio against `expected`.
fn certify(
    pointed: &PointedVariety,
    normalized: QIdeal,
    expected: &Rational,
    trace: ConstructionTrace,
    max_m: u32,
) -> Result<Outcome, SeshadriError> {
    let (dim, degree, mult) = measure(&normalized, max_m)?;
    if dim != 1 {
        return Ok(Outcome::Degenerate(format!("constructed scheme has dimension {dim}")));
    }
    let original = normalized
        .generators()
        .iter()
        .map(|g| pointed.denormalize_poly(g))
        .collect::<Result<Vec<_>, _>>()?;
    let cert = CurveCertificate {
        ideal: QIdeal::new(normalized.nvars(), original),
        normalized_ideal: normalized,
        degree,
        multiplicity: mult,
        ratio: ratio(degree as i64, mult as i64),
        trace,
    };
    if &cert.ratio != expected {
        return Err(SeshadriError::CounterexampleCandidate {
            expected: expected.clone(),
            certificate: Box::new(cert),
        });
    }
    Ok(Outcome::Certificate(Box::new(cert)))
}

/// Cuts the cone over `Z` by the slices of the `f_j` to get a curve with
/// `deg C / mult_p C = d_r / (d_r - 1)`.
///
/// Attempt 0 uses the given equations; later attempts add random forms through `p`
/// (recorded in the trace) when the first choice is degenerate.
pub fn seshadri_curve(
    input: &CompleteIntersectionInput,
    z: Option<&QIdeal>,
    opts: &Options,
) -> Result<CurveCertificate, SeshadriError> {
    let dr = input.dr();
    if dr < 2 {
        return Err(SeshadriError::HypothesisFailed {
            condition: "d_r >= 2".into(),
            detail: format!("d_r = {dr}"),
        });
    }
    let y = input.ambient();
    let n = y.nvars();
    let fy = line_scheme(y, None)?;
    let sum = input.degree_sum() as i64;
    if sum != fy.dim() + 1 {
        return Err(SeshadriError::HypothesisFailed {
            condition: "sum d_j = dim F_p(Y) + 1".into(),
            detail: format!("sum d_j = {sum}, dim F_p(Y) = {}", fy.dim()),
        });
    }
    let mut assumptions = Vec::new();
    let z = match z {
        Some(z) => {
            check_component(z, &fy)?;
            assumptions.push("Z is irreducible (user-designated component)".to_string());
            z.clone()
        }
        None => {
            assumptions.push("Z = F_p(Y), assumed irreducible".to_string());
            fy.ideal.clone()
        }
    };
    assumptions.push("C is reduced and irreducible (not certified)".to_string());
    let cone = cone_ideal(&z);
    let expected = ratio(dr as i64, dr as i64 - 1);
    let normalized_cuts = input
        .cuts()
        .iter()
        .map(|f| y.normalize_poly(f))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let origin = base_point(n);
    for attempt in 0..=opts.retries {
        let randomized = attempt > 0;
        let cuts: Vec<QPoly> = if randomized {
            normalized_cuts
                .iter()
                .map(|f| f.add(&random_form_through(&mut rng, &origin, f.total_degree().unwrap())))
                .collect()
        } else {
            normalized_cuts.clone()
        };
        let r = cuts.len();
        let mut equations = Vec::new();
        for (j, f) in cuts.iter().enumerate() {
            let dec = slice_decomposition(f)?;
            let d = dec.degree() as usize;
            if j + 1 < r {
                equations.extend(dec.slices().iter().cloned());
            } else {
                equations.extend(dec.slices()[..d - 2].iter().cloned());
                equations.push(x0_times(dec.slice(d - 1)).add(dec.slice(d)));
            }
        }
        let trace = ConstructionTrace {
            construction: "cone".into(),
            component: render(z.generators()),
            cuts: render(&equations),
            seed: opts.seed,
            attempt,
            randomized,
            irreducibility_certified: false,
            assumptions: assumptions.clone(),
        };
        let curve = cone.with_generators(&equations);
        match certify(y, curve, &expected, trace, opts.max_m)? {
            Outcome::Certificate(c) => return Ok(*c),
            Outcome::Degenerate(why) => log::info!("attempt {attempt} degenerate: {why}"),
        }
    }
    Err(SeshadriError::Degenerate { attempts: opts.retries + 1 })
}

/// `Z` must lie in `F_p(Y)` and have the same dimension.
fn check_component(z: &QIdeal, fy: &LineScheme) -> Result<(), SeshadriError> {
    if z.nvars() != fy.ideal.nvars() {
        return Err(SeshadriError::InvalidInput(format!(
            "component lives in {} direction variables, expected {}",
            z.nvars(),
            fy.ideal.nvars()
        )));
    }
    if !z.contains_ideal(&fy.ideal) {
        return Err(SeshadriError::HypothesisFailed {
            condition: "Z ⊂ F_p(Y)".into(),
            detail: "the designated component is not contained in F_p(Y)".into(),
        });
    }
    let hz = z.hilbert_data().map_err(GeometryError::from)?;
    if hz.dim != fy.dim() {
        return Err(SeshadriError::HypothesisFailed {
            condition: "dim Z = dim F_p(Y)".into(),
            detail: format!("dim Z = {}, dim F_p(Y) = {}", hz.dim, fy.dim()),
        });
    }
    Ok(())
}

/// A hypersurface with no line through `p` whose curve `C` attains `d/(d-1)`.
#[derive(Clone, Debug)]
pub struct SharpnessExample {
    pub n: u32,
    pub d: u32,
    pub hypersurface: QPoly,
    pub variety: PointedVariety,
    pub line_scheme: LineScheme,
    pub certificate: CurveCertificate,
}

/// `f = x0^{d-1} f^1 + … + x0^{d-n+1} f^{n-1} + x0 f^{d-1} + f^d` in `P^{n+1}` with random
/// `f^i`, and `C = V(f^1, …, f^{n-1}, x0 f^{d-1} + f^d)`.
pub fn sharpness_example(n: u32, d: u32, opts: &Options) -> Result<SharpnessExample, SeshadriError> {
    if n < 1 || d < n + 1 {
        return Err(SeshadriError::InvalidInput(format!(
            "need n >= 1 and d >= n + 1, got n = {n}, d = {d}"
        )));
    }
    let nv = n as usize + 2;
    let origin = base_point(nv);
    let expected = ratio(d as i64, d as i64 - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for attempt in 0..=opts.retries {
        let low: Vec<QPoly> = (1..n).map(|i| random_form(&mut rng, nv, 1, i)).collect();
        let fd1 = random_form(&mut rng, nv, 1, d - 1);
        let fd = random_form(&mut rng, nv, 1, d);
        let mut f = x0_times(&fd1).add(&fd);
        for (k, s) in low.iter().enumerate() {
            let i = k as u32 + 1;
            let mut e = vec![0u16; nv];
            e[0] = (d - i) as u16;
            f = f.add(&s.mul_term(&Monomial::from_exponents(&e), &rat(1)));
        }
        let variety = normalize_point(&QIdeal::new(nv, vec![f.clone()]), &origin)?;
        let lines = line_scheme(&variety, None)?;
        if !lines.is_empty() {
            log::info!("attempt {attempt}: line through p, redrawing");
            continue;
        }
        let mut equations = low.clone();
        equations.push(x0_times(&fd1).add(&fd));
        let trace = ConstructionTrace {
            construction: "sharpness".into(),
            component: Vec::new(),
            cuts: render(&equations),
            seed: opts.seed,
            attempt,
            randomized: true,
            irreducibility_certified: false,
            assumptions: vec!["C is reduced and irreducible (not certified)".into()],
        };
        let curve = QIdeal::new(nv, equations);
        match certify(&variety, curve, &expected, trace, opts.max_m)? {
            Outcome::Certificate(c) => {
                return Ok(SharpnessExample {
                    n,
                    d,
                    hypersurface: f,
                    variety,
                    line_scheme: lines,
                    certificate: *c,
                })
            }
            Outcome::Degenerate(why) => log::info!("attempt {attempt} degenerate: {why}"),
        }
    }
    Err(SeshadriError::Degenerate { attempts: opts.retries + 1 })
}
