use crate::groebner::{HilbertData, QIdeal};
use crate::poly::{rat, Monomial, MonomialOrder, QPoly};

use super::pointed::PointedVariety;
use super::GeometryError;

/// `f = Σ_{i=1}^{d} x0^{d-i} f^i` with each `f^i` free of `x0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceDecomposition {
    source: QPoly,
    degree: u32,
    /// `slices[i - 1] = f^i`, in the full ring (exponent of `x0` always zero).
    slices: Vec<QPoly>,
}

impl SliceDecomposition {
    pub fn source(&self) -> &QPoly {
        &self.source
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `f^i` for `1 <= i <= d`.
    pub fn slice(&self, i: usize) -> &QPoly {
        &self.slices[i - 1]
    }

    pub fn slices(&self) -> &[QPoly] {
        &self.slices
    }

    /// `f^i` with `x0` removed, as a form on the `P^{N-1}` of directions.
    pub fn direction_slice(&self, i: usize) -> QPoly {
        self.slices[i - 1].dehomogenize(0)
    }

    /// `Σ x0^{d-i} f^i`, which must reproduce the source.
    pub fn reassemble(&self) -> QPoly {
        let n = self.source.nvars();
        let mut acc = QPoly::zero(n, self.source.order());
        for (k, s) in self.slices.iter().enumerate() {
            let i = k as u32 + 1;
            let mut shift = vec![0u16; n];
            shift[0] = (self.degree - i) as u16;
            acc = acc.add(&s.mul_term(&Monomial::from_exponents(&shift), &rat(1)));
        }
        acc
    }

    /// `x0^{i-1} f^1 + … + x0 f^{i-1} + f^i`, the truncation used for auxiliary divisors.
    pub fn partial_sum(&self, i: usize) -> QPoly {
        let n = self.source.nvars();
        let mut acc = QPoly::zero(n, self.source.order());
        for k in 1..=i {
            let mut shift = vec![0u16; n];
            shift[0] = (i - k) as u16;
            acc = acc.add(&self.slice(k).mul_term(&Monomial::from_exponents(&shift), &rat(1)));
        }
        acc
    }
}

/// Splits a form vanishing at `[1:0:…:0]` by powers of `x0`.
pub fn slice_decomposition(f: &QPoly) -> Result<SliceDecomposition, GeometryError> {
    if !f.is_homogeneous() {
        return Err(GeometryError::NotHomogeneous);
    }
    let Some(d) = f.total_degree() else {
        return Err(GeometryError::ZeroPolynomial);
    };
    let n = f.nvars();
    let f = f.with_order(MonomialOrder::GrevLex);
    let mut buckets: Vec<Vec<(Monomial, _)>> = vec![Vec::new(); d as usize];
    for (m, c) in f.terms() {
        let a = m.exponent(0) as u32;
        if a == d {
            return Err(GeometryError::PointNotOnHypersurface);
        }
        let i = d - a;
        buckets[(i - 1) as usize].push((m.with_exponent(0, 0), c.clone()));
    }
    let slices = buckets
        .into_iter()
        .map(|terms| QPoly::from_terms(n, MonomialOrder::GrevLex, terms))
        .collect();
    Ok(SliceDecomposition {
        source: f,
        degree: d,
        slices,
    })
}

/// Ideal of `F_p(X)` in the directions `x1..xN`, with its Hilbert data.
#[derive(Clone, Debug)]
pub struct LineScheme {
    pub ideal: QIdeal,
    pub hilbert: HilbertData,
}

impl LineScheme {
    pub fn is_empty(&self) -> bool {
        self.hilbert.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.hilbert.dim
    }
}

/// `F_p(X)`, cut out by every slice of every local equation.
///
/// `local_gens` are in the original coordinates; `None` uses the generators of `I_X`.
pub fn line_scheme(x: &PointedVariety, local_gens: Option<&[QPoly]>) -> Result<LineScheme, GeometryError> {
    let normalized: Vec<QPoly> = match local_gens {
        None => x.normalized_ideal().generators().to_vec(),
        Some(gens) => gens
            .iter()
            .map(|g| x.normalize_poly(g))
            .collect::<Result<_, _>>()?,
    };
    line_scheme_of_normalized(&normalized, x.nvars())
}

/// Line scheme for forms already written with the point at `[1:0:…:0]`.
pub fn line_scheme_of_normalized(gens: &[QPoly], nvars: usize) -> Result<LineScheme, GeometryError> {
    let mut slices = Vec::new();
    for g in gens {
        let dec = slice_decomposition(g)?;
        for i in 1..=dec.degree() as usize {
            let s = dec.direction_slice(i);
            if !s.is_zero() {
                slices.push(s);
            }
        }
    }
    let ideal = QIdeal::new(nvars - 1, slices);
    let hilbert = ideal.hilbert_data()?;
    Ok(LineScheme { ideal, hilbert })
}

/// The cone with vertex `[1:0:…:0]` over a subscheme of the direction space.
pub fn cone_ideal(z: &QIdeal) -> QIdeal {
    let gens = z
        .generators()
        .iter()
        .map(|g| g.insert_vars(0, 1, MonomialOrder::GrevLex))
        .collect();
    QIdeal::new(z.nvars() + 1, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::pointed::normalize_point;
    use crate::poly::{default_names, parse_polynomial, Rational};

    fn p(n: usize, s: &str) -> QPoly {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    fn origin(n: usize) -> Vec<Rational> {
        (0..n).map(|i| rat((i == 0) as i64)).collect()
    }

    #[test]
    fn slice_examples() {
        let d = slice_decomposition(&p(3, "x0*x2 - x1^2")).unwrap();
        assert_eq!(d.slice(1), &p(3, "x2"));
        assert_eq!(d.slice(2), &p(3, "-x1^2"));
        let d = slice_decomposition(&p(4, "x0*x3 - x1*x2")).unwrap();
        assert_eq!((d.slice(1), d.slice(2)), (&p(4, "x3"), &p(4, "-x1*x2")));
        let f = p(4, "x0^2*x1 + x0*x2^2 + x3^3");
        let d = slice_decomposition(&f).unwrap();
        assert_eq!(d.slices(), &[p(4, "x1"), p(4, "x2^2"), p(4, "x3^3")]);
        assert_eq!(d.reassemble(), f);
        assert_eq!(d.partial_sum(2), p(4, "x0*x1 + x2^2"));
    }

    #[test]
    fn slice_errors() {
        assert_eq!(slice_decomposition(&p(2, "x0^2 + x1^2")), Err(GeometryError::PointNotOnHypersurface));
        assert_eq!(slice_decomposition(&p(2, "x0 + x1^2")), Err(GeometryError::NotHomogeneous));
    }

    #[test]
    fn quadric_surface_has_two_lines() {
        let i = QIdeal::new(4, vec![p(4, "x0*x3 - x1*x2")]);
        let x = normalize_point(&i, &origin(4)).unwrap();
        let f = line_scheme(&x, None).unwrap();
        assert_eq!((f.dim(), f.hilbert.degree), (0, 2));
    }

    #[test]
    fn plane_has_all_directions() {
        let x = normalize_point(&QIdeal::zero(3), &origin(3)).unwrap();
        let f = line_scheme(&x, None).unwrap();
        assert_eq!(f.dim(), 1);
    }

    #[test]
    fn cones_keep_degree() {
        let z = QIdeal::new(3, vec![p(3, "x0*x2 - x1^2")]);
        let cone = cone_ideal(&z);
        assert_eq!(cone.generators()[0], p(4, "x1*x3 - x2^2"));
        assert_eq!(cone.hilbert_data().unwrap().degree, 2);
        let line = cone_ideal(&QIdeal::new(3, vec![p(3, "x0"), p(3, "x1 - x2")]));
        let h = line.hilbert_data().unwrap();
        assert_eq!((h.dim, h.degree), (1, 1));
    }
}
