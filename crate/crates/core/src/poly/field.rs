//! Coefficient fields: exact rationals and small prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Minimal field interface needed by the polynomial and Gröbner layers.
///
/// Elements of a prime field carry their modulus, so constants are produced
/// relative to an existing element (`zero_like`, `one_like`).
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Field for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-6"` or `"3/4"` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a projective point with rational coordinates to a primitive integer vector.
pub fn primitive_integer_vector(point: &[Rational]) -> Vec<BigInt> {
    let lcm = point
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = point
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if gcd.is_zero() {
        return ints;
    }
    // keep the first nonzero coordinate positive for a canonical representative
    let sign = ints
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| if c.is_negative() { -BigInt::one() } else { BigInt::one() })
        .unwrap_or_else(BigInt::one);
    ints.into_iter().map(|c| &c / &gcd * &sign).collect()
}

/// Element of the prime field `F_q`, stored with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        debug_assert!(modulus >= 2);
        let m = modulus as i64;
        Self {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Reduces a rational mod `modulus`; `None` when the denominator is not invertible.
    pub fn from_rational(r: &Rational, modulus: u32) -> Option<Self> {
        let q = BigInt::from(modulus);
        let num = r.numer().mod_floor(&q);
        let den = r.denom().mod_floor(&q);
        if den.is_zero() {
            return None;
        }
        let num = Fp::new(bigint_to_i64(&num), modulus);
        let den = Fp::new(bigint_to_i64(&den), modulus);
        Some(num.times(&den.inverse()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

fn bigint_to_i64(n: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    n.to_i64().expect("residue fits in i64")
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn zero_like(&self) -> Self {
        Fp { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::new(n, self.modulus)
    }
    fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u64 + other.value as u64) % self.modulus as u64;
        Fp { value: s as u32, modulus: self.modulus }
    }
    fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u64 + self.modulus as u64 - other.value as u64) % self.modulus as u64;
        Fp { value: s as u32, modulus: self.modulus }
    }
    fn times(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u64 * other.value as u64) % self.modulus as u64;
        Fp { value: s as u32, modulus: self.modulus }
    }
    fn negated(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut a, mut b) = (self.value as i64, self.modulus as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        debug_assert_eq!(a, 1, "modulus must be prime");
        Some(Fp::new(x0, self.modulus))
    }
}

/// Trial-division primality test for the small moduli used by the oracle.
pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-6"), Some(rat(-6)));
        assert_eq!(parse_rational("4/-8"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-2)), "-2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp::new(3, 7);
        let b = Fp::new(5, 7);
        assert_eq!(a.plus(&b).value(), 1);
        assert_eq!(a.minus(&b).value(), 5);
        assert_eq!(a.times(&b).value(), 1);
        assert_eq!(a.inverse().unwrap().value(), 5);
        assert_eq!(Fp::new(-1, 7).value(), 6);
        assert!(Fp::new(0, 7).inverse().is_none());
        assert_eq!(Fp::new(3, 7).pow(6).value(), 1);
    }

    #[test]
    fn rational_reduction_mod_q() {
        assert_eq!(Fp::from_rational(&ratio(1, 2), 7).unwrap().value(), 4);
        assert!(Fp::from_rational(&ratio(1, 7), 7).is_none());
        assert_eq!(Fp::from_rational(&rat(-6), 7).unwrap().value(), 1);
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive_integer_vector(&[ratio(1, 2), ratio(-1, 3), rat(0)]);
        assert_eq!(v, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
        let w = primitive_integer_vector(&[rat(-4), rat(6)]);
        assert_eq!(w, vec![BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn primes() {
        assert!(is_prime(101));
        assert!(!is_prime(91));
        assert!(!is_prime(1));
    }
}
