//! Exact scalar fields: rationals, Gaussian rationals and prime fields.
//!
//! Every scalar keeps a canonical representation so that derived `Eq` is
//! exact structural equality.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::ParseError;

/// Arithmetic over an exact field with a conjugation.
///
/// `Field` describes the runtime parameters of the field (the modulus for
/// prime fields, nothing for the characteristic-zero fields).
pub trait Scalar: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    type Field: Clone + Eq + Debug + Send + Sync;

    fn zero(field: &Self::Field) -> Self;
    fn one(field: &Self::Field) -> Self;
    fn from_i64(field: &Self::Field, v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Field involution: complex conjugation for Gaussian rationals, identity otherwise.
    fn conj(&self) -> Self;

    /// Ring tag used in the matrix text format (`Q`, `QI`, `GF <p>`).
    fn ring_tag(field: &Self::Field) -> String;
    fn parse_entry(field: &Self::Field, s: &str) -> Result<Self, String>;

    /// Small random element used by the projection generators.
    fn sample_small<G: Rng + ?Sized>(field: &Self::Field, rng: &mut G) -> Self;

    /// All field elements, when the field is finite.
    fn enumerate(field: &Self::Field) -> Option<Vec<Self>>;
}

/// Rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    fn parse_text(s: &str) -> Result<Self, String> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = parse_int(num)?;
        let denom = match den {
            Some(d) => {
                if d.starts_with('-') {
                    return Err(format!("denominator must be unsigned in `{s}`"));
                }
                parse_int(d)?
            }
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed integer `{s}`"));
    }
    s.parse::<BigInt>().map_err(|e| format!("malformed integer `{s}`: {e}"))
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Scalar for Rational {
    type Field = ();

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(_: &(), v: i64) -> Self {
        Rational::int(v)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn negated(&self) -> Self {
        Rational(-&self.0)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn ring_tag(_: &()) -> String {
        "Q".to_string()
    }
    fn parse_entry(_: &(), s: &str) -> Result<Self, String> {
        Rational::parse_text(s)
    }
    fn sample_small<G: Rng + ?Sized>(_: &(), rng: &mut G) -> Self {
        Rational::int(rng.gen_range(-3..=3))
    }
    fn enumerate(_: &()) -> Option<Vec<Self>> {
        None
    }
}

/// Element `re + im·i` of the Gaussian rationals ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::int(0) }
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::int(0), im: Rational::int(1) }
    }
}

impl Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.re, self.im)
    }
}

impl Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Scalar for GaussianRational {
    type Field = ();

    fn zero(_: &()) -> Self {
        GaussianRational::real(Rational::int(0))
    }
    fn one(_: &()) -> Self {
        GaussianRational::real(Rational::int(1))
    }
    fn from_i64(_: &(), v: i64) -> Self {
        GaussianRational::real(Rational::int(v))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.plus(&rhs.re), self.im.plus(&rhs.im))
    }
    fn minus(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.minus(&rhs.re), self.im.minus(&rhs.im))
    }
    fn times(&self, rhs: &Self) -> Self {
        let re = self.re.times(&rhs.re).minus(&self.im.times(&rhs.im));
        let im = self.re.times(&rhs.im).plus(&self.im.times(&rhs.re));
        GaussianRational::new(re, im)
    }
    fn negated(&self) -> Self {
        GaussianRational::new(self.re.negated(), self.im.negated())
    }
    fn inverse(&self) -> Option<Self> {
        let norm = self.re.times(&self.re).plus(&self.im.times(&self.im));
        let inv_norm = norm.inverse()?;
        Some(GaussianRational::new(self.re.times(&inv_norm), self.im.negated().times(&inv_norm)))
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), self.im.negated())
    }
    fn ring_tag(_: &()) -> String {
        "QI".to_string()
    }
    fn parse_entry(_: &(), s: &str) -> Result<Self, String> {
        let (re, im) =
            s.split_once(',').ok_or_else(|| format!("Gaussian rational entry `{s}` must have the form re,im"))?;
        Ok(GaussianRational::new(Rational::parse_text(re)?, Rational::parse_text(im)?))
    }
    fn sample_small<G: Rng + ?Sized>(_: &(), rng: &mut G) -> Self {
        GaussianRational::new(Rational::int(rng.gen_range(-3..=3)), Rational::int(rng.gen_range(-3..=3)))
    }
    fn enumerate(_: &()) -> Option<Vec<Self>> {
        None
    }
}

/// Modulus of a prime field. Construction checks primality by trial division.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self, ParseError> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(ParseError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus(2)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue modulo a prime, always in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn new(modulus: Modulus, v: u64) -> Self {
        Fp { value: v % modulus.0, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn same_field(self, rhs: Fp) {
        debug_assert_eq!(self.modulus, rhs.modulus, "mixed prime fields");
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus.0)
    }
}

impl Scalar for Fp {
    type Field = Modulus;

    fn zero(m: &Modulus) -> Self {
        Fp::new(*m, 0)
    }
    fn one(m: &Modulus) -> Self {
        Fp::new(*m, 1)
    }
    fn from_i64(m: &Modulus, v: i64) -> Self {
        let p = m.0 as i64;
        Fp::new(*m, v.rem_euclid(p) as u64)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.same_field(*rhs);
        Fp::new(self.modulus, self.value + rhs.value)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.same_field(*rhs);
        Fp::new(self.modulus, self.value + self.modulus.0 - rhs.value)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.same_field(*rhs);
        let prod = (self.value as u128 * rhs.value as u128) % self.modulus.0 as u128;
        Fp::new(self.modulus, prod as u64)
    }
    fn negated(&self) -> Self {
        Fp::new(self.modulus, self.modulus.0 - self.value)
    }
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let ext = (self.value as i128).extended_gcd(&(self.modulus.0 as i128));
        let p = self.modulus.0 as i128;
        Some(Fp::new(self.modulus, ext.x.rem_euclid(p) as u64))
    }
    fn conj(&self) -> Self {
        *self
    }
    fn ring_tag(m: &Modulus) -> String {
        format!("GF {}", m.0)
    }
    fn parse_entry(m: &Modulus, s: &str) -> Result<Self, String> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed GF({}) entry `{s}`", m.0));
        }
        let v: u64 = s.parse().map_err(|_| format!("malformed GF({}) entry `{s}`", m.0))?;
        if v >= m.0 {
            return Err(format!("GF({}) entry `{s}` out of range", m.0));
        }
        Ok(Fp::new(*m, v))
    }
    fn sample_small<G: Rng + ?Sized>(m: &Modulus, rng: &mut G) -> Self {
        Fp::new(*m, rng.gen_range(0..m.0))
    }
    fn enumerate(m: &Modulus) -> Option<Vec<Self>> {
        Some((0..m.0).map(|v| Fp::new(*m, v)).collect())
    }
}
