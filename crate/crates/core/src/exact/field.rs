//! The scalar abstraction every algorithm in the crate is generic over.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly;
use crate::error::Result;

/// Which computable field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    GaussianRational,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(crate::Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Smallest field containing both, if any.
    pub fn join(self, other: FieldSpec) -> Option<FieldSpec> {
        use FieldSpec::*;
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Rational, b) | (b, Rational) => Some(b),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FieldSpec::Rational => "rational",
            FieldSpec::GaussianRational => "gaussian_rational",
            FieldSpec::PrimeField(_) => "prime_field",
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Arithmetic is by value through the operator traits; the `*_ref` methods
/// exist for hot loops where cloning both operands would dominate.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    fn inv(&self) -> Option<Self>;

    /// The field this particular value is known to live in.
    fn field_spec(&self) -> FieldSpec;

    fn from_i64(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    /// Embeds a rational; `None` when the denominator vanishes in the field.
    fn from_rational(q: &BigRational) -> Option<Self>;

    /// The value as a rational number, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    /// Distinct roots of `Σ coeffs[k]·t^k` that lie in the field.
    fn roots(coeffs: &[Self]) -> Result<Vec<Self>>;

    /// Canonical text form (see [`crate::exact::parse_scalar`]).
    fn render(&self) -> String;

    /// The imaginary unit, for fields that contain the Gaussian rationals.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self -= a * b`, skipping work when either factor vanishes.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub_ref(&a.mul_ref(b));
    }

    fn div_ref(&self, other: &Self) -> Option<Self> {
        Some(self.mul_ref(&other.inv()?))
    }

    fn characteristic(&self) -> u64 {
        self.field_spec().characteristic()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

/// Exact rational numbers.
pub type Rational = BigRational;

/// Exact Gaussian rationals `a + b·i`.
pub type GaussianRational = Complex<BigRational>;

pub(crate) fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn render_gaussian(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return render_rational(&z.re);
    }
    let im = render_rational(&z.im);
    if z.re.is_zero() {
        return format!("{im}*i");
    }
    if z.im.is_negative() {
        format!("{}-{}*i", render_rational(&z.re), render_rational(&-z.im.clone()))
    } else {
        format!("{}+{}*i", render_rational(&z.re), im)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn field_spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn roots(coeffs: &[Self]) -> Result<Vec<Self>> {
        poly::rational_roots(coeffs)
    }

    fn render(&self) -> String {
        render_rational(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(Complex::new(&self.re / &norm, -(&self.im / &norm)))
    }

    fn field_spec(&self) -> FieldSpec {
        FieldSpec::GaussianRational
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_i64(n), BigRational::zero())
    }

    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(BigRational::from_integer(n.clone()), BigRational::zero())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(Complex::new(q.clone(), BigRational::zero()))
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn roots(coeffs: &[Self]) -> Result<Vec<Self>> {
        poly::gaussian_roots(coeffs)
    }

    fn render(&self) -> String {
        render_gaussian(self)
    }

    fn imaginary_unit() -> Option<Self> {
        Some(imaginary_unit())
    }

    fn add_ref(&self, other: &Self) -> Self {
        Complex::new(&self.re + &other.re, &self.im + &other.im)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        Complex::new(&self.re - &other.re, &self.im - &other.im)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.im.is_zero() && other.im.is_zero() {
            return Complex::new(&self.re * &other.re, BigRational::zero());
        }
        Complex::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
}

/// `i` in a field that contains it.
pub fn imaginary_unit() -> GaussianRational {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// Convenience constructor for rationals from machine integers.
pub fn q(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Generic `n/d` in any field of characteristic not dividing `d`.
pub fn frac<F: Field>(n: i64, d: i64) -> F {
    F::from_rational(&q(n, d)).expect("denominator invertible in field")
}

