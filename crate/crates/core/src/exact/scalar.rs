//! Runtime-tagged scalars, used wherever the field is only known from input
//! data (JSON files, CLI flags).
//!
//! Constants produced without context (`zero()`, `from_i64`) are rational and
//! are coerced into the other operand's field on first contact. Mixing two
//! incompatible fields is a programming error and panics; inputs are checked
//! for homogeneity when they are parsed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::field::{render_gaussian, render_rational, Field, FieldSpec, GaussianRational};
use super::poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(GaussianRational),
    Mod { value: u64, p: u64 },
}

fn reduce_mod(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64()?;
    let den = q.denom().mod_floor(&pb).to_u64()?;
    let inv = mod_inverse(den, p)?;
    Some(((num as u128 * inv as u128) % p as u128) as u64)
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let g = num_integer::Integer::extended_gcd(&(a as i128), &(p as i128));
    Some(g.x.rem_euclid(p as i128) as u64)
}

impl Scalar {
    pub fn rational(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::Gaussian(Complex::new(re, im))
    }

    pub fn modp(value: i64, p: u64) -> Self {
        Scalar::Mod {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn i() -> Self {
        Scalar::gaussian(BigRational::zero(), BigRational::one())
    }

    /// Moves the value into `spec`; `None` if it does not embed.
    pub fn coerce(&self, spec: FieldSpec) -> Option<Scalar> {
        match (self, spec) {
            (Scalar::Rational(q), FieldSpec::Rational) => Some(Scalar::Rational(q.clone())),
            (Scalar::Rational(q), FieldSpec::GaussianRational) => {
                Some(Scalar::Gaussian(Complex::new(q.clone(), BigRational::zero())))
            }
            (Scalar::Rational(q), FieldSpec::PrimeField(p)) => {
                reduce_mod(q, p).map(|value| Scalar::Mod { value, p })
            }
            (Scalar::Gaussian(z), FieldSpec::GaussianRational) => Some(Scalar::Gaussian(z.clone())),
            (Scalar::Gaussian(z), FieldSpec::Rational) if z.im.is_zero() => {
                Some(Scalar::Rational(z.re.clone()))
            }
            (Scalar::Mod { value, p }, FieldSpec::PrimeField(q)) if *p == q => {
                Some(Scalar::Mod { value: *value, p: *p })
            }
            _ => None,
        }
    }

    fn unify(&self, other: &Scalar) -> (Scalar, Scalar) {
        let spec = self
            .field_spec()
            .join(other.field_spec())
            .unwrap_or_else(|| {
                panic!("field mismatch: {} vs {}", self.field_spec().kind(), other.field_spec().kind())
            });
        let lift = |s: &Scalar| {
            s.coerce(spec)
                .unwrap_or_else(|| panic!("{s} does not embed into {}", spec.kind()))
        };
        (lift(self), lift(other))
    }

    fn binary(
        &self,
        other: &Scalar,
        fq: impl Fn(&BigRational, &BigRational) -> BigRational,
        fg: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
        fm: impl Fn(u128, u128, u128) -> u128,
    ) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Scalar::Rational(fq(a, b));
        }
        match self.unify(other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(fq(&a, &b)),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(fg(&a, &b)),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: fm(a as u128, b as u128, p as u128) as u64,
                p,
            },
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        let Some(spec) = self.field_spec().join(other.field_spec()) else {
            return false;
        };
        match (self.coerce(spec), other.coerce(spec)) {
            (Some(Scalar::Rational(a)), Some(Scalar::Rational(b))) => a == b,
            (Some(Scalar::Gaussian(a)), Some(Scalar::Gaussian(b))) => a == b,
            (Some(Scalar::Mod { value: a, .. }), Some(Scalar::Mod { value: b, .. })) => a == b,
            _ => false,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Gaussian(z) => Scalar::Gaussian(-z),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p,
            },
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian(z) => z.re.is_zero() && z.im.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(q) => Field::inv(q).map(Scalar::Rational),
            Scalar::Gaussian(z) => Field::inv(z).map(Scalar::Gaussian),
            Scalar::Mod { value, p } => mod_inverse(*value, *p).map(|value| Scalar::Mod { value, p: *p }),
        }
    }

    fn field_spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Gaussian(_) => FieldSpec::GaussianRational,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    fn from_i64(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n.clone()))
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(Scalar::Rational(q.clone()))
    }

    fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Gaussian(z) => z.im.is_zero().then(|| z.re.clone()),
            Scalar::Mod { .. } => None,
        }
    }

    fn roots(coeffs: &[Self]) -> Result<Vec<Self>> {
        let spec = coeffs
            .iter()
            .try_fold(FieldSpec::Rational, |acc, c| acc.join(c.field_spec()))
            .ok_or_else(|| Error::FieldMismatch("polynomial coefficients".into()))?;
        match spec {
            FieldSpec::Rational => {
                let c: Vec<BigRational> = coeffs.iter().map(|c| c.to_rational().unwrap()).collect();
                Ok(poly::rational_roots(&c)?.into_iter().map(Scalar::Rational).collect())
            }
            FieldSpec::GaussianRational => {
                let c: Vec<GaussianRational> = coeffs
                    .iter()
                    .map(|c| match c.coerce(spec) {
                        Some(Scalar::Gaussian(z)) => z,
                        _ => unreachable!(),
                    })
                    .collect();
                Ok(poly::gaussian_roots(&c)?.into_iter().map(Scalar::Gaussian).collect())
            }
            FieldSpec::PrimeField(p) => {
                let c: Vec<u64> = coeffs
                    .iter()
                    .map(|c| match c.coerce(spec) {
                        Some(Scalar::Mod { value, .. }) => Ok(value),
                        _ => Err(Error::FieldMismatch(format!("{c} in F_{p}"))),
                    })
                    .collect::<Result<_>>()?;
                Ok(poly::prime_field_roots(&c, p)?
                    .into_iter()
                    .map(|value| Scalar::Mod { value, p })
                    .collect())
            }
        }
    }

    fn render(&self) -> String {
        match self {
            Scalar::Rational(q) => render_rational(q),
            Scalar::Gaussian(z) => render_gaussian(z),
            Scalar::Mod { value, .. } => value.to_string(),
        }
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Scalar::i())
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a + b, |a, b| a.add_ref(b), |a, b, p| (a + b) % p)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a - b, |a, b| a.sub_ref(b), |a, b, p| (a + p - b) % p)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a * b, |a, b| a.mul_ref(b), |a, b, p| (a * b) % p)
    }
}

fn parse_int(text: &str, whole: &str) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedScalar(whole.to_string()));
    }
    BigInt::from_str(text.strip_prefix('+').unwrap_or(text))
        .map_err(|_| Error::MalformedScalar(whole.to_string()))
}

fn parse_rational(text: &str, whole: &str) -> Result<BigRational> {
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(text, whole)?)),
        Some((n, d)) => {
            if d.starts_with(['+', '-']) {
                return Err(Error::MalformedScalar(whole.to_string()));
            }
            let n = parse_int(n, whole)?;
            let d = parse_int(d, whole)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator(whole.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Splits `a/b+c/d*i` (and the shorter forms `c/d*i`, `i`, `-i`, `a+i`) into
/// real and imaginary text. Returns `None` when there is no imaginary term.
fn split_imaginary(text: &str) -> Option<(&str, &str)> {
    let body = text.strip_suffix('i')?;
    let body = body.strip_suffix('*').unwrap_or(body);
    let bytes = body.as_bytes();
    let mut cut = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
            cut = Some(if bytes[k - 1] == b'+' || bytes[k - 1] == b'-' { k - 1 } else { k });
            break;
        }
    }
    Some(match cut {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    })
}

fn parse_imaginary_coefficient(text: &str, whole: &str) -> Result<BigRational> {
    let (sign, rest) = match text.as_bytes() {
        [b'+', b'-', ..] | [b'-', b'+', ..] => (-1, &text[2..]),
        [b'-', b'-', ..] | [b'+', b'+', ..] => (1, &text[2..]),
        [b'-', ..] => (-1, &text[1..]),
        [b'+', ..] => (1, &text[1..]),
        _ => (1, text),
    };
    let magnitude = if rest.is_empty() {
        BigRational::one()
    } else {
        if rest.starts_with(['+', '-']) {
            return Err(Error::MalformedScalar(whole.to_string()));
        }
        parse_rational(rest, whole)?
    };
    Ok(if sign < 0 { -magnitude } else { magnitude })
}

/// Parses the canonical scalar grammar `int | int/int | a/b+c/d*i` into the
/// given field. Integers and fractions are reduced modulo `p` in prime fields.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() || t.chars().any(char::is_whitespace) {
        return Err(Error::MalformedScalar(text.to_string()));
    }
    if let Some((re, im)) = split_imaginary(t) {
        if field != FieldSpec::GaussianRational {
            return Err(Error::ImaginaryOutsideGaussian(text.to_string()));
        }
        let re = if re.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re, text)?
        };
        let im = parse_imaginary_coefficient(im, text)?;
        return Ok(Scalar::gaussian(re, im));
    }
    let q = parse_rational(t, text)?;
    match field {
        FieldSpec::Rational => Ok(Scalar::Rational(q)),
        FieldSpec::GaussianRational => Ok(Scalar::gaussian(q, BigRational::zero())),
        FieldSpec::PrimeField(p) => reduce_mod(&q, p)
            .map(|value| Scalar::Mod { value, p })
            .ok_or_else(|| Error::ZeroDenominator(format!("{text} (mod {p})"))),
    }
}

/// Parses into a statically typed field by way of [`Scalar`].
pub fn parse_as<F: Field>(text: &str) -> Result<F> {
    let s = parse_scalar(text, FieldSpec::GaussianRational)?;
    from_scalar(&s)
}

/// Converts a rational or Gaussian [`Scalar`] into a static field type.
pub fn from_scalar<F: Field>(s: &Scalar) -> Result<F> {
    match s {
        Scalar::Rational(q) => F::from_rational(q).ok_or_else(|| Error::FieldMismatch(s.to_string())),
        Scalar::Gaussian(z) => {
            let re = F::from_rational(&z.re).ok_or_else(|| Error::FieldMismatch(s.to_string()))?;
            if z.im.is_zero() {
                return Ok(re);
            }
            let i = F::imaginary_unit().ok_or_else(|| Error::FieldMismatch(format!("{s} needs i")))?;
            let im = F::from_rational(&z.im).ok_or_else(|| Error::FieldMismatch(s.to_string()))?;
            Ok(re + i * im)
        }
        Scalar::Mod { .. } => Err(Error::FieldMismatch(format!("{s} is a residue"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction() {
        assert_eq!(parse_scalar("3/4", FieldSpec::Rational).unwrap(), Scalar::rational(3, 4));
        assert_eq!(parse_scalar("-6/8", FieldSpec::Rational).unwrap().render(), "-3/4");
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = parse_scalar("0+1/1*i", FieldSpec::GaussianRational).unwrap();
        assert_eq!(i.clone() * i, Scalar::from_i64(-1));
    }

    #[test]
    fn reduces_modulo_p() {
        let s = parse_scalar("7", FieldSpec::PrimeField(5)).unwrap();
        assert_eq!(s.render(), "2");
        assert_eq!(parse_scalar("1/2", FieldSpec::PrimeField(5)).unwrap().render(), "3");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_scalar("1/0", FieldSpec::Rational), Err(Error::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("1+i", FieldSpec::Rational), Err(Error::ImaginaryOutsideGaussian(_))));
        assert!(matches!(parse_scalar("1/-2", FieldSpec::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("abc", FieldSpec::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("", FieldSpec::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("5", FieldSpec::PrimeField(5)).map(|s| s.is_zero()), Ok(true)));
        assert!(matches!(parse_scalar("1/5", FieldSpec::PrimeField(5)), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn gaussian_short_forms() {
        let g = FieldSpec::GaussianRational;
        assert_eq!(parse_scalar("i", g).unwrap().render(), "1*i");
        assert_eq!(parse_scalar("-i", g).unwrap().render(), "-1*i");
        assert_eq!(parse_scalar("1/2-1/3*i", g).unwrap().render(), "1/2-1/3*i");
        assert_eq!(parse_scalar("1/2+-1/3*i", g).unwrap().render(), "1/2-1/3*i");
        assert_eq!(parse_scalar("2+i", g).unwrap().render(), "2+1*i");
    }

    #[test]
    fn mixed_constants_coerce() {
        let a = Scalar::modp(3, 5);
        assert_eq!((a.clone() + Scalar::one()).render(), "4");
        assert_eq!((a * Scalar::rational(1, 2)).render(), "4");
        let z = Scalar::i() + Scalar::rational(1, 2);
        assert_eq!(z.render(), "1/2+1*i");
        assert_eq!(Scalar::from_i64(0), Scalar::modp(5, 5));
    }

    #[test]
    fn from_scalar_into_static_types() {
        let g: GaussianRational = parse_as("1/2-3*i").unwrap();
        assert_eq!(g.render(), "1/2-3*i");
        assert!(parse_as::<BigRational>("i").is_err());
    }
}
