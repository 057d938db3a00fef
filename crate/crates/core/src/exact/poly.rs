//! Root search for univariate polynomials over the supported fields.
//!
//! Splitting a semisimple algebra needs eigenvalues of its elements, and the
//! fixtures are split by construction, so a rational (resp. Gaussian-integer)
//! root theorem search is complete for them. Constant terms whose size would
//! make divisor enumeration impractical are reported as a resource cap.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const DIVISOR_CAP: u128 = 1 << 50;

fn trim<T: Zero + Clone>(coeffs: &[T]) -> Vec<T> {
    let mut v = coeffs.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn positive_divisors(n: u128) -> Result<Vec<u128>> {
    if n > DIVISOR_CAP {
        return Err(Error::ResourceCap(format!("divisor enumeration of {n}")));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn to_u128(n: &BigInt) -> Result<u128> {
    n.abs()
        .to_u128()
        .filter(|v| *v <= DIVISOR_CAP)
        .ok_or_else(|| Error::ResourceCap(format!("divisor enumeration of {n}")))
}

fn eval<T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>>(
    coeffs: &[T],
    x: &T,
) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Rational roots via the rational root theorem.
pub fn rational_roots(coeffs: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut c = trim(coeffs);
    if c.is_empty() {
        return Err(Error::Invalid("roots of the zero polynomial".into()));
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(BigRational::zero());
        while c[0].is_zero() {
            c.remove(0);
        }
    }
    if c.len() == 1 {
        return Ok(roots);
    }
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = c.iter().map(|q| (q * &lcm).to_integer()).collect();
    let nums = positive_divisors(to_u128(&ints[0])?)?;
    let dens = positive_divisors(to_u128(ints.last().unwrap())?)?;
    for p in &nums {
        for d in &dens {
            for sign in [1i32, -1] {
                let cand = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*d));
                if !roots.contains(&cand) && eval(&c, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

type GaussInt = (i128, i128);

fn gauss_divides(d: GaussInt, z: GaussInt) -> bool {
    // z / d = z * conj(d) / N(d)
    let n = d.0 * d.0 + d.1 * d.1;
    if n == 0 {
        return false;
    }
    let re = z.0 * d.0 + z.1 * d.1;
    let im = z.1 * d.0 - z.0 * d.1;
    re % n == 0 && im % n == 0
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

fn gaussian_divisors(z: GaussInt) -> Result<Vec<GaussInt>> {
    let norm = (z.0 * z.0 + z.1 * z.1) as u128;
    let mut out = Vec::new();
    for m in positive_divisors(norm)? {
        let bound = isqrt(m) as i128;
        for a in -bound..=bound {
            let rest = m as i128 - a * a;
            if rest < 0 {
                continue;
            }
            let b = isqrt(rest as u128) as i128;
            if b * b != rest {
                continue;
            }
            for bb in if b == 0 { vec![0] } else { vec![b, -b] } {
                if gauss_divides((a, bb), z) {
                    out.push((a, bb));
                }
            }
        }
    }
    Ok(out)
}

fn gauss_to_i128(z: &Complex<BigInt>) -> Result<GaussInt> {
    let cap = || Error::ResourceCap(format!("Gaussian divisor enumeration of {z}"));
    let re = z.re.to_i128().ok_or_else(cap)?;
    let im = z.im.to_i128().ok_or_else(cap)?;
    if (re.unsigned_abs()).max(im.unsigned_abs()) > (1u128 << 25) {
        return Err(cap());
    }
    Ok((re, im))
}

/// Gaussian-rational roots via the root theorem over `ℤ[i]`.
pub fn gaussian_roots(coeffs: &[Complex<BigRational>]) -> Result<Vec<Complex<BigRational>>> {
    let mut c = trim(coeffs);
    if c.is_empty() {
        return Err(Error::Invalid("roots of the zero polynomial".into()));
    }
    let zero = Complex::new(BigRational::zero(), BigRational::zero());
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(zero.clone());
        while c[0].is_zero() {
            c.remove(0);
        }
    }
    if c.len() == 1 {
        return Ok(roots);
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, z| {
        acc.lcm(z.re.denom()).lcm(z.im.denom())
    });
    let ints: Vec<Complex<BigInt>> = c
        .iter()
        .map(|z| Complex::new((&z.re * &lcm).to_integer(), (&z.im * &lcm).to_integer()))
        .collect();
    let nums = gaussian_divisors(gauss_to_i128(&ints[0])?)?;
    let dens = gaussian_divisors(gauss_to_i128(ints.last().unwrap())?)?;
    let to_q = |n: i128| BigRational::from_integer(BigInt::from(n));
    for p in &nums {
        for d in &dens {
            // p / d = p * conj(d) / N(d)
            let n = d.0 * d.0 + d.1 * d.1;
            let re = p.0 * d.0 + p.1 * d.1;
            let im = p.1 * d.0 - p.0 * d.1;
            let cand = Complex::new(to_q(re) / to_q(n), to_q(im) / to_q(n));
            if !roots.contains(&cand) && eval(&c, &cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    Ok(roots)
}

/// Roots in `𝔽_p` by exhaustion.
pub fn prime_field_roots(coeffs: &[u64], p: u64) -> Result<Vec<u64>> {
    if p > 1 << 20 {
        return Err(Error::ResourceCap(format!("root search in F_{p}")));
    }
    let c = trim(coeffs);
    if c.is_empty() {
        return Err(Error::Invalid("roots of the zero polynomial".into()));
    }
    Ok((0..p)
        .filter(|x| {
            c.iter()
                .rev()
                .fold(0u128, |acc, k| (acc * *x as u128 + *k as u128) % p as u128)
                == 0
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::q;

    fn gq(a: (i64, i64), b: (i64, i64)) -> Complex<BigRational> {
        Complex::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn rational_roots_of_split_cubic() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let roots = rational_roots(&[q(0, 1), q(-3, 2), q(5, 2), q(1, 1)]).unwrap();
        let mut r = roots.clone();
        r.sort();
        assert_eq!(r, vec![q(-3, 1), q(0, 1), q(1, 2)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_root() {
        assert!(rational_roots(&[q(1, 1), q(0, 1), q(1, 1)]).unwrap().is_empty());
    }

    #[test]
    fn gaussian_roots_of_t_squared_plus_one() {
        let r = gaussian_roots(&[gq((1, 1), (0, 1)), gq((0, 1), (0, 1)), gq((1, 1), (0, 1))]).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&gq((0, 1), (1, 1))));
        assert!(r.contains(&gq((0, 1), (-1, 1))));
    }

    #[test]
    fn gaussian_root_with_fractional_parts() {
        // 2t - (1 + i)  ->  t = 1/2 + 1/2 i
        let r = gaussian_roots(&[gq((-1, 1), (-1, 1)), gq((2, 1), (0, 1))]).unwrap();
        assert_eq!(r, vec![gq((1, 2), (1, 2))]);
    }

    #[test]
    fn prime_field_roots_exhaustive() {
        // t^2 - 1 over F_5
        assert_eq!(prime_field_roots(&[4, 0, 1], 5).unwrap(), vec![1, 4]);
    }
}
