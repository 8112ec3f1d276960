//! Coefficient scalars for the two arithmetic modes.
//!
//! Polynomials are generic over [`PolyScalar`]: `Complex<f64>` for fast
//! sweeps and `Complex<BigRational>` for certified work. Every f64 is an
//! exact dyadic rational, so lifting float data into the rational mode is
//! lossless; this is what lets the structural operations (slicing,
//! Lagrange reconstruction) run exactly and round only once on output.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::Neg;

/// Complex number with exact rational real and imaginary parts.
pub type CxRat = num_complex::Complex<BigRational>;

/// Real scalar used for norms, nodes and bounds.
pub trait RealScalar:
    Num + Clone + PartialOrd + fmt::Debug + Send + Sync + 'static
{
    fn abs(&self) -> Self;
    /// Exact embedding of a finite f64 (every finite f64 is dyadic).
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
}

impl RealScalar for f64 {
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl RealScalar for BigRational {
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("non-finite f64 cannot be embedded")
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Complex coefficient scalar.
pub trait PolyScalar:
    Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + Send + Sync + 'static
{
    type Real: RealScalar;

    /// Modulus |a|. In rational mode this is exact whenever |a|^2 is a
    /// perfect rational square (covers real, purely imaginary, and
    /// Pythagorean coefficients) and otherwise a certified upper bound
    /// within relative 2^-64, which keeps every inequality in the bound
    /// chain sound.
    fn modulus(&self) -> Self::Real;
    fn from_real(r: &Self::Real) -> Self;
    fn approx_c64(&self) -> Complex64;
}

impl PolyScalar for Complex64 {
    type Real = f64;

    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn from_real(r: &f64) -> Self {
        Complex64::new(*r, 0.0)
    }
    fn approx_c64(&self) -> Complex64 {
        *self
    }
}

impl PolyScalar for CxRat {
    type Real = BigRational;

    fn modulus(&self) -> BigRational {
        if self.im.is_zero() {
            return Signed::abs(&self.re);
        }
        if self.re.is_zero() {
            return Signed::abs(&self.im);
        }
        let sq = &self.re * &self.re + &self.im * &self.im;
        match rational_sqrt_exact(&sq) {
            Some(r) => r,
            None => rational_sqrt_upper(&sq),
        }
    }
    fn from_real(r: &BigRational) -> Self {
        CxRat::new(r.clone(), BigRational::zero())
    }
    fn approx_c64(&self) -> Complex64 {
        Complex64::new(
            RealScalar::to_f64(&self.re),
            RealScalar::to_f64(&self.im),
        )
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num_integer::Roots::sqrt(num);
    let sd = num_integer::Roots::sqrt(den);
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Rational upper bound on sqrt(r) with relative error below 2^-64.
pub fn rational_sqrt_upper(r: &BigRational) -> BigRational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^B so the integer sqrt carries
    // B extra bits, then round the root up by one ulp.
    const B: u32 = 64;
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let scaled = num * den << (2 * B);
    let root = num_integer::Roots::sqrt(&scaled) + BigUint::one();
    BigRational::new(BigInt::from(root), BigInt::from(den << B))
}

/// Rational lower bound on e from the truncated exponential series.
pub fn e_lower(terms: u32) -> BigRational {
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for k in 0..=terms {
        if k > 0 {
            term /= BigRational::from_integer(BigInt::from(k));
        }
        sum += &term;
    }
    sum
}

/// Rational upper bound on e: truncated series plus a tail majorant
/// (the tail after k = K is below 2/(K+1)!).
pub fn e_upper(terms: u32) -> BigRational {
    let mut tail = BigRational::one();
    for k in 1..=(terms + 1) {
        tail /= BigRational::from_integer(BigInt::from(k));
    }
    e_lower(terms) + tail * BigRational::from_integer(BigInt::from(2))
}

/// Exact factorial.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as usize; panics on overflow (fine for the small
/// basis dimensions used here).
pub fn binomial_usize(n: u64, k: u64) -> usize {
    binomial(n, k).to_usize().expect("binomial overflows usize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_sqrt_detects_perfect_squares() {
        assert_eq!(rational_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn sqrt_upper_is_a_tight_upper_bound() {
        let two = rat(2, 1);
        let u = rational_sqrt_upper(&two);
        assert!(&u * &u >= two);
        let f = RealScalar::to_f64(&u);
        assert!((f - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn pythagorean_modulus_is_exact() {
        let a = CxRat::new(rat(3, 1), rat(4, 1));
        assert_eq!(a.modulus(), rat(5, 1));
        let b = CxRat::new(rat(0, 1), rat(-7, 2));
        assert_eq!(b.modulus(), rat(7, 2));
    }

    #[test]
    fn e_bounds_bracket_e() {
        let lo = e_lower(40);
        let hi = e_upper(40);
        assert!(lo < hi);
        // f64 E is within one ulp of e, far coarser than the series bounds
        assert!(RealScalar::to_f64(&lo) <= std::f64::consts::E + 1e-15);
        assert!(RealScalar::to_f64(&hi) >= std::f64::consts::E - 1e-15);
        assert!(&hi - &lo < rat(1, 1_000_000_000));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_usize(10, 3), 120);
        assert_eq!(binomial_usize(5, 0), 1);
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
