//! Exact scalars: arbitrary precision rationals and elements of a single
//! quadratic extension `Q(sqrt d)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::ring::{Field, IntegralDomain, Ring};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Square root of a non-negative integer when it is a perfect square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative rational square root, if `q` is the square of a rational.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    // canonical form: q is a square iff numerator and denominator both are
    let n = isqrt_exact(q.numer())?;
    let d = isqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

/// Writes `sqrt(d) = coefficient * sqrt(m)` with `m` an integer stripped of
/// small square factors.
///
/// Only primes below 1000 are removed, so `m` is not guaranteed square-free.
pub fn split_radicand(d: &Rational) -> (Rational, BigInt) {
    // sqrt(p/q) = sqrt(p*q) / q
    let mut m = d.numer() * d.denom();
    let mut coefficient = Rational::new(BigInt::one(), d.denom().clone());
    let mut p: u32 = 2;
    while p < 1000 {
        let sq = BigInt::from(p * p);
        while !m.is_zero() && m.is_multiple_of(&sq) {
            m /= &sq;
            coefficient *= Rational::from_integer(p.into());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (coefficient, m)
}

/// `a + b*sqrt(d)` with rational `a`, `b`, `d`.
///
/// `d` is never a rational square while `b != 0`. When `b == 0` the radicand
/// only records which extension the value came from; such values are
/// compatible with every radicand.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadExt {
    /// Builds `a + b*sqrt(d)`, folding `sqrt(d)` into `a` when `d` is a
    /// rational square.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        if d.is_zero() || b.is_zero() {
            return Self { a, b: Rational::zero(), d };
        }
        match sqrt_exact(&d) {
            Some(r) => Self { a: a + b * r, b: Rational::zero(), d: Rational::zero() },
            None => Self { a, b, d },
        }
    }

    fn raw(a: Rational, b: Rational, d: Rational) -> Self {
        Self { a, b, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::raw(a, Rational::zero(), Rational::zero())
    }

    /// `sqrt(d)` as an element of `Q(sqrt d)`.
    pub fn sqrt_of(d: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    /// `sqrt(q)` for rational `q`, over `Q` when `q` is a square and over
    /// `Q(sqrt m)` with small square factors of `m` removed otherwise.
    pub fn sqrt_rational(q: &Rational) -> Self {
        if let Some(r) = sqrt_exact(q) {
            return Self::from_rational(r);
        }
        let (coefficient, m) = split_radicand(q);
        Self::new(Rational::zero(), coefficient, Rational::from_integer(m))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conj(&self) -> Self {
        Self::raw(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.d * &self.b * &self.b
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    fn common_radicand(&self, other: &Self) -> Result<Rational> {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => Ok(if self.d.is_zero() { other.d.clone() } else { self.d.clone() }),
            (true, false) => Ok(other.d.clone()),
            (false, true) => Ok(self.d.clone()),
            (false, false) if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::RadicandMismatch { left: self.d.to_string(), right: other.d.to_string() }),
        }
    }

    /// True when both values can be combined without a radicand mismatch.
    pub fn compatible(&self, other: &Self) -> bool {
        self.common_radicand(other).is_ok()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::raw(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::raw(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let a = &self.a * &other.a + &d * &self.b * &other.b;
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(Self::raw(a, b, d))
    }

    pub fn try_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(&self.a / &n, -&self.b / &n, self.d.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.try_inv()?)
    }

    /// Square root inside the same extension, when one exists.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = sqrt_exact(&self.a) {
                return Some(Self::raw(r, Rational::zero(), self.d.clone()));
            }
            if self.d.is_zero() {
                return None;
            }
            // a = d * y^2
            let y = sqrt_exact(&(&self.a / &self.d))?;
            return Some(Self::raw(Rational::zero(), y, self.d.clone()));
        }
        // (x + y sqrt d)^2 = a + b sqrt d  <=>  x^2 + d y^2 = a, 2xy = b
        let n = sqrt_exact(&self.norm())?;
        let two = rat(2);
        for candidate in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(x) = sqrt_exact(&candidate) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let root = Self::raw(x, y, self.d.clone());
                if root.try_mul(&root).ok().as_ref() == Some(self) {
                    return Some(root);
                }
            }
        }
        None
    }

    /// Re-expresses the value over `sqrt(target)`, possible when
    /// `radicand / target` is a rational square.
    pub fn rebase(&self, target: &Rational) -> Option<Self> {
        if self.b.is_zero() {
            return Some(Self::raw(self.a.clone(), Rational::zero(), target.clone()));
        }
        if target.is_zero() {
            return None;
        }
        let r = sqrt_exact(&(&self.d / target))?;
        Some(Self::raw(self.a.clone(), &self.b * r, target.clone()))
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return Complex64::new(a, 0.0);
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        if d >= 0.0 {
            Complex64::new(a + b * d.sqrt(), 0.0)
        } else {
            Complex64::new(a, b * (-d).sqrt())
        }
    }

    /// Total order on `(rational_part, radical_part)`, used for deterministic
    /// sorting only. It is not the real ordering.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

/// True when `Q(sqrt d1) = Q(sqrt d2)`.
pub fn same_extension(d1: &Rational, d2: &Rational) -> bool {
    if d1.is_zero() || d2.is_zero() {
        return d1.is_zero() && d2.is_zero();
    }
    sqrt_exact(&(d1 / d2)).is_some()
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl From<Rational> for QuadExt {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -self.b.clone(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

// The operator impls panic on radicand mismatch or division by zero, like the
// integer operators do on overflow. Use the `try_*` methods to recover.

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("QuadExt addition")
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("QuadExt subtraction")
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("QuadExt multiplication")
    }
}

impl Div for QuadExt {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.try_div(&rhs).expect("QuadExt division")
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.a, -self.b, self.d)
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }
}

impl IntegralDomain for QuadExt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.try_div(divisor).ok()
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

/// Exact scalars usable throughout the curve pipeline.
pub trait Scalar: Field + fmt::Display + 'static {
    fn to_quad(&self) -> QuadExt;
    fn as_rational(&self) -> Option<Rational>;
    fn to_complex(&self) -> Complex64;
}

impl Scalar for Rational {
    fn to_quad(&self) -> QuadExt {
        QuadExt::from_rational(self.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Scalar for QuadExt {
    fn to_quad(&self) -> QuadExt {
        self.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        QuadExt::as_rational(self)
    }

    fn to_complex(&self) -> Complex64 {
        QuadExt::to_complex(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadExt {
        QuadExt::new(rat(a), rat(b), rat(d))
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&rat(2)), None);
        assert_eq!(sqrt_exact(&rat(0)), Some(rat(0)));
        assert_eq!(sqrt_exact(&rat(-4)), None);
        assert_eq!(sqrt_exact(&ratio(1, 8)), None);
    }

    #[test]
    fn norm_form_product() {
        assert_eq!(q(1, 1, 2) * q(1, -1, 2), QuadExt::from(rat(-1)));
    }

    #[test]
    fn inverse_by_conjugate() {
        let x = q(1, 1, 2);
        assert_eq!(x.inv().unwrap(), q(-1, 1, 2));
        assert_eq!(x.clone() * x.inv().unwrap(), QuadExt::one());
    }

    #[test]
    fn rational_detection() {
        let x = q(3, 0, 5);
        assert!(x.is_rational());
        assert_eq!(x, QuadExt::from(rat(3)));
    }

    #[test]
    fn perfect_square_radicand_folds() {
        let x = q(1, 2, 9);
        assert!(x.is_rational());
        assert_eq!(x.as_rational(), Some(rat(7)));
    }

    #[test]
    fn radicand_mismatch_is_an_error() {
        let err = q(1, 1, 2).try_add(&q(1, 1, 3)).unwrap_err();
        assert!(matches!(err, Error::RadicandMismatch { .. }));
        // rational values interoperate with any extension
        assert!(q(5, 0, 3).try_mul(&q(1, 1, 2)).is_ok());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q(1, 1, 2).try_div(&QuadExt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_in_field() {
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let s = q(3, 2, 2).sqrt_in_field().unwrap();
        assert_eq!(s.clone() * s, q(3, 2, 2));
        // sqrt(-3) inside Q(sqrt -3)
        let w = QuadExt::new(rat(-3), rat(0), rat(-3)).sqrt_in_field().unwrap();
        assert_eq!(w, q(0, 1, -3));
        assert!(q(1, 1, 2).sqrt_in_field().is_none());
    }

    #[test]
    fn rebase_between_radicands() {
        // sqrt 8 = 2 sqrt 2
        let x = q(1, 1, 8).rebase(&rat(2)).unwrap();
        assert_eq!(x, q(1, 2, 2));
        assert!(q(1, 1, 3).rebase(&rat(2)).is_none());
        assert!(same_extension(&rat(8), &rat(2)));
        assert!(!same_extension(&rat(-1), &rat(2)));
    }

    #[test]
    fn split_radicand_strips_squares() {
        let (c, m) = split_radicand(&rat(8));
        assert_eq!((c, m), (rat(2), BigInt::from(2)));
        let (c, m) = split_radicand(&ratio(3, 4));
        assert_eq!((c, m), (ratio(1, 2), BigInt::from(3)));
    }

    #[test]
    fn complex_image() {
        let z = q(1, 1, -1).to_complex();
        assert!((z - Complex64::new(1.0, 1.0)).norm() < 1e-15);
    }
}
