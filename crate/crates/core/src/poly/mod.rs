//! Dense univariate polynomials over exact coefficient rings.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed, so the zero polynomial has no coefficients at all.

mod numeric;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational, Scalar};
use crate::ring::{Field, IntegralDomain, Ring};

pub use numeric::{numeric_roots, DEFAULT_MAX_ITERATIONS, DEFAULT_TOL};
pub use roots::{primitive_integer_model, quad_irrational_roots, rational_roots, roots_in_extension};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder: `lead(d)^(deg self - deg d + 1) * self = q*d + r`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by zero polynomial");
        let Some(n) = self.degree() else { return Self::zero() };
        if n < dd {
            return self.clone();
        }
        let lc = divisor.lead();
        let mut r = self.clone();
        let mut e = n - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let t = Self::monomial(r.lead(), rd - dd);
            r = r.scale(&lc) - t * divisor.clone();
            e -= 1;
        }
        r.scale(&lc.pow(e as u32))
    }
}

impl<R: Field> Poly<R> {
    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = divisor.lead().inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.lead() * inv_lead.clone();
            let k = rd - dd;
            rem = rem - Self::monomial(c.clone(), k) * divisor.clone();
            quot[k] = c;
        }
        Ok((Self::new(quot), rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead().inv() {
            Some(inv) if !self.is_zero() => self.scale(&inv),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative()).expect("nonzero polynomial");
        self.divrem(&g).expect("nonzero gcd").0.monic()
    }

    pub fn is_square_free(&self) -> bool {
        match self.gcd(&self.derivative()) {
            Ok(g) => g.is_constant(),
            Err(_) => false,
        }
    }

    /// Discriminant `(-1)^(n(n-1)/2) Res(p, p') / lead(p)`.
    pub fn discriminant(&self) -> Result<R> {
        let n = self.degree().ok_or(Error::ConstantInput)?;
        if n == 0 {
            return Err(Error::ConstantInput);
        }
        let res = resultant(self, &self.derivative())?;
        let value = res.exact_div(&self.lead()).ok_or(Error::DivisionByZero)?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -value } else { value })
    }
}

impl<R: IntegralDomain> Poly<R> {
    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lc = divisor.lead();
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let c = rem.lead().exact_div(&lc)?;
            let k = rd - dd;
            rem = rem - Self::monomial(c.clone(), k) * divisor.clone();
            quot[k] = c;
        }
        Some(Self::new(quot))
    }
}

/// Resultant by the subresultant remainder sequence.
///
/// Uses `Res(p, q) = lead(p)^deg q * lead(q)^deg p * prod (alpha_i - beta_j)`,
/// so `Res(X - 2, X - 3) = -1`. Only exact divisions in `R` are performed,
/// which keeps it usable over `Q[a]` for elimination.
pub fn resultant<R: IntegralDomain>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroInput);
    };
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut s = R::one();
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = -s;
        }
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if db == 0 {
            // h <- lead(b)^deg a * h^(1 - deg a)
            let lb = b.lead();
            let value = if da == 0 {
                R::one()
            } else {
                let num = lb.pow(da as u32);
                num.exact_div(&h.pow(da as u32 - 1)).expect("subresultant division")
            };
            return Ok(s * value);
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(R::zero());
        }
        let divisor = g.clone() * h.pow(delta as u32);
        a = b;
        b = Poly::new(
            r.coeffs
                .iter()
                .map(|c| c.exact_div(&divisor).expect("subresultant division"))
                .collect(),
        );
        g = a.lead();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u32).exact_div(&h.pow(delta as u32 - 1)).expect("subresultant division"),
        };
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        for (i, c) in short.coeffs.into_iter().enumerate() {
            let cur = std::mem::replace(&mut long.coeffs[i], R::zero());
            long.coeffs[i] = cur + c;
        }
        Self::new(long.coeffs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let cur = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = cur + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

impl<R: IntegralDomain> IntegralDomain for Poly<R> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.exact_quotient(divisor)
    }
}

impl Poly<Rational> {
    pub fn to_quad(&self) -> Poly<QuadExt> {
        self.map(|c| QuadExt::from_rational(c.clone()))
    }
}

impl Poly<QuadExt> {
    /// Coefficients as rationals when every one of them is rational.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        self.coeffs.iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>().map(Poly::new)
    }

    /// Applies the nontrivial automorphism of the quadratic extension.
    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}
