//! Algebraic structure traits shared by scalars and polynomials.
//!
//! Operations take owned operands so that `BigRational`, [`QuadExt`] and
//! nested polynomials can all implement them through `std::ops`.
//!
//! [`QuadExt`]: crate::exact::QuadExt

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::Rational;

pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A commutative ring without zero divisors where exact quotients can be
/// computed.
pub trait IntegralDomain: Ring {
    /// Returns `q` with `q * divisor == self`, or `None` if no such `q` exists.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: IntegralDomain + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

impl IntegralDomain for Rational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for num_bigint::BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        n.into()
    }
}

impl IntegralDomain for num_bigint::BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, divisor);
        Zero::is_zero(&r).then_some(q)
    }
}
