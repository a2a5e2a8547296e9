//! Models over the field of moduli for curves with two reduced involutions.

use std::fmt;

use crate::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::invariants::{dihedral_from_even, locus_eval};
use crate::par::{map_collect, Execution};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Minus,
    Plus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Minus => write!(f, "minus"),
            Branch::Plus => write!(f, "plus"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalModelResult<S> {
    pub curve: HyperellipticCurve<S>,
    /// `b_0, ..., b_{g+1}` with `F = Σ b_i X^{2i}`.
    pub b: Vec<S>,
    pub branch: Branch,
    pub verified: bool,
}

/// `Y^2 = u_1 X^{2g+2} + u_1 X^{2g} + u_2 X^{2g-2} + ... + u_{g-1} X^4 ± u_g X^2 + 2`,
/// with `+u_g` on the minus factor and `-u_g` on the plus factor.
pub fn rational_model<S: Scalar>(u: &[S]) -> Result<RationalModelResult<S>> {
    let g = u.len();
    if g < 2 {
        return Err(Error::LengthMismatch { expected: 2, actual: g });
    }
    let (minus, plus) = locus_eval(u);
    let branch = if minus.is_zero() {
        Branch::Minus
    } else if plus.is_zero() {
        Branch::Plus
    } else {
        return Err(Error::NotOnLocus);
    };
    if u[0].is_zero() {
        return Err(Error::ZeroLeading);
    }
    let mut b = Vec::with_capacity(g + 2);
    b.push(S::from_int(2));
    b.push(match branch {
        Branch::Minus => u[g - 1].clone(),
        Branch::Plus => -u[g - 1].clone(),
    });
    for i in 2..=g {
        b.push(u[g - i].clone());
    }
    b.push(u[0].clone());

    let mut coeffs = vec![S::zero(); 2 * g + 3];
    for (i, bi) in b.iter().enumerate() {
        coeffs[2 * i] = bi.clone();
    }
    let f = Poly::new(coeffs);
    let curve = match HyperellipticCurve::new(f.clone()) {
        Ok(c) => c,
        Err(Error::SingularModel) => {
            let discriminant = f.discriminant()?;
            return Err(Error::SingularOutput { discriminant: discriminant.to_string() });
        }
        Err(e) => return Err(e),
    };
    let mut expected = u.to_vec();
    if branch == Branch::Plus {
        expected[g - 1] = -expected[g - 1].clone();
    }
    let verified = dihedral_from_even(&b)? == expected;
    Ok(RationalModelResult { curve, b, branch, verified })
}

/// Whether the model's invariants give back `u` (minus factor) or
/// `(u_1, ..., -u_g)` (plus factor).
pub fn round_trip_check<S: Scalar>(u: &[S]) -> bool {
    rational_model(u).is_ok_and(|r| r.verified)
}

/// `u` for the normal form with `a_1 = a_g`, a point on the minus factor.
pub fn minus_locus_point(a: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let g = a.len();
    a[g - 1] = a[0].clone();
    crate::invariants::dihedral_from_normal(&a)
}

/// Round trip of many points.
pub fn verify_batch(points: &[Vec<Rational>], exec: Execution) -> Vec<bool> {
    map_collect(points, exec, |u| round_trip_check(u))
}
