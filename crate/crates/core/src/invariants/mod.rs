//! Dihedral invariants of curves with an extra involution, the loci built
//! from them, and the genus 2 group table.

mod classify;

use std::fmt;

pub use classify::{classify, classify_with, select_involution, select_involution_with, Classification, Selection};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::ring::{Field, IntegralDomain, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Z2,
    V4,
    D8,
    D12,
    Z3xD8,
    Gl23,
    Z10,
    /// Cyclic of order `2N`, carrying `N`.
    Z2N(usize),
    FlaggedOther,
}

impl GroupName {
    /// Order of the reduced group when the name determines it.
    pub fn reduced_order(&self) -> Option<usize> {
        match self {
            GroupName::Z2 => Some(1),
            GroupName::V4 => Some(2),
            GroupName::D8 => Some(4),
            GroupName::D12 => Some(6),
            GroupName::Z3xD8 => Some(12),
            GroupName::Gl23 => Some(24),
            GroupName::Z10 => Some(5),
            GroupName::Z2N(n) => Some(*n),
            GroupName::FlaggedOther => None,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Z2 => write!(f, "Z2"),
            GroupName::V4 => write!(f, "V4"),
            GroupName::D8 => write!(f, "D8"),
            GroupName::D12 => write!(f, "D12"),
            GroupName::Z3xD8 => write!(f, "Z3⋊D8"),
            GroupName::Gl23 => write!(f, "GL2(3)"),
            GroupName::Z10 => write!(f, "Z10"),
            GroupName::Z2N(n) => write!(f, "Z2N({n})"),
            GroupName::FlaggedOther => write!(f, "flagged-other"),
        }
    }
}

/// How the reduced involutions lift to the full automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftFlag {
    Order4Lift,
    InvolutionLift,
}

impl fmt::Display for LiftFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftFlag::Order4Lift => write!(f, "order4-lift"),
            LiftFlag::InvolutionLift => write!(f, "involution-lift"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLabel {
    pub name: GroupName,
    pub reduced_order: Option<usize>,
    pub lift_flag: Option<LiftFlag>,
}

impl GroupLabel {
    pub fn new(name: GroupName) -> Self {
        Self { name, reduced_order: name.reduced_order(), lift_flag: None }
    }

    /// Order of the full group, twice the reduced order.
    pub fn order(&self) -> Option<usize> {
        self.reduced_order.map(|n| 2 * n)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if let Some(flag) = self.lift_flag {
            write!(f, " ({flag})")?;
        }
        Ok(())
    }
}

/// `u_i = a_1^{g-i+1} a_i + a_g^{g-i+1} a_{g-i+1}` for `i = 1..g`.
pub fn dihedral_from_normal<S: Ring>(a: &[S]) -> Vec<S> {
    let g = a.len();
    (1..=g)
        .map(|i| {
            let m = (g - i + 1) as u32;
            Ring::pow(&a[0], m) * a[i - 1].clone() + Ring::pow(&a[g - 1], m) * a[g - i].clone()
        })
        .collect()
}

/// Invariants of `Y^2 = Σ b_i X^{2i}`, computed without normalizing `b_0` and
/// `b_{g+1}` to one.
pub fn dihedral_from_even<S: Field>(b: &[S]) -> Result<Vec<S>> {
    let g = b.len().checked_sub(2).filter(|&g| g >= 1).ok_or(Error::LengthMismatch {
        expected: 3,
        actual: b.len(),
    })?;
    if b[0].is_zero() || b[g + 1].is_zero() {
        return Err(Error::ZeroEndCoefficient);
    }
    Ok((1..=g)
        .map(|i| {
            let m = (g - i + 1) as u32;
            let first = Ring::pow(&b[1], m) * b[i].clone() / (b[g + 1].clone() * Ring::pow(&b[0], m));
            let second = Ring::pow(&b[g], m) * b[g - i + 1].clone() / (Ring::pow(&b[g + 1], m) * b[0].clone());
            first + second
        })
        .collect())
}

/// `2^{g+1} a_g^{2g+2} - 2^{g+1} u_1 a_g^{g+1} + u_g^{g+1}`.
pub fn cover_residual<S: Ring>(a: &[S], u: &[S]) -> S {
    let g = a.len();
    let two = S::from_int(2);
    let p = Ring::pow(&two, (g + 1) as u32);
    let ag = &a[g - 1];
    p.clone() * Ring::pow(ag, (2 * g + 2) as u32) - p * u[0].clone() * Ring::pow(ag, (g + 1) as u32)
        + Ring::pow(&u[g - 1], (g + 1) as u32)
}

/// The factors `2^{g-1} u_1^2 - u_g^{g+1}` and `2^{g-1} u_1^2 + u_g^{g+1}`.
pub fn locus_eval<S: Ring>(u: &[S]) -> (S, S) {
    let g = u.len();
    let left = Ring::pow(&S::from_int(2), (g - 1) as u32) * u[0].clone() * u[0].clone();
    let right = Ring::pow(&u[g - 1], (g + 1) as u32);
    (left.clone() - right.clone(), left + right)
}

/// The matrix `∂u_i/∂a_j`.
pub fn jacobian_matrix<S: Ring>(a: &[S]) -> Vec<Vec<S>> {
    let g = a.len();
    // d/da_j of a_p^m a_q
    let term = |p: usize, m: u32, q: usize, j: usize| -> S {
        if p == q {
            if j == p {
                S::from_int(m as i64 + 1) * Ring::pow(&a[p], m)
            } else {
                S::zero()
            }
        } else if j == p {
            S::from_int(m as i64) * Ring::pow(&a[p], m - 1) * a[q].clone()
        } else if j == q {
            Ring::pow(&a[p], m)
        } else {
            S::zero()
        }
    };
    (1..=g)
        .map(|i| {
            let m = (g - i + 1) as u32;
            (0..g).map(|j| term(0, m, i - 1, j) + term(g - 1, m, g - i, j)).collect()
        })
        .collect()
}

/// Determinant of the Jacobian of `a -> u`, evaluated at `a`. Works over any
/// integral domain, so `a` may be symbolic.
pub fn jacobian_det<S: IntegralDomain>(a: &[S]) -> S {
    determinant(jacobian_matrix(a))
}

/// Fraction-free (Bareiss) elimination.
pub fn determinant<S: IntegralDomain>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return S::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = value.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `a_i -> a_{g+1-i}`.
pub fn swap_action<S: Clone>(a: &[S]) -> Vec<S> {
    a.iter().rev().cloned().collect()
}

/// `b_i -> s t^{2i} b_i`, the effect of `X -> tX` and rescaling `Y`.
pub fn scale_action<S: Ring>(b: &[S], t: &S, s: &S) -> Vec<S> {
    let t2 = t.clone() * t.clone();
    let mut factor = s.clone();
    b.iter()
        .map(|bi| {
            let out = factor.clone() * bi.clone();
            factor = factor.clone() * t2.clone();
            out
        })
        .collect()
}

/// The automorphism group of a genus 2 curve with invariants `u`.
pub fn classify_genus2(u: &[Rational]) -> Result<GroupLabel> {
    if u.len() != 2 {
        return Err(Error::LengthMismatch { expected: 2, actual: u.len() });
    }
    let r = |n: i64| Rational::from_int(n);
    let (u1, u2) = (&u[0], &u[1]);
    let is = |x: i64, y: i64| *u1 == r(x) && *u2 == r(y);
    if is(0, 0) || is(6750, 450) {
        return Ok(GroupLabel::new(GroupName::Z3xD8));
    }
    if is(-250, 50) {
        return Ok(GroupLabel::new(GroupName::Gl23));
    }
    let excluded = |locus| Error::ExcludedLocusPoint { locus, u2: u2.to_string() };
    let d12 = u2 * u2 - r(220) * u2 - r(16) * u1 + r(4500);
    if d12.is_zero() {
        if *u2 == r(18) {
            return Err(excluded("D12"));
        }
        return Ok(GroupLabel::new(GroupName::D12));
    }
    let d8 = r(2) * u1 * u1 - u2 * u2 * u2;
    if d8.is_zero() {
        return match u2 {
            x if *x == r(0) || *x == r(450) => Ok(GroupLabel::new(GroupName::Z3xD8)),
            x if *x == r(50) => Ok(GroupLabel::new(GroupName::Gl23)),
            x if *x == r(2) || *x == r(18) => Err(excluded("D8")),
            _ => Ok(GroupLabel::new(GroupName::D8)),
        };
    }
    Ok(GroupLabel::new(GroupName::V4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::poly::Poly;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(dihedral_from_normal(&v(&[15, 15])), v(&[6750, 450]));
        assert_eq!(dihedral_from_normal(&v(&[-5, -5])), v(&[-250, 50]));
        let (a1, a2, a3) = (rat(2), rat(-3), rat(5));
        let u = dihedral_from_normal(&[a1.clone(), a2.clone(), a3.clone()]);
        assert_eq!(u[0], Ring::pow(&a1, 4) + Ring::pow(&a3, 4));
        assert_eq!(u[1], (&a1 * &a1 + &a3 * &a3) * &a2);
        assert_eq!(u[2], rat(2) * &a1 * &a3);
    }

    #[test]
    fn even_model_examples() {
        assert_eq!(dihedral_from_even(&v(&[2, 8, 16, 16])).unwrap(), v(&[16, 8]));
        assert_eq!(dihedral_from_even(&v(&[2, 2, 5, 2, 2])).unwrap(), v(&[2, 5, 2]));
        assert_eq!(dihedral_from_even(&v(&[1, 15, 15, 1])).unwrap(), v(&[6750, 450]));
        assert_eq!(dihedral_from_even(&v(&[0, 1, 1, 1])), Err(Error::ZeroEndCoefficient));
    }

    #[test]
    fn even_model_matches_complex_normalization() {
        // scale X by t with t^{2g+2} = b_0/b_{g+1} and divide by b_0
        let b = [2.0_f64, 8.0, 16.0, 16.0];
        let t = (b[0] / b[3]).powf(1.0 / 6.0);
        let a1 = b[1] * t * t / b[0];
        let a2 = b[2] * t.powi(4) / b[0];
        let u = [a1.powi(2) * a1 + a2.powi(2) * a2, a1 * a2 + a2 * a1];
        assert!((u[0] - 16.0).abs() < 1e-9 && (u[1] - 8.0).abs() < 1e-9);
    }

    #[test]
    fn residual_examples() {
        for a in [v(&[15, 15]), v(&[1, 0]), v(&[3, -7, 2]), vec![ratio(1, 3), rat(4), ratio(-5, 2), rat(7)]] {
            let u = dihedral_from_normal(&a);
            assert!(cover_residual(&a, &u).is_zero());
        }
    }

    #[test]
    fn locus_examples() {
        assert_eq!(locus_eval(&v(&[16, 8])), (rat(0), rat(1024)));
        assert_eq!(locus_eval(&v(&[0, 0])), (rat(0), rat(0)));
        assert_eq!(locus_eval(&v(&[-250, 50])).0, rat(0));
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(jacobian_det(&v(&[2, 1])), rat(42));
        assert_eq!(jacobian_det(&v(&[3, 3])), rat(0));
        assert_eq!(jacobian_det(&v(&[0, 0, 0])), rat(0));
    }

    #[test]
    fn symbolic_genus2_jacobian() {
        // a_1 = x inside Q[x][y], a_2 = y
        type P = Poly<Poly<Rational>>;
        let a1 = P::constant(Poly::x());
        let a2 = P::x();
        let det = jacobian_det(&[a1.clone(), a2.clone()]);
        let expected = (Ring::pow(&a1, 3) - Ring::pow(&a2, 3)).scale(&Poly::constant(rat(6)));
        assert_eq!(det, expected);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![v(&[0, 2, 1]), v(&[3, -1, 4]), v(&[5, 6, 0])];
        // 0(0-24) - 2(0-20) + 1(18+5)
        assert_eq!(determinant(m), rat(63));
    }

    #[test]
    fn actions() {
        assert_eq!(swap_action(&v(&[1, 2, 3])), v(&[3, 2, 1]));
        assert_eq!(scale_action(&v(&[1, 2, 2, 1]), &rat(1), &rat(1)), v(&[1, 2, 2, 1]));
        assert_eq!(scale_action(&v(&[1, 2, 2, 1]), &rat(2), &rat(3)), v(&[3, 24, 96, 192]));
    }

    #[test]
    fn genus2_table() {
        let label = |a: i64, b: i64| classify_genus2(&v(&[a, b])).map(|l| l.name);
        assert_eq!(label(0, 0), Ok(GroupName::Z3xD8));
        assert_eq!(label(6750, 450), Ok(GroupName::Z3xD8));
        assert_eq!(label(-250, 50), Ok(GroupName::Gl23));
        assert_eq!(label(16, 8), Ok(GroupName::D8));
        // u_2 = 20: 400 - 4400 - 16 u_1 + 4500 = 0 at u_1 = 125/4
        assert_eq!(classify_genus2(&[ratio(125, 4), rat(20)]).unwrap().name, GroupName::D12);
        assert!(matches!(label(54, 18), Err(Error::ExcludedLocusPoint { .. })));
        assert!(matches!(label(2, 2), Err(Error::ExcludedLocusPoint { locus: "D8", .. })));
        assert_eq!(label(-6750, 450), Ok(GroupName::Z3xD8));
        assert_eq!(label(250, 50), Ok(GroupName::Gl23));
        assert_eq!(label(1, 1), Ok(GroupName::V4));
    }

    #[test]
    fn labels() {
        assert_eq!(GroupLabel::new(GroupName::Gl23).order(), Some(48));
        assert_eq!(GroupName::Z3xD8.to_string(), "Z3⋊D8");
        assert_eq!(GroupLabel::new(GroupName::FlaggedOther).reduced_order, None);
    }
}
