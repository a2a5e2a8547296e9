//! Fractional linear transformations `t -> (a t + b) / (c t + d)` of the
//! projective line, and their action on binary forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{QuadExt, Scalar};
use crate::poly::Poly;
use crate::ring::{Field, Ring};

/// A point of the projective line over `S`.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjPoint<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> fmt::Display for ProjPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// An invertible 2x2 matrix up to scaling, kept with its first nonzero entry
/// equal to one so that equality is projective equality.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusMap<S> {
    a: S,
    b: S,
    c: S,
    d: S,
}

impl<S: Field> MoebiusMap<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Result<Self> {
        if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
            return Err(Error::SingularMap);
        }
        let pivot = [&a, &b, &c, &d].into_iter().find(|x| !x.is_zero()).cloned().unwrap();
        let inv = pivot.inv().expect("nonzero pivot");
        Ok(Self { a: a * inv.clone(), b: b * inv.clone(), c: c * inv.clone(), d: d * inv })
    }

    pub fn identity() -> Self {
        Self { a: S::one(), b: S::zero(), c: S::zero(), d: S::one() }
    }

    /// `X -> -X`.
    pub fn negation() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), -S::one()).unwrap()
    }

    /// `X -> 1/X`.
    pub fn inversion() -> Self {
        Self::new(S::zero(), S::one(), S::one(), S::zero()).unwrap()
    }

    pub fn entries(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> S {
        self.a.clone() + self.d.clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, p: &ProjPoint<S>) -> ProjPoint<S> {
        match p {
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.a.clone() / self.c.clone())
                }
            }
            ProjPoint::Finite(x) => {
                let num = self.a.clone() * x.clone() + self.b.clone();
                let den = self.c.clone() * x.clone() + self.d.clone();
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(num / den)
                }
            }
        }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        Self::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a.clone() * f.clone() + b.clone() * h.clone(),
            c.clone() * e.clone() + d.clone() * g.clone(),
            c.clone() * f.clone() + d.clone() * h.clone(),
        )
        .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone()).expect("invertible")
    }

    /// Least `n <= bound` with `self^n` the identity.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut power = self.clone();
        for n in 1..=bound {
            if power.is_identity() {
                return Some(n);
            }
            power = power.compose(self);
        }
        None
    }

    /// `(cX + d)^n F((aX + b) / (cX + d))`, computed on the degree `n`
    /// homogenization of `F`.
    pub fn pullback_form(&self, f: &Poly<S>, n: usize) -> Result<Poly<S>> {
        let actual = f.degree().unwrap_or(0);
        if n < actual {
            return Err(Error::DegreeTooSmall { requested: n, actual });
        }
        Ok(substitute_form(f.coeffs(), [&self.a, &self.b, &self.c, &self.d], n))
    }

    /// The scalar `λ` with `pullback_form(F, n) = λ F`, if there is one.
    pub fn is_automorphism(&self, f: &Poly<S>, n: usize) -> Option<S> {
        let g = self.pullback_form(f, n).ok()?;
        let k = f.coeffs().iter().position(|c| !c.is_zero())?;
        let lambda = g.coeff(k) / f.coeff(k);
        (g == f.scale(&lambda)).then_some(lambda)
    }

    pub fn map_entries<T: Field>(&self, f: impl Fn(&S) -> T) -> MoebiusMap<T> {
        MoebiusMap::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d)).expect("embedding preserves invertibility")
    }
}

impl<S: Scalar> MoebiusMap<S> {
    pub fn to_quad(&self) -> MoebiusMap<QuadExt> {
        self.map_entries(|x| x.to_quad())
    }

    /// The fixed points, roots of `cX^2 + (d - a)X - b` together with `∞`
    /// when `c = 0`. A parabolic map returns its fixed point twice.
    ///
    /// Maps with rational entries may produce points in a new quadratic
    /// extension; maps over `Q(sqrt d)` must keep their fixed points there.
    pub fn fixed_points(&self) -> Result<(ProjPoint<QuadExt>, ProjPoint<QuadExt>)> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        let m = self.to_quad();
        let field = extension_of(&m);
        let (a, b, c, d) = (m.a, m.b, m.c, m.d);
        if c.is_zero() {
            if a == d {
                return Ok((ProjPoint::Infinity, ProjPoint::Infinity));
            }
            let x = b / (d - a);
            return Ok((ProjPoint::Finite(x), ProjPoint::Infinity));
        }
        let diff = a.clone() - d.clone();
        let disc = diff.clone() * diff.clone() + QuadExt::from_int(4) * b * c.clone();
        let root = match disc.sqrt_in_field() {
            Some(r) => r,
            None => {
                let q = disc.as_rational().ok_or(Error::NotRepresentable)?;
                let r = QuadExt::sqrt_rational(&q);
                
                match field {
                    Some(d) if !r.is_rational() => r.rebase(&d).ok_or(Error::NotRepresentable)?,
                    _ => r,
                }
            }
        };
        let two_c = QuadExt::from_int(2) * c;
        Ok((
            ProjPoint::Finite((diff.clone() + root.clone()) / two_c.clone()),
            ProjPoint::Finite((diff - root) / two_c),
        ))
    }
}

fn extension_of(m: &MoebiusMap<QuadExt>) -> Option<crate::exact::Rational> {
    m.entries().iter().find(|x| !x.is_rational()).map(|x| x.radicand().clone())
}

/// Substitutes `X -> (aX + b)/(cX + d)` into the degree `n` binary form with
/// coefficients `f` and clears denominators. Works over any ring, so the map
/// entries may themselves be polynomials.
pub fn substitute_form<R: Ring>(f: &[R], [a, b, c, d]: [&R; 4], n: usize) -> Poly<R> {
    let num = Poly::new(vec![b.clone(), a.clone()]);
    let den = Poly::new(vec![d.clone(), c.clone()]);
    let mut num_pows = vec![Poly::one()];
    let mut den_pows = vec![Poly::one()];
    for i in 1..=n {
        num_pows.push(num_pows[i - 1].clone() * num.clone());
        den_pows.push(den_pows[i - 1].clone() * den.clone());
    }
    let mut out = Poly::zero();
    for (i, coeff) in f.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let term = num_pows[i].clone() * den_pows[n - i].clone();
        out = out + term.scale(coeff);
    }
    out
}

impl<S: Scalar> fmt::Display for MoebiusMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.a, self.b, self.c, self.d)
    }
}
