//! Hyperelliptic models `Y^2 = F(X)`.

use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational, Scalar};
use crate::moebius::{substitute_form, MoebiusMap};
use crate::poly::Poly;

/// `Y^2 = F(X)` with `F` square-free of degree `2g+1` or `2g+2`, `g >= 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticCurve<S> {
    f: Poly<S>,
    genus: usize,
}

impl<S: Scalar> HyperellipticCurve<S> {
    pub fn new(f: Poly<S>) -> Result<Self> {
        let degree = f.degree().unwrap_or(0);
        if degree < 5 {
            return Err(Error::GenusTooSmall { degree });
        }
        if !f.is_square_free() {
            return Err(Error::SingularModel);
        }
        Ok(Self { f, genus: degree.div_ceil(2) - 1 })
    }

    pub fn poly(&self) -> &Poly<S> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `2g + 2`, the degree of the binary form carrying the branch points.
    pub fn form_degree(&self) -> usize {
        2 * self.genus + 2
    }

    /// True when `∞` is a branch point.
    pub fn is_odd_degree(&self) -> bool {
        self.f.degree() == Some(2 * self.genus + 1)
    }

    /// An isomorphic model of degree `2g + 2`, obtained through
    /// `X -> r + 1/X` for the least `r = 0, 1, 2, ...` with `F(r) != 0`.
    /// The new leading coefficient is `F(r)`.
    pub fn to_even_degree(&self) -> (Self, MoebiusMap<S>) {
        if !self.is_odd_degree() {
            return (self.clone(), MoebiusMap::identity());
        }
        let mut r = 0;
        loop {
            let point = S::from_int(r);
            if !self.f.eval(&point).is_zero() {
                let (one, zero) = (S::one(), S::zero());
                let g = substitute_form(self.f.coeffs(), [&point, &one, &one, &zero], self.form_degree());
                let map = MoebiusMap::new(point, one, S::one(), zero).expect("det = -1");
                return (Self { f: g, genus: self.genus }, map);
            }
            r += 1;
        }
    }

    /// The model `(cX + d)^{2g+2} F((aX + b)/(cX + d))` together with the
    /// ratio of leading coefficients.
    ///
    /// The degree may drop by one (a branch point moves to `∞`) but not more.
    pub fn transform(&self, m: &MoebiusMap<S>) -> Result<(Self, S)> {
        let n = self.form_degree();
        let g = m.pullback_form(&self.f, n)?;
        let degree = g.degree().unwrap_or(0);
        if degree + 1 < n {
            return Err(Error::IllegalCollapse { degree, form_degree: n });
        }
        let lambda = g.lead() / self.f.lead();
        let curve = Self::new(g)?;
        Ok((curve, lambda))
    }

    /// `F` scaled to leading coefficient one.
    pub fn monic_poly(&self) -> Poly<S> {
        self.f.monic()
    }

    pub fn to_quad(&self) -> HyperellipticCurve<QuadExt> {
        HyperellipticCurve { f: self.f.map(|c| c.to_quad()), genus: self.genus }
    }
}

impl HyperellipticCurve<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::ring::Ring;

    type C = HyperellipticCurve<Rational>;
    type M = MoebiusMap<Rational>;

    #[test]
    fn genus_and_validation() {
        assert_eq!(C::from_ints(&[1, 0, 0, 0, 0, 0, 1]).unwrap().genus(), 2);
        let odd = C::from_ints(&[0, -1, 0, 0, 0, 1]).unwrap();
        assert_eq!(odd.genus(), 2);
        assert!(odd.is_odd_degree());
        // (X^2 + 1)^3
        assert_eq!(C::from_ints(&[1, 0, 3, 0, 3, 0, 1]), Err(Error::SingularModel));
        assert_eq!(C::from_ints(&[1, 0, 0, 1]), Err(Error::GenusTooSmall { degree: 3 }));
        assert_eq!(C::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap().genus(), 3);
    }

    #[test]
    fn even_degree_model_of_x5_minus_x() {
        let c = C::from_ints(&[0, -1, 0, 0, 0, 1]).unwrap();
        let (even, map) = c.to_even_degree();
        assert_eq!(map, M::new(rat(2), rat(1), rat(1), rat(0)).unwrap());
        assert_eq!(even.poly().degree(), Some(6));
        assert_eq!(even.poly().lead(), rat(30));
        // X = 2 + 1/Z hits 0, 1, -1, ∞ at Z = -1/2, -1, -1/3, 0
        assert!(even.poly().coeff(0).is_zero());
        assert!(even.poly().eval(&rat(-1)).is_zero());
        assert!(even.poly().eval(&crate::exact::ratio(-1, 2)).is_zero());
    }

    #[test]
    fn even_input_is_unchanged() {
        let c = C::from_ints(&[1, 0, 0, 0, 0, 0, 1]).unwrap();
        let (even, map) = c.to_even_degree();
        assert_eq!(even, c);
        assert!(map.is_identity());
    }

    #[test]
    fn transform_examples() {
        let c = C::from_ints(&[1, 0, 0, 0, 0, 0, 1]).unwrap();
        let (t, lambda) = c.transform(&M::negation()).unwrap();
        assert_eq!(t, c);
        assert_eq!(lambda, rat(1));

        let odd = C::from_ints(&[0, -1, 0, 0, 0, 1]).unwrap();
        let (swapped, _) = odd.transform(&M::inversion()).unwrap();
        assert_eq!(swapped.poly(), &Poly::from_ints(&[0, 1, 0, 0, 0, -1]));
    }

    #[test]
    fn round_trip_up_to_scalar() {
        let c = C::from_ints(&[3, 1, 0, -2, 0, 5, 1]).unwrap();
        let m = M::new(rat(2), rat(-1), rat(1), rat(3)).unwrap();
        let (t, _) = c.transform(&m).unwrap();
        let (back, _) = t.transform(&m.inverse()).unwrap();
        assert_eq!(back.monic_poly(), c.monic_poly());
    }
}
