//! Reduced involutions, even models and the possible orders of further
//! automorphisms.
//!
//! Every involution of the projective line is conjugate to a trace-zero
//! matrix, so the search splits into `X -> -X + β` and
//! `X -> (aX + b)/(X - a)`. The second family is found by eliminating `b`
//! from the coefficient identities `f_n G_k = F(a) f_k` with resultants and
//! solving the resulting polynomial in `a` over `Q` and its quadratic
//! extensions.

use std::collections::BTreeSet;

use crate::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rational};
use crate::moebius::{substitute_form, MoebiusMap, ProjPoint};
use crate::par::{map_collect, Execution};
use crate::poly::{quad_irrational_roots, resultant, roots_in_extension, Poly};
use crate::ring::Ring;

/// A verified reduced involution, normalized to trace zero.
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutionCertificate {
    pub map: MoebiusMap<QuadExt>,
    pub lambda: QuadExt,
    pub fixed_points: (ProjPoint<QuadExt>, ProjPoint<QuadExt>),
    pub fixes_branch_points: bool,
}

/// Outcome of [`detect_involutions`]. When `inconclusive` is set some root
/// could not be certified and `certificates` is only a lower bound;
/// `unrepresentable` counts solutions whose parameters or fixed points leave
/// the quadratic field in use.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct InvolutionSearch {
    pub certificates: Vec<InvolutionCertificate>,
    pub inconclusive: bool,
    pub unrepresentable: usize,
}

/// Coefficients `b_0, ..., b_{g+1}` of `G(X) = Σ b_i X^{2i}` and the map `M`
/// with `G` the pullback of `F` along `M^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenModel {
    pub b: Vec<QuadExt>,
    pub map: MoebiusMap<QuadExt>,
}

impl EvenModel {
    /// The radicand of the field holding `b`, if it is not `Q`.
    pub fn radicand(&self) -> Option<Rational> {
        self.b.iter().find(|x| !x.is_rational()).map(|x| x.radicand().clone())
    }
}

pub fn detect_involutions(curve: &HyperellipticCurve<Rational>) -> Result<InvolutionSearch> {
    detect_involutions_with(curve, Execution::default())
}

pub fn detect_involutions_with(curve: &HyperellipticCurve<Rational>, exec: Execution) -> Result<InvolutionSearch> {
    if curve.is_odd_degree() {
        return Err(Error::NotEvenModel);
    }
    let f = curve.poly();
    let n = curve.form_degree();
    let mut search = InvolutionSearch::default();
    let mut candidates: Vec<MoebiusMap<QuadExt>> = Vec::new();

    // c = 0: matching X^{n-1} forces β
    let beta = -(Rational::from_int(2) * f.coeff(n - 1)) / (Rational::from_int(n as i64) * f.lead());
    candidates.push(
        MoebiusMap::new(-QuadExt::one(), QuadExt::from_rational(beta), QuadExt::zero(), QuadExt::one())
            .expect("det = -1"),
    );

    // c = 1
    let equations = coefficient_equations(f, n);
    match eliminate(&equations) {
        None => search.inconclusive = true,
        Some(r) if r.is_constant() => {}
        Some(r) => {
            let a_roots = match quad_irrational_roots(&r.square_free_part()) {
                Ok(roots) => roots,
                Err(Error::ReconstructionInconclusive { partial }) => {
                    search.inconclusive = true;
                    partial
                }
                Err(e) => return Err(e),
            };
            for a0 in a_roots {
                let (b_roots, missing, complete) = solve_for_b(&equations, &a0)?;
                search.unrepresentable += missing;
                search.inconclusive |= !complete;
                for b0 in b_roots {
                    let det = -(a0.clone() * a0.clone()) - b0.clone();
                    if det.is_zero() {
                        continue;
                    }
                    let map = MoebiusMap::new(a0.clone(), b0, QuadExt::one(), -a0.clone()).expect("nonzero det");
                    if !candidates.contains(&map) {
                        candidates.push(map);
                    }
                }
            }
        }
    }

    let f_quad = f.to_quad();
    let verified = map_collect(&candidates, exec, |m| certify(&f_quad, n, m));
    for outcome in verified {
        match outcome {
            Ok(Some(cert)) => search.certificates.push(cert),
            Ok(None) => {}
            Err(Error::NotRepresentable) => search.unrepresentable += 1,
            Err(e) => return Err(e),
        }
    }
    search.certificates.sort_by(|x, y| compare_maps(&x.map, &y.map));
    Ok(search)
}

fn certify(f: &Poly<QuadExt>, n: usize, map: &MoebiusMap<QuadExt>) -> Result<Option<InvolutionCertificate>> {
    let Some(lambda) = map.is_automorphism(f, n) else {
        return Ok(None);
    };
    let fixed_points = map.fixed_points()?;
    let is_branch = |p: &ProjPoint<QuadExt>| match p {
        ProjPoint::Finite(x) => f.eval(x).is_zero(),
        ProjPoint::Infinity => f.degree() != Some(n),
    };
    let fixes_branch_points = is_branch(&fixed_points.0) || is_branch(&fixed_points.1);
    Ok(Some(InvolutionCertificate { map: map.clone(), lambda, fixed_points, fixes_branch_points }))
}

fn compare_maps(x: &MoebiusMap<QuadExt>, y: &MoebiusMap<QuadExt>) -> std::cmp::Ordering {
    x.entries().iter().zip(y.entries()).map(|(p, q)| p.lex_cmp(q)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

type PolyA = Poly<Rational>;
type PolyAB = Poly<PolyA>;

/// `E_k = f_n coeff_k(G) - f_k F(a)` for `k < n`, where `G` is the pullback of
/// `F` along `(aX + b)/(X - a)`. Outer variable `b`, coefficients in `Q[a]`.
fn coefficient_equations(f: &Poly<Rational>, n: usize) -> Vec<PolyAB> {
    let a = PolyAB::constant(PolyA::x());
    let b = PolyAB::x();
    let one = PolyAB::one();
    let minus_a = -a.clone();
    let lifted: Vec<PolyAB> = f.coeffs().iter().map(|c| PolyAB::constant(PolyA::constant(c.clone()))).collect();
    let g = substitute_form(&lifted, [&a, &b, &one, &minus_a], n);
    let lead = PolyA::constant(f.lead());
    let f_at_a = PolyAB::constant(f.clone());
    (0..n)
        .map(|k| g.coeff(k).scale(&lead) - f_at_a.scale(&PolyA::constant(f.coeff(k))))
        .collect()
}

/// A nonzero polynomial in `a` vanishing at every solution, from the gcd of
/// resultants of a pivot equation against the others.
fn eliminate(equations: &[PolyAB]) -> Option<PolyA> {
    const PAIRS: usize = 3;
    for pivot in (0..equations.len()).rev() {
        let p = &equations[pivot];
        if p.is_zero() {
            continue;
        }
        let mut acc: Option<PolyA> = None;
        let mut used = 0;
        for k in (0..equations.len()).rev() {
            let e = &equations[k];
            if k == pivot || e.is_zero() {
                continue;
            }
            let Ok(r) = resultant(p, e) else { continue };
            if r.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => r.monic(),
                Some(prev) => prev.gcd(&r).expect("nonzero operands"),
            });
            used += 1;
            if used >= PAIRS || acc.as_ref().is_some_and(|x| x.is_constant()) {
                break;
            }
        }
        if acc.is_some() {
            return acc;
        }
    }
    None
}

/// Common roots in `b` of the equations specialized at `a = a0`, the number of
/// roots that could not be represented, and whether the search completed.
fn solve_for_b(equations: &[PolyAB], a0: &QuadExt) -> Result<(Vec<QuadExt>, usize, bool)> {
    let mut h: Option<Poly<QuadExt>> = None;
    for e in equations {
        let specialized: Poly<QuadExt> = e.map(|coeff| coeff.to_quad().eval(a0));
        if specialized.is_zero() {
            continue;
        }
        h = Some(match h {
            None => specialized.monic(),
            Some(prev) => prev.gcd(&specialized)?,
        });
    }
    let Some(h) = h else {
        return Ok((Vec::new(), 0, false));
    };
    if h.is_constant() {
        return Ok((Vec::new(), 0, true));
    }
    let degree = h.square_free_part().degree().unwrap_or(0);
    let found = match h.to_rational() {
        Some(q) => quad_irrational_roots(&q),
        None => roots_in_extension(&h),
    };
    let (mut roots, complete) = match found {
        Ok(r) => (r, true),
        Err(Error::ReconstructionInconclusive { partial }) => (partial, false),
        Err(e) => return Err(e),
    };
    let mut distinct: Vec<QuadExt> = Vec::new();
    for r in roots.drain(..) {
        if !distinct.contains(&r) {
            distinct.push(r);
        }
    }
    let missing = degree.saturating_sub(distinct.len());
    Ok((distinct, missing, complete))
}

/// Conjugates `inv` to `X -> -X` and returns the resulting even model.
pub fn even_model<S: crate::exact::Scalar>(
    curve: &HyperellipticCurve<S>,
    inv: &InvolutionCertificate,
) -> Result<EvenModel> {
    if inv.fixes_branch_points {
        return Err(Error::FixedBranchPoint);
    }
    let (p, q) = match &inv.fixed_points {
        (ProjPoint::Infinity, other) => (other.clone(), ProjPoint::Infinity),
        (first, second) => (first.clone(), second.clone()),
    };
    let ProjPoint::Finite(p) = p else {
        return Err(Error::FixedBranchPoint);
    };
    let map = match q {
        ProjPoint::Infinity => MoebiusMap::new(QuadExt::one(), -p, QuadExt::zero(), QuadExt::one()),
        ProjPoint::Finite(q) => MoebiusMap::new(QuadExt::one(), -p, QuadExt::one(), -q),
    }?;
    let n = curve.form_degree();
    let f = curve.poly().map(|c| c.to_quad());
    let g = map.inverse().pullback_form(&f, n)?;
    for k in (1..=n).step_by(2) {
        if !g.coeff(k).is_zero() {
            return Err(Error::OddTermResidue { degree: k });
        }
    }
    let b: Vec<QuadExt> = (0..=n / 2).map(|i| g.coeff(2 * i)).collect();
    if b[0].is_zero() || b[n / 2].is_zero() {
        return Err(Error::ZeroEndCoefficient);
    }
    Ok(EvenModel { b, map })
}

/// Orders `N > 2` an automorphism of a genus `g` curve outside the locus of
/// curves with an extra involution may have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateOrders {
    pub genus: usize,
    pub orders: BTreeSet<usize>,
}

pub fn candidate_orders(g: usize) -> CandidateOrders {
    let mut orders: BTreeSet<usize> = [3, 4].into_iter().collect();
    for n in 3..=2 * g + 1 {
        if (2 * g + 1).is_multiple_of(n) || ((2 * g).is_multiple_of(n) && n < g) {
            orders.insert(n);
        }
        if (2 * g).is_multiple_of(n) && n % 2 == 0 && (6..=2 * g - 2).contains(&n) {
            orders.insert(n);
        }
    }
    for n_prime in 1..g {
        if g.is_multiple_of(n_prime) {
            orders.insert(4 * n_prime);
        }
    }
    CandidateOrders { genus: g, orders }
}
