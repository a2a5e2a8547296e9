use std::cmp::Ordering;

use num_traits::Signed;

use super::{classify_genus2, dihedral_from_even, locus_eval, GroupLabel, GroupName, LiftFlag};
use crate::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::exact::{split_radicand, QuadExt, Rational};
use crate::moebius::{MoebiusMap, ProjPoint};
use crate::oracle::{label_from_signature, reduced_group_with};
use crate::par::Execution;
use crate::poly::DEFAULT_TOL;
use crate::ring::Ring;
use crate::symmetry::{candidate_orders, detect_involutions_with, even_model, CandidateOrders, EvenModel, InvolutionCertificate};

pub const FLAG_U_ZERO: &str = "u-zero-degenerate";
pub const FLAG_INCONCLUSIVE: &str = "search-inconclusive";
pub const FLAG_ORACLE: &str = "oracle-label";
pub const FLAG_UNREPRESENTABLE: &str = "unrepresentable-involutions";
pub const FLAG_IRRATIONAL: &str = "irrational-invariants-skipped";

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub genus: usize,
    /// Invariants of the selected involution, when the curve has one.
    pub u: Option<Vec<Rational>>,
    pub label: GroupLabel,
    /// Every distinct rational invariant tuple reached from some involution.
    pub fiber: Vec<Vec<Rational>>,
    pub flags: Vec<String>,
    pub involution: Option<InvolutionCertificate>,
    pub even_model: Option<EvenModel>,
    /// Number of reduced involutions found, including those fixing branch points.
    pub involutions: usize,
    pub candidate_orders: Option<CandidateOrders>,
    pub oracle_order: Option<usize>,
}

struct Candidate {
    cert: InvolutionCertificate,
    model: EvenModel,
    u: Vec<QuadExt>,
}

impl Candidate {
    fn rational_u(&self) -> Option<Vec<Rational>> {
        self.u.iter().map(|x| x.as_rational()).collect()
    }

    fn fixed_point_radicand(&self) -> Option<Rational> {
        let (p, q) = &self.cert.fixed_points;
        [p, q].into_iter().find_map(|x| match x {
            ProjPoint::Finite(v) if !v.is_rational() => Some(v.radicand().clone()),
            _ => None,
        })
    }
}

/// The involution an even model is built from, with its invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct Selection {
    pub genus: usize,
    /// `None` when the curve has no reduced involution usable for an even model.
    pub u: Option<Vec<Rational>>,
    pub fiber: Vec<Vec<Rational>>,
    pub flags: Vec<String>,
    pub involution: Option<InvolutionCertificate>,
    pub even_model: Option<EvenModel>,
    pub involutions: usize,
}

pub fn select_involution(curve: &HyperellipticCurve<Rational>) -> Result<Selection> {
    select_involution_with(curve, Execution::default())
}

pub fn select_involution_with(curve: &HyperellipticCurve<Rational>, exec: Execution) -> Result<Selection> {
    let (even, _) = curve.to_even_degree();
    let search = detect_involutions_with(&even, exec)?;
    let mut flags = Vec::new();
    if search.unrepresentable > 0 {
        flags.push(FLAG_UNREPRESENTABLE.to_string());
    }

    let mut candidates = Vec::new();
    for cert in search.certificates.iter().filter(|c| !c.fixes_branch_points) {
        let model = even_model(&even, cert)?;
        let mut u = dihedral_from_even(&model.b)?;
        canonicalize_sign(&mut u);
        candidates.push(Candidate { cert: cert.clone(), model, u });
    }
    if candidates.is_empty() && search.inconclusive {
        return Err(Error::SearchInconclusive { reason: "unverified roots and no usable involution".into() });
    }
    if search.inconclusive {
        flags.push(FLAG_INCONCLUSIVE.to_string());
    }
    let mut selection = Selection {
        genus: curve.genus(),
        u: None,
        fiber: Vec::new(),
        flags,
        involution: None,
        even_model: None,
        involutions: search.certificates.len(),
    };
    if candidates.is_empty() {
        return Ok(selection);
    }

    let mut fiber: Vec<Vec<Rational>> = candidates.iter().filter_map(Candidate::rational_u).collect();
    fiber.sort_by(|x, y| lex(x, y));
    fiber.dedup();
    if fiber.len() < candidates.len() && candidates.iter().any(|c| c.rational_u().is_none()) {
        selection.flags.push(FLAG_IRRATIONAL.to_string());
    }

    let chosen = select(candidates);
    let u = chosen.rational_u().ok_or(Error::IrrationalInvariants)?;
    if u.iter().all(|x| x.is_zero()) {
        selection.flags.push(FLAG_U_ZERO.to_string());
    }
    selection.u = Some(u);
    selection.fiber = fiber;
    selection.involution = Some(chosen.cert);
    selection.even_model = Some(chosen.model);
    Ok(selection)
}

pub fn classify(curve: &HyperellipticCurve<Rational>) -> Result<Classification> {
    classify_with(curve, Execution::default())
}

pub fn classify_with(curve: &HyperellipticCurve<Rational>, exec: Execution) -> Result<Classification> {
    let Selection { genus: g, u, fiber, flags, involution, even_model, involutions } =
        select_involution_with(curve, exec)?;
    let mut classification = Classification {
        genus: g,
        u: None,
        label: GroupLabel::new(GroupName::Z2),
        fiber,
        flags,
        involution,
        even_model,
        involutions,
        candidate_orders: None,
        oracle_order: None,
    };

    let Some(u) = u else {
        let group = reduced_group_with(curve, DEFAULT_TOL, exec)?;
        classification.oracle_order = Some(group.order);
        classification.flags.push(FLAG_ORACLE.to_string());
        classification.label = label_from_signature(g, &group)?;
        if g != 2 {
            classification.candidate_orders = Some(candidate_orders(g));
        }
        return Ok(classification);
    };

    classification.label = if g == 2 {
        classify_genus2(&u)?
    } else {
        let (minus, plus) = locus_eval(&u);
        let lift_flag = if minus.is_zero() {
            Some(LiftFlag::InvolutionLift)
        } else if plus.is_zero() {
            Some(LiftFlag::Order4Lift)
        } else {
            None
        };
        let reduced_order = if lift_flag.is_some() { None } else { Some(2) };
        GroupLabel { name: GroupName::V4, reduced_order, lift_flag }
    };
    classification.u = Some(u);
    Ok(classification)
}

/// On the plus locus in odd genus `u` and `(u_1, ..., -u_g)` describe the same
/// class; keep the one whose `u_g` has non-negative rational part.
fn canonicalize_sign(u: &mut [QuadExt]) {
    let g = u.len();
    if g.is_multiple_of(2) {
        return;
    }
    let (_, plus) = locus_eval(u);
    if plus.is_zero() && u[g - 1].rational_part().is_negative() {
        u[g - 1] = -u[g - 1].clone();
    }
}

fn lex(x: &[Rational], y: &[Rational]) -> Ordering {
    x.iter().zip(y).map(|(a, b)| a.cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn lex_quad(x: &[QuadExt], y: &[QuadExt]) -> Ordering {
    x.iter().zip(y).map(|(a, b)| a.lex_cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// Squarefree core of the radicand, `0` for rational data.
fn field_key(radicand: Option<Rational>) -> (u8, num_bigint::BigInt, num_bigint::BigInt) {
    match radicand {
        None => (0, 0.into(), 0.into()),
        Some(d) => {
            let (_, core) = split_radicand(&d);
            (1, core.abs(), core)
        }
    }
}

/// Prefers `X -> -X`; otherwise rational invariants, rational fixed points,
/// the smallest field, and finally the lexicographically least tuple.
fn select(mut candidates: Vec<Candidate>) -> Candidate {
    let negation = MoebiusMap::<QuadExt>::negation();
    if let Some(i) = candidates.iter().position(|c| c.cert.map == negation) {
        return candidates.swap_remove(i);
    }
    candidates.sort_by(|x, y| {
        let rx = x.rational_u().is_none();
        let ry = y.rational_u().is_none();
        rx.cmp(&ry)
            .then_with(|| field_key(x.fixed_point_radicand()).cmp(&field_key(y.fixed_point_radicand())))
            .then_with(|| lex_quad(&x.u, &y.u))
    });
    candidates.swap_remove(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn run(c: &[i64]) -> Classification {
        classify(&HyperellipticCurve::from_ints(c).unwrap()).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn x6_plus_1() {
        let c = run(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(c.u, Some(v(&[0, 0])));
        assert_eq!(c.label.name, GroupName::Z3xD8);
        assert!(c.flags.contains(&FLAG_U_ZERO.to_string()));
        assert_eq!(c.fiber, vec![v(&[0, 0]), v(&[6750, 450])]);
    }

    #[test]
    fn normal_form_15_15() {
        let c = run(&[1, 0, 15, 0, 15, 0, 1]);
        assert_eq!(c.u, Some(v(&[6750, 450])));
        assert_eq!(c.label.name, GroupName::Z3xD8);
    }

    #[test]
    fn normal_form_minus_5() {
        let c = run(&[1, 0, -5, 0, -5, 0, 1]);
        assert_eq!(c.u, Some(v(&[-250, 50])));
        assert_eq!(c.label.name, GroupName::Gl23);
    }

    #[test]
    fn x5_minus_x_goes_through_sqrt2() {
        let c = run(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(c.u, Some(v(&[-250, 50])));
        assert_eq!(c.label.name, GroupName::Gl23);
        assert_eq!(c.even_model.unwrap().radicand(), Some(rat(2)));
    }

    #[test]
    fn x6_minus_x_is_z10() {
        let c = run(&[0, -1, 0, 0, 0, 0, 1]);
        assert_eq!(c.u, None);
        assert_eq!(c.involutions, 0);
        assert_eq!(c.oracle_order, Some(5));
        assert_eq!(c.label.name, GroupName::Z10);
    }

    #[test]
    fn cubic_palindrome_is_d12() {
        let c = run(&[1, 0, 0, 4, 0, 0, 1]);
        let u = c.u.unwrap();
        let (u1, u2) = (&u[0], &u[1]);
        assert!((u2 * u2 - rat(220) * u2 - rat(16) * u1 + rat(4500)).is_zero());
        assert_eq!(c.label.name, GroupName::D12);
        assert!(c.even_model.unwrap().b.iter().all(|x| x.is_rational()));
    }

    #[test]
    fn genus3_lift_flags() {
        // a_1 = a_3 puts u on the minus factor
        let c = run(&[1, 0, 2, 0, 5, 0, 2, 0, 1]);
        assert_eq!(c.label.name, GroupName::V4);
        assert_eq!(c.label.lift_flag, Some(LiftFlag::InvolutionLift));
        let generic = run(&[1, 0, 2, 0, 5, 0, 3, 0, 1]);
        assert_eq!(generic.label.lift_flag, None);
        assert_eq!(generic.label.reduced_order, Some(2));
    }

    #[test]
    fn generic_genus3_gets_candidate_orders() {
        let c = run(&[1, 1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(c.label.name, GroupName::Z2);
        assert!(c.candidate_orders.is_some());
    }
}
