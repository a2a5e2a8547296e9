use hyperinv::invariants::{classify, locus_eval, select_involution, Classification};
use hyperinv::moduli::rational_model;
use hyperinv::moebius::MoebiusMap;
use hyperinv::oracle::{label_from_signature, reduced_group};
use hyperinv::symmetry::{candidate_orders, InvolutionCertificate};
use hyperinv::{Error, Rational};
use serde_json::{json, Value};

use crate::json;
use crate::report::Failure;
use crate::Command;

pub const FLAG_NO_INVOLUTION: &str = "no-usable-involution";
pub const FLAG_UNKNOWN_SIGNATURE: &str = "unknown-signature";

type Outcome = Result<(Value, Vec<String>), Failure>;

pub fn run(command: &Command, input: Option<&str>) -> Outcome {
    let curve = || json::parse_curve(input.unwrap_or_default());
    match command {
        Command::Classify { .. } => classify_cmd(&classify(&curve()?)?),
        Command::Invariants { .. } => invariants_cmd(&curve()?),
        Command::NormalForm { .. } => normal_form_cmd(&curve()?),
        Command::RationalModel { genus, u } => rational_model_cmd(*genus, u),
        Command::CheckMap { map, .. } => check_map_cmd(&curve()?, map),
        Command::Oracle { tol, .. } => oracle_cmd(&curve()?, *tol),
        Command::Candidates { genus } => candidates_cmd(*genus),
    }
}

fn locus(u: &[Rational]) -> Value {
    let (minus, plus) = locus_eval(u);
    json!({ "minus": json::rational(&minus), "plus": json::rational(&plus) })
}

fn certificate(c: &InvolutionCertificate) -> Value {
    json!({
        "map": json::map(&c.map),
        "lambda": json::scalar(&c.lambda),
        "fixed_points": [json::point(&c.fixed_points.0), json::point(&c.fixed_points.1)],
    })
}

fn classify_cmd(c: &Classification) -> Outcome {
    let result = json!({
        "genus": c.genus,
        "group": c.label.name.to_string(),
        "reduced_order": c.label.reduced_order,
        "order": c.label.order(),
        "lift_flag": c.label.lift_flag.map(|f| f.to_string()),
        "u": c.u.as_deref().map(json::rationals),
        "locus": c.u.as_deref().map(locus),
        "fiber": c.fiber.iter().map(|u| json::rationals(u)).collect::<Vec<_>>(),
        "involutions": c.involutions,
        "involution": c.involution.as_ref().map(certificate),
        "candidate_orders": c.candidate_orders.as_ref().map(|o| o.orders.iter().copied().collect::<Vec<_>>()),
        "oracle_order": c.oracle_order,
    });
    Ok((result, c.flags.clone()))
}

fn invariants_cmd(curve: &hyperinv::curve::HyperellipticCurve<Rational>) -> Outcome {
    let s = select_involution(curve)?;
    let mut flags = s.flags;
    if s.u.is_none() {
        flags.push(FLAG_NO_INVOLUTION.into());
    }
    let result = json!({
        "genus": s.genus,
        "u": s.u.as_deref().map(json::rationals),
        "locus": s.u.as_deref().map(locus),
    });
    Ok((result, flags))
}

fn normal_form_cmd(curve: &hyperinv::curve::HyperellipticCurve<Rational>) -> Outcome {
    let (even, to_even) = curve.to_even_degree();
    let s = select_involution(curve)?;
    let mut flags = s.flags;
    let model = match &s.even_model {
        Some(m) => json!({
            "b": m.b.iter().map(json::scalar).collect::<Vec<_>>(),
            "radicand": m.radicand().as_ref().map(json::rational),
            "map": json::map(&m.map),
        }),
        None => {
            flags.push(FLAG_NO_INVOLUTION.into());
            Value::Null
        }
    };
    let result = json!({
        "genus": s.genus,
        "even_degree": { "curve": json::curve(&even), "map": json::rational_map(&to_even) },
        "involution": s.involution.as_ref().map(certificate),
        "even_model": model,
        "u": s.u.as_deref().map(json::rationals),
    });
    Ok((result, flags))
}

fn rational_model_cmd(genus: usize, u: &str) -> Outcome {
    let u = json::parse_list(u)?;
    if u.len() != genus {
        return Err(Error::LengthMismatch { expected: genus, actual: u.len() }.into());
    }
    let r = rational_model(&u)?;
    let result = json!({
        "genus": genus,
        "curve": json::curve(&r.curve),
        "b": json::rationals(&r.b),
        "branch": r.branch.to_string(),
        "verified": r.verified,
    });
    Ok((result, Vec::new()))
}

fn check_map_cmd(curve: &hyperinv::curve::HyperellipticCurve<Rational>, map: &str) -> Outcome {
    let entries = json::parse_list(map)?;
    let [a, b, c, d]: [Rational; 4] = entries
        .try_into()
        .map_err(|v: Vec<Rational>| Failure::invalid_argument(format!("--map needs 4 entries, got {}", v.len())))?;
    let m = MoebiusMap::new(a, b, c, d)?;
    let n = curve.form_degree();
    let lambda = m.is_automorphism(curve.poly(), n);
    let fixed = match m.fixed_points() {
        Ok((p, q)) => json!([json::point(&p), json::point(&q)]),
        Err(Error::IdentityMap) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let (image, _) = curve.transform(&m)?;
    let result = json!({
        "map": json::rational_map(&m),
        "is_automorphism": lambda.is_some(),
        "lambda": lambda.as_ref().map(json::rational),
        "order": m.order(4 * curve.genus() + 4),
        "fixed_points": fixed,
        "image": json::curve(&image),
    });
    Ok((result, Vec::new()))
}

fn oracle_cmd(curve: &hyperinv::curve::HyperellipticCurve<Rational>, tol: f64) -> Outcome {
    let group = reduced_group(curve, tol)?;
    let mut flags = Vec::new();
    let label = match label_from_signature(curve.genus(), &group) {
        Ok(l) => Some(l.name.to_string()),
        Err(Error::UnknownSignature { .. }) => {
            flags.push(FLAG_UNKNOWN_SIGNATURE.into());
            None
        }
        Err(e) => return Err(e.into()),
    };
    let result = json!({
        "reduced_order": group.order,
        "element_orders": group.element_orders,
        "label": label,
        "involutions": group.involutions().len(),
        "klein_subgroup": group.has_klein_subgroup(),
    });
    Ok((result, flags))
}

fn candidates_cmd(genus: usize) -> Outcome {
    if genus < 2 {
        return Err(Failure::invalid_argument(format!("genus must be at least 2, got {genus}")));
    }
    let c = candidate_orders(genus);
    Ok((json!({ "genus": c.genus, "orders": c.orders.iter().copied().collect::<Vec<_>>() }), Vec::new()))
}
