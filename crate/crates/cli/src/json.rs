//! Conversions between library values and their JSON form. Scalars are
//! always strings.

use hyperinv::curve::HyperellipticCurve;
use hyperinv::moebius::{MoebiusMap, ProjPoint};
use hyperinv::{Poly, QuadExt, Rational, Ring};
use serde_json::{json, Value};

use crate::report::Failure;

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

pub fn quad(x: &QuadExt) -> Value {
    json!({ "a": x.rational_part().to_string(), "b": x.radical_part().to_string(), "d": x.radicand().to_string() })
}

/// A rational string when possible, otherwise the `{a, b, d}` object.
pub fn scalar(x: &QuadExt) -> Value {
    match x.as_rational() {
        Some(r) => rational(&r),
        None => quad(x),
    }
}

pub fn point(p: &ProjPoint<QuadExt>) -> Value {
    match p {
        ProjPoint::Infinity => Value::String("infinity".into()),
        ProjPoint::Finite(x) => scalar(x),
    }
}

pub fn map(m: &MoebiusMap<QuadExt>) -> Value {
    let [a, b, c, d] = m.entries();
    json!({ "a": scalar(a), "b": scalar(b), "c": scalar(c), "d": scalar(d) })
}

pub fn rational_map(m: &MoebiusMap<Rational>) -> Value {
    let [a, b, c, d] = m.entries();
    json!({ "a": rational(a), "b": rational(b), "c": rational(c), "d": rational(d) })
}

pub fn curve(c: &HyperellipticCurve<Rational>) -> Value {
    json!({ "coefficients": rationals(c.poly().coeffs()) })
}

pub fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse::<Rational>().map_err(|_| Failure::invalid_argument(format!("not a rational number: {s:?}")))
}

pub fn parse_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').map(parse_rational).collect()
}

/// Reads `{"curve": {"coefficients": [...]}}`, or a report whose `result`
/// holds such a curve.
pub fn parse_curve(text: &str) -> Result<HyperellipticCurve<Rational>, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::malformed(e.to_string()))?;
    let curve = value
        .get("curve")
        .or_else(|| value.get("result").and_then(|r| r.get("curve")))
        .ok_or_else(|| Failure::malformed("missing \"curve\" object".into()))?;
    let coeffs = curve
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::malformed("missing \"coefficients\" array".into()))?;
    let coeffs = coeffs
        .iter()
        .map(|c| match c {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_int(n.as_i64().unwrap())),
            other => Err(Failure::malformed(format!("coefficient {other} is not a rational string"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HyperellipticCurve::new(Poly::new(coeffs))?)
}
