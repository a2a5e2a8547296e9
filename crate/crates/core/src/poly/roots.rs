//! Exact root extraction: rational roots by Descartes bisection, quadratic
//! irrationalities by numerically guided, exactly certified factor search.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Signed;

use super::numeric::{complex_roots, to_f64_coeffs, DEFAULT_MAX_ITERATIONS};
use super::Poly;
use crate::error::{Error, Result};
use crate::exact::{split_radicand, QuadExt, Rational};
use crate::ring::Ring;

/// Integer coefficients with content 1 and positive leading coefficient
/// spanning the same rational multiple of `p`.
pub fn primitive_integer_model(p: &Poly<Rational>) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    for c in ints.iter_mut() {
        *c = &*c / &content * &sign;
    }
    ints
}

fn int_poly(ints: &[BigInt]) -> Poly<Rational> {
    Poly::new(ints.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0;
    let mut count = 0;
    for x in c {
        let s = if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// `c(x + 1)`.
fn taylor_shift_one(c: &[BigInt]) -> Vec<BigInt> {
    let mut a = c.to_vec();
    let n = a.len().saturating_sub(1);
    for i in 0..n {
        for j in (i..n).rev() {
            let next = a[j + 1].clone();
            a[j] += next;
        }
    }
    a
}

/// Upper bound on the number of roots in (0, 1).
fn descartes_bound(c: &[BigInt]) -> usize {
    let reversed: Vec<BigInt> = c.iter().rev().cloned().collect();
    sign_variations(&taylor_shift_one(&reversed))
}

/// `2^n c(x/2)`, the left half of the unit interval rescaled to (0, 1).
fn left_half(c: &[BigInt]) -> Vec<BigInt> {
    let n = c.len() - 1;
    c.iter().enumerate().map(|(i, x)| x << (n - i)).collect()
}

enum Isolated {
    Exact(Rational),
    Interval { poly: Vec<BigInt>, lo: Rational, hi: Rational },
}

fn isolate(mut c: Vec<BigInt>, lo: Rational, hi: Rational, out: &mut Vec<Isolated>) {
    if c[0].is_zero() {
        out.push(Isolated::Exact(lo.clone()));
        c.remove(0);
    }
    if c.len() < 2 {
        return;
    }
    match descartes_bound(&c) {
        0 => {}
        1 => out.push(Isolated::Interval { poly: c, lo, hi }),
        _ => {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            let left = left_half(&c);
            let right = taylor_shift_one(&left);
            isolate(left, lo, mid.clone(), out);
            isolate(right, mid, hi, out);
        }
    }
}

/// Roots in (0, inf) of a square-free integer polynomial with `c[0] != 0`.
fn positive_roots(c: &[BigInt], lead: &BigInt) -> Vec<Rational> {
    let n = c.len() - 1;
    let max_bits = c[..n].iter().map(|x| x.bits()).max().unwrap_or(0);
    let k = (max_bits + 2).saturating_sub(c[n].bits()) + 1;
    // c(2^k x) has all its positive roots in (0, 1)
    let scaled: Vec<BigInt> = c.iter().enumerate().map(|(i, x)| x << (k as usize * i)).collect();
    let mut isolated = Vec::new();
    isolate(scaled, Rational::zero(), Rational::from_integer(BigInt::one() << k as usize), &mut isolated);

    let poly = int_poly(c);
    let mut roots = Vec::new();
    for item in isolated {
        match item {
            Isolated::Exact(r) => roots.push(r),
            Isolated::Interval { poly: mut poly_scaled, mut lo, mut hi } => {
                // candidates m/lead with lo < m/lead < hi
                let two = Rational::from_integer(2.into());
                let lead_q = Rational::from_integer(lead.clone());
                loop {
                    if (&hi - &lo) * &lead_q < two {
                        break;
                    }
                    let mid = (&lo + &hi) / &two;
                    let left = left_half(&poly_scaled);
                    let right = taylor_shift_one(&left);
                    if right[0].is_zero() {
                        roots.push(mid.clone());
                        lo = hi.clone();
                        break;
                    }
                    if descartes_bound(&left) == 1 {
                        poly_scaled = left;
                        hi = mid;
                    } else {
                        poly_scaled = right;
                        lo = mid;
                    }
                }
                if lo < hi {
                    let start = (&lo * &lead_q).floor().to_integer();
                    let end = (&hi * &lead_q).ceil().to_integer();
                    let mut m = start;
                    while m <= end {
                        let candidate = Rational::new(m.clone(), lead.clone());
                        if candidate > lo && candidate < hi && poly.eval(&candidate).is_zero() {
                            roots.push(candidate);
                        }
                        m += 1;
                    }
                }
            }
        }
    }
    roots
}

/// All rational roots of `p`, with multiplicity, in increasing order.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = int_poly(&primitive_integer_model(p)).square_free_part();
    let mut ints = primitive_integer_model(&sf);
    let mut distinct = Vec::new();
    if ints[0].is_zero() {
        distinct.push(Rational::zero());
        ints.remove(0);
    }
    if ints.len() >= 2 {
        let lead = ints.last().unwrap().clone();
        distinct.extend(positive_roots(&ints, &lead));
        let mirrored: Vec<BigInt> =
            ints.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
        let mirrored_lead = mirrored.last().unwrap().abs();
        distinct.extend(positive_roots(&mirrored, &mirrored_lead).into_iter().map(|r| -r));
    }
    distinct.sort();
    let mut roots = Vec::new();
    for r in distinct {
        let factor = Poly::new(vec![-r.clone(), Rational::one()]);
        let mut rest = p.clone();
        while let Ok((q, rem)) = rest.divrem(&factor) {
            if !rem.is_zero() {
                break;
            }
            roots.push(r.clone());
            rest = q;
        }
    }
    roots
}

/// Removes every rational root factor, returning the remaining cofactor.
fn strip_rational_roots(p: &Poly<Rational>, roots: &[Rational]) -> Poly<Rational> {
    let mut rest = p.clone();
    for r in roots {
        let factor = Poly::new(vec![-r.clone(), Rational::one()]);
        rest = rest.divrem(&factor).expect("nonzero divisor").0;
    }
    rest
}

/// Roots of `X^2 - tX + n` over `Q(sqrt(t^2 - 4n))`.
fn quadratic_pair(t: &Rational, n: &Rational) -> [QuadExt; 2] {
    let two = Rational::from_integer(2.into());
    let disc = t * t - n * Rational::from_integer(4.into());
    let (coef, m) = split_radicand(&disc);
    let m = Rational::from_integer(m);
    let half = coef / &two;
    [
        QuadExt::new(t / &two, half.clone(), m.clone()),
        QuadExt::new(t / &two, -half, m),
    ]
}

/// Fixed point complex number `(re + i im) / 2^bits`.
#[derive(Clone, Debug)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

impl Fixed {
    fn from_f64(z: Complex64, bits: usize) -> Option<Self> {
        let scale = BigInt::one() << bits;
        let re = Rational::from_float(z.re)? * Rational::from_integer(scale.clone());
        let im = Rational::from_float(z.im)? * Rational::from_integer(scale);
        Some(Self { re: re.round().to_integer(), im: im.round().to_integer() })
    }

    fn add(&self, o: &Self) -> Self {
        Self { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Self, bits: usize) -> Self {
        Self {
            re: (&self.re * &o.re - &self.im * &o.im) >> bits,
            im: (&self.re * &o.im + &self.im * &o.re) >> bits,
        }
    }

    fn div(&self, o: &Self, bits: usize) -> Option<Self> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << bits;
        let im = (&self.im * &o.re - &self.re * &o.im) << bits;
        Some(Self { re: re / &den, im: im / den })
    }

    fn max_abs(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

/// Newton refinement of approximate roots to `target` bits past the binary
/// point, using `bits` bit fixed point arithmetic.
fn polish(ints: &[BigInt], start: &[Complex64], bits: usize, target: usize) -> Option<Vec<Fixed>> {
    let coeffs: Vec<BigInt> = ints.iter().map(|c| c << bits).collect();
    let dcoeffs: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| (c * BigInt::from(i)) << bits).collect();
    let tolerance = BigInt::one() << (bits - target);
    let zero = Fixed { re: BigInt::zero(), im: BigInt::zero() };
    let horner = |cs: &[BigInt], z: &Fixed| {
        cs.iter().rev().fold(zero.clone(), |acc, c| {
            let mut v = acc.mul(z, bits);
            v.re += c;
            v
        })
    };
    let mut out = Vec::with_capacity(start.len());
    for z0 in start {
        let mut z = Fixed::from_f64(*z0, bits)?;
        let mut converged = false;
        for _ in 0..80 {
            let p = horner(&coeffs, &z);
            let dp = horner(&dcoeffs, &z);
            let step = p.div(&dp, bits)?;
            z = z.sub(&step);
            if step.max_abs() <= tolerance {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }
        out.push(z);
    }
    Some(out)
}

/// `(trace, norm)` pairs; the error side keeps those certified before a failure.
type Factors = std::result::Result<Vec<(Rational, Rational)>, Vec<(Rational, Rational)>>;

/// Quadratic factors `X^2 - tX + n` of a square-free primitive integer
/// polynomial without rational roots, found from pairs of numeric roots.
fn certified_quadratic_factors(ints: &[BigInt]) -> Factors {
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    let poly = int_poly(ints);
    let coeffs: Vec<Complex64> = to_f64_coeffs(ints).into_iter().map(|c| Complex64::new(c, 0.0)).collect();
    let Ok(approx) = complex_roots(&coeffs, DEFAULT_MAX_ITERATIONS) else {
        return Err(Vec::new());
    };

    let root_bits = {
        let max_bits = ints[..n].iter().map(|x| x.bits()).max().unwrap_or(0);
        (max_bits + 2).saturating_sub(ints[n].bits()) as usize + 1
    };
    // L * t and L * n must be resolved to 2^-48
    let target = lead.bits() as usize + 2 * root_bits + 64;
    let bits = 2 * target + n * (root_bits + 1) + 64;
    let Some(roots) = polish(ints, &approx, bits, target) else {
        return Err(Vec::new());
    };
    let separation = BigInt::one() << (bits - target + 8);
    for i in 0..n {
        for j in i + 1..n {
            if roots[i].sub(&roots[j]).max_abs() <= separation {
                // Newton collapsed two starting points onto one root
                return Err(Vec::new());
            }
        }
    }

    let unit = BigInt::one() << bits;
    let slack = BigInt::one() << (bits - 40);
    let near_integer = |scaled: &BigInt| -> Option<BigInt> {
        let (q, r) = scaled.div_mod_floor(&unit);
        if r <= slack {
            Some(q)
        } else if &unit - &r <= slack {
            Some(q + 1)
        } else {
            None
        }
    };

    let mut found: Vec<(Rational, Rational)> = Vec::new();
    let mut failed = false;
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        for j in i + 1..n {
            if used[j] {
                continue;
            }
            let t = roots[i].add(&roots[j]);
            let m = roots[i].mul(&roots[j], bits);
            let (lt_im, lm_im) = (&t.im * &lead, &m.im * &lead);
            if lt_im.abs() > slack || lm_im.abs() > slack {
                continue;
            }
            let (Some(tt), Some(nn)) = (near_integer(&(&t.re * &lead)), near_integer(&(&m.re * &lead))) else {
                continue;
            };
            let trace = Rational::new(tt, lead.clone());
            let norm = Rational::new(nn, lead.clone());
            let factor = Poly::new(vec![norm.clone(), -trace.clone(), Rational::one()]);
            match poly.divrem(&factor) {
                Ok((_, rem)) if rem.is_zero() => {
                    used[i] = true;
                    used[j] = true;
                    found.push((trace, norm));
                    break;
                }
                _ => failed = true,
            }
        }
    }
    if failed {
        Err(found)
    } else {
        Ok(found)
    }
}

/// Every root of `p` lying in `Q` or in a quadratic extension of `Q`, with
/// multiplicity. Rational roots come first, in increasing order.
///
/// Irrational candidates are discovered numerically and kept only when the
/// corresponding rational quadratic divides `p` exactly. A numeric candidate
/// that cannot be certified yields [`Error::ReconstructionInconclusive`]
/// carrying the roots certified so far.
pub fn quad_irrational_roots(p: &Poly<Rational>) -> Result<Vec<QuadExt>> {
    let rational = rational_roots(p);
    let mut roots: Vec<QuadExt> = rational.iter().cloned().map(QuadExt::from_rational).collect();
    let rest = strip_rational_roots(p, &rational);
    if rest.degree().unwrap_or(0) < 2 {
        return Ok(roots);
    }
    let sf = rest.square_free_part();
    let ints = primitive_integer_model(&sf);

    let (factors, complete) = if ints.len() == 3 {
        let lead = Rational::from_integer(ints[2].clone());
        let t = -Rational::from_integer(ints[1].clone()) / &lead;
        let n = Rational::from_integer(ints[0].clone()) / &lead;
        (vec![(t, n)], true)
    } else {
        match certified_quadratic_factors(&ints) {
            Ok(found) => (found, true),
            Err(found) => (found, false),
        }
    };

    for (t, n) in factors {
        let factor = Poly::new(vec![n.clone(), -t.clone(), Rational::one()]);
        let mut multiplicity = 0;
        let mut cofactor = rest.clone();
        while let Ok((q, rem)) = cofactor.divrem(&factor) {
            if !rem.is_zero() {
                break;
            }
            multiplicity += 1;
            cofactor = q;
        }
        for r in quadratic_pair(&t, &n) {
            roots.extend(std::iter::repeat_n(r, multiplicity));
        }
    }
    if complete {
        Ok(roots)
    } else {
        Err(Error::ReconstructionInconclusive { partial: roots })
    }
}

/// Roots of `p` lying in the field generated by its coefficients.
///
/// For rational `p` that field is taken to be any quadratic extension, so
/// this agrees with [`quad_irrational_roots`]. Otherwise the roots are
/// recovered from the rational norm polynomial `p * conj(p)` and filtered to
/// the extension of `p`.
pub fn roots_in_extension(p: &Poly<QuadExt>) -> Result<Vec<QuadExt>> {
    if let Some(rational) = p.to_rational() {
        return quad_irrational_roots(&rational);
    }
    let d = p
        .coeffs()
        .iter()
        .find(|c| !c.is_rational())
        .map(|c| c.radicand().clone())
        .expect("irrational coefficient");
    let norm = (p.clone() * p.conj()).to_rational().expect("norm polynomial is rational");
    let (candidates, complete) = match quad_irrational_roots(&norm) {
        Ok(r) => (r, true),
        Err(Error::ReconstructionInconclusive { partial }) => (partial, false),
        Err(e) => return Err(e),
    };
    let mut distinct: Vec<QuadExt> = Vec::new();
    for c in candidates {
        let Some(c) = c.rebase(&d) else { continue };
        if !distinct.contains(&c) && p.eval(&c).is_zero() {
            distinct.push(c);
        }
    }
    let mut roots = Vec::new();
    for r in distinct {
        let factor = Poly::new(vec![-r.clone(), QuadExt::one()]);
        let mut rest = p.clone();
        while let Ok((q, rem)) = rest.divrem(&factor) {
            if !rem.is_zero() {
                break;
            }
            roots.push(r.clone());
            rest = q;
        }
    }
    if complete {
        Ok(roots)
    } else {
        Err(Error::ReconstructionInconclusive { partial: roots })
    }
}
