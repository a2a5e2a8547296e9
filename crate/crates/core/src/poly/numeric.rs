//! Floating point root finding (Aberth–Ehrlich simultaneous iteration).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exact::Rational;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: usize = 200;

/// Converts integer coefficients to `f64`, dividing all of them by a common
/// power of two when they would overflow.
pub(crate) fn to_f64_coeffs(ints: &[BigInt]) -> Vec<f64> {
    let max_bits = ints.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = max_bits.saturating_sub(900);
    ints.iter().map(|c| (c >> shift).to_f64().unwrap_or(0.0)).collect()
}

/// All complex roots of `p`, with multiplicity.
///
/// Exact zero roots are split off first. The remaining roots come from
/// Aberth iteration followed by Newton polishing and are accepted only if
/// `|p(r)| <= tol * sum |c_i| |r|^i`.
pub fn numeric_roots(p: &Poly<Rational>, tol: f64) -> Result<Vec<Complex64>> {
    let ints = super::primitive_integer_model(p);
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    let coeffs: Vec<Complex64> =
        to_f64_coeffs(&ints[zeros..]).into_iter().map(|c| Complex64::new(c, 0.0)).collect();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    roots.extend(complex_roots(&coeffs, DEFAULT_MAX_ITERATIONS)?);
    for r in &roots[zeros..] {
        let (value, scale) = eval_with_scale(&coeffs, *r);
        if value.norm() > tol * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::NonConvergence { iterations: DEFAULT_MAX_ITERATIONS });
        }
    }
    Ok(roots)
}

fn eval_with_scale(coeffs: &[Complex64], z: Complex64) -> (Complex64, f64) {
    let mut value = Complex64::zero();
    let mut scale = 0.0;
    let r = z.norm();
    for c in coeffs.iter().rev() {
        value = value * z + c;
        scale = scale * r + c.norm();
    }
    (value, scale)
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Roots of a polynomial with complex coefficients (ascending order, nonzero
/// leading coefficient). Deterministic for a given input.
pub(crate) fn complex_roots(coeffs: &[Complex64], max_iterations: usize) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok(vec![-monic[0]]);
    }

    // Fujiwara-style radius for the starting circle
    let radius = (0..n)
        .map(|i| monic[i].norm().powf(1.0 / (n - i) as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..max_iterations {
        let mut max_step = 0.0_f64;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(&monic, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let diff = z[k] - z[j];
                    if diff.norm() == 0.0 {
                        Complex64::zero()
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged && z.iter().any(|r| !r.is_finite()) {
        return Err(Error::NonConvergence { iterations: max_iterations });
    }
    // Newton polish; Aberth may stall a few ulps short of the best value
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&monic, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *r - p / dp;
            if !next.is_finite() {
                break;
            }
            let (pn, _) = eval_with_derivative(&monic, next);
            if pn.norm() <= p.norm() {
                *r = next;
            } else {
                break;
            }
        }
    }
    if !converged {
        // accept only if the residual test below passes at a generous level
        let ok = z.iter().all(|r| {
            let (value, scale) = eval_with_scale(&monic, *r);
            value.norm() <= 1e-6 * scale
        });
        if !ok {
            return Err(Error::NonConvergence { iterations: max_iterations });
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(c)
    }

    fn contains(roots: &[Complex64], target: Complex64, tol: f64) -> bool {
        roots.iter().any(|r| (r - target).norm() < tol)
    }

    #[test]
    fn unit_imaginary_pair() {
        let roots = numeric_roots(&p(&[1, 0, 1]), 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots, Complex64::i(), 1e-12));
        assert!(contains(&roots, -Complex64::i(), 1e-12));
    }

    #[test]
    fn odd_twelfth_roots_of_unity() {
        let roots = numeric_roots(&p(&[1, 0, 0, 0, 0, 0, 1]), DEFAULT_TOL).unwrap();
        assert_eq!(roots.len(), 6);
        for k in 0..6 {
            let expected = Complex64::from_polar(1.0, std::f64::consts::PI * (2 * k + 1) as f64 / 6.0);
            assert!(contains(&roots, expected, 1e-12), "missing root {expected}");
        }
    }

    #[test]
    fn zero_and_fifth_roots_of_unity() {
        let roots = numeric_roots(&p(&[0, -1, 0, 0, 0, 0, 1]), DEFAULT_TOL).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&Complex64::new(0.0, 0.0)));
        for k in 0..5 {
            let expected = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 5.0);
            assert!(contains(&roots, expected, 1e-12));
        }
    }

    #[test]
    fn deterministic() {
        let f = p(&[3, -7, 2, 0, 11, 5, -1]);
        assert_eq!(numeric_roots(&f, DEFAULT_TOL).unwrap(), numeric_roots(&f, DEFAULT_TOL).unwrap());
    }
}
