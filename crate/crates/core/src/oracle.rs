//! Floating point computation of the reduced automorphism group as the set
//! of Möbius maps permuting the numerically computed branch points.

use std::collections::HashSet;

use num_complex::Complex64;
use num_integer::Integer;

use crate::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariants::{GroupLabel, GroupName};
use crate::par::{map_collect, Execution};
use crate::poly::numeric_roots;

type Point = [Complex64; 2];

const INFINITY: Point = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];

/// A complex 2x2 matrix acting on homogeneous coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericMap {
    pub m: [[Complex64; 2]; 2],
}

impl NumericMap {
    fn apply(&self, p: &Point) -> Point {
        [self.m[0][0] * p[0] + self.m[0][1] * p[1], self.m[1][0] * p[0] + self.m[1][1] * p[1]]
    }

    fn mul(&self, o: &Self) -> Self {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    fn inverse(&self) -> Self {
        let m = &self.m;
        Self { m: [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]] }
    }

    /// Scaled so the largest entry has modulus one.
    fn normalized(&self) -> Self {
        let scale = self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        Self { m: self.m.map(|row| row.map(|z| z / scale)) }
    }
}

/// The reduced group realized as permutations of the branch points.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericGroup {
    /// `None` stands for `∞`.
    pub branch_points: Vec<Option<Complex64>>,
    pub elements: Vec<NumericMap>,
    pub permutations: Vec<Vec<usize>>,
    pub order: usize,
    /// Sorted.
    pub element_orders: Vec<usize>,
}

impl NumericGroup {
    pub fn involutions(&self) -> Vec<&Vec<usize>> {
        self.permutations.iter().zip(&self.element_orders_unsorted()).filter(|(_, &o)| o == 2).map(|(p, _)| p).collect()
    }

    fn element_orders_unsorted(&self) -> Vec<usize> {
        self.permutations.iter().map(|p| permutation_order(p)).collect()
    }

    /// Whether two distinct involutions commute.
    pub fn has_klein_subgroup(&self) -> bool {
        let inv = self.involutions();
        inv.iter().enumerate().any(|(i, p)| inv[i + 1..].iter().any(|q| compose(p, q) == compose(q, p)))
    }

    /// Identity, closure and inverses on the permutation representation.
    pub fn satisfies_axioms(&self) -> bool {
        let set: HashSet<&Vec<usize>> = self.permutations.iter().collect();
        let n = self.branch_points.len();
        let identity: Vec<usize> = (0..n).collect();
        if !set.contains(&identity) || set.len() != self.order {
            return false;
        }
        let closed = self.permutations.iter().all(|p| self.permutations.iter().all(|q| set.contains(&compose(p, q))));
        let inverses = self.permutations.iter().all(|p| {
            let mut inv = vec![0; n];
            for (i, &j) in p.iter().enumerate() {
                inv[j] = i;
            }
            set.contains(&inv)
        });
        let lagrange = self.element_orders.iter().all(|o| self.order.is_multiple_of(*o));
        closed && inverses && lagrange
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn permutation_order(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut order = 1;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            order = order.lcm(&len);
        }
    }
    order
}

fn chordal(p: &Point, q: &Point) -> f64 {
    let cross = (p[0] * q[1] - q[0] * p[1]).norm();
    let np = (p[0].norm_sqr() + p[1].norm_sqr()).sqrt();
    let nq = (q[0].norm_sqr() + q[1].norm_sqr()).sqrt();
    cross / (np * nq)
}

/// The map sending `∞, 0, 1` to `p1, p2, p3`.
fn from_triple(p1: &Point, p2: &Point, p3: &Point) -> NumericMap {
    let det = p1[0] * p2[1] - p2[0] * p1[1];
    let l1 = (p3[0] * p2[1] - p2[0] * p3[1]) / det;
    let l2 = (p1[0] * p3[1] - p3[0] * p1[1]) / det;
    NumericMap { m: [[l1 * p1[0], l2 * p2[0]], [l1 * p1[1], l2 * p2[1]]] }
}

/// Branch points sorted by modulus then argument, `∞` last.
fn branch_points(curve: &HyperellipticCurve<Rational>) -> Result<Vec<Option<Complex64>>> {
    let mut roots = numeric_roots(curve.poly(), crate::poly::DEFAULT_TOL)?;
    roots.sort_by(|x, y| x.norm().total_cmp(&y.norm()).then(x.arg().total_cmp(&y.arg())));
    let mut points: Vec<Option<Complex64>> = roots.into_iter().map(Some).collect();
    if curve.is_odd_degree() {
        points.push(None);
    }
    Ok(points)
}

fn homogeneous(p: &Option<Complex64>) -> Point {
    match p {
        Some(z) => [*z, Complex64::new(1.0, 0.0)],
        None => INFINITY,
    }
}

pub fn reduced_group(curve: &HyperellipticCurve<Rational>, tol: f64) -> Result<NumericGroup> {
    reduced_group_with(curve, tol, Execution::default())
}

pub fn reduced_group_with(curve: &HyperellipticCurve<Rational>, tol: f64, exec: Execution) -> Result<NumericGroup> {
    if !(tol > 0.0 && tol <= 1e-4) {
        return Err(Error::BadTolerance(tol));
    }
    let branch = branch_points(curve)?;
    let points: Vec<Point> = branch.iter().map(homogeneous).collect();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if chordal(&points[i], &points[j]) <= 2.0 * tol {
                return Err(Error::ToleranceAmbiguity { tol });
            }
        }
    }

    let source_inv = from_triple(&points[0], &points[1], &points[2]).inverse();
    let mut triples = Vec::with_capacity(n * (n - 1) * (n - 2));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    let outcomes = map_collect(&triples, exec, |&[i, j, k]| {
        let map = from_triple(&points[i], &points[j], &points[k]).mul(&source_inv).normalized();
        match_points(&map, &points, tol).map(|perm| perm.map(|p| (map, p)))
    });

    let mut elements = Vec::new();
    let mut permutations = Vec::new();
    for outcome in outcomes {
        if let Some((map, perm)) = outcome? {
            elements.push(map);
            permutations.push(perm);
        }
    }
    let mut element_orders: Vec<usize> = permutations.iter().map(|p| permutation_order(p)).collect();
    element_orders.sort_unstable();
    Ok(NumericGroup { branch_points: branch, order: elements.len(), elements, permutations, element_orders })
}

/// The permutation induced by `map`, if it maps every branch point within
/// `tol` of a unique branch point.
fn match_points(map: &NumericMap, points: &[Point], tol: f64) -> Result<Option<Vec<usize>>> {
    let mut perm = Vec::with_capacity(points.len());
    let mut hit = vec![false; points.len()];
    for p in points {
        let image = map.apply(p);
        let mut close = points.iter().enumerate().filter(|(_, q)| chordal(&image, q) <= tol);
        let Some((j, _)) = close.next() else {
            return Ok(None);
        };
        if close.next().is_some() {
            return Err(Error::ToleranceAmbiguity { tol });
        }
        if hit[j] {
            return Ok(None);
        }
        hit[j] = true;
        perm.push(j);
    }
    Ok(Some(perm))
}

/// Group label read off from the reduced order. Only genus 2 has a full
/// table; other genera get `Z2` for the trivial group and `flagged-other`
/// otherwise.
pub fn label_from_signature(g: usize, group: &NumericGroup) -> Result<GroupLabel> {
    let order = group.order;
    let name = if g == 2 {
        match order {
            1 => GroupName::Z2,
            2 => GroupName::V4,
            4 => GroupName::D8,
            6 => GroupName::D12,
            12 => GroupName::Z3xD8,
            24 => GroupName::Gl23,
            5 => GroupName::Z10,
            _ => return Err(Error::UnknownSignature { order }),
        }
    } else if order == 1 {
        GroupName::Z2
    } else {
        GroupName::FlaggedOther
    };
    Ok(GroupLabel { name, reduced_order: Some(order), lift_flag: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DEFAULT_TOL;

    fn group(c: &[i64]) -> NumericGroup {
        reduced_group(&HyperellipticCurve::from_ints(c).unwrap(), DEFAULT_TOL).unwrap()
    }

    #[test]
    fn x6_plus_1() {
        let g = group(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(g.order, 12);
        assert!(g.element_orders.contains(&6));
        assert!(g.satisfies_axioms());
        assert!(g.has_klein_subgroup());
    }

    #[test]
    fn x5_minus_x() {
        let g = group(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(g.order, 24);
        assert!(g.element_orders.contains(&4));
        assert!(g.satisfies_axioms());
    }

    #[test]
    fn x6_minus_x() {
        let g = group(&[0, -1, 0, 0, 0, 0, 1]);
        assert_eq!(g.order, 5);
        assert_eq!(g.element_orders, vec![1, 5, 5, 5, 5]);
        assert!(!g.has_klein_subgroup());
    }

    #[test]
    fn cubic_palindrome_is_s3() {
        let g = group(&[1, 0, 0, 4, 0, 0, 1]);
        assert_eq!(g.order, 6);
        assert_eq!(g.involutions().len(), 3);
        assert!(!g.has_klein_subgroup());
    }

    #[test]
    fn generic_is_trivial() {
        assert_eq!(group(&[1, 1, 0, 0, 0, 0, 1]).order, 1);
    }

    #[test]
    fn deterministic() {
        let c = [3, -1, 4, 1, -5, 9, 2];
        assert_eq!(group(&c), group(&c));
    }

    #[test]
    fn sequential_matches_parallel() {
        let c = HyperellipticCurve::from_ints(&[0, -1, 0, 0, 0, 1]).unwrap();
        assert_eq!(
            reduced_group_with(&c, DEFAULT_TOL, Execution::Sequential).unwrap(),
            reduced_group_with(&c, DEFAULT_TOL, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn labels() {
        let g = group(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(label_from_signature(2, &g).unwrap().name, GroupName::Z3xD8);
        let s4 = group(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(label_from_signature(2, &s4).unwrap().name, GroupName::Gl23);
        let mut fake = g.clone();
        fake.order = 7;
        assert_eq!(label_from_signature(2, &fake), Err(Error::UnknownSignature { order: 7 }));
    }

    #[test]
    fn tolerance_is_validated() {
        let c = HyperellipticCurve::from_ints(&[1, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(reduced_group(&c, 0.0), Err(Error::BadTolerance(0.0)));
        assert_eq!(reduced_group(&c, 1e-3), Err(Error::BadTolerance(1e-3)));
    }
}
