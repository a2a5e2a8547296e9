use hyperinv::curve::HyperellipticCurve;
use hyperinv::exact::{ratio, rat, QuadExt};
use hyperinv::invariants::{
    classify, cover_residual, dihedral_from_even, dihedral_from_normal, locus_eval, scale_action, swap_action,
};
use hyperinv::moduli::rational_model;
use hyperinv::moebius::{MoebiusMap, ProjPoint};
use hyperinv::poly::rational_roots;
use hyperinv::{Poly, Rational, Ring};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

fn normal_form(g: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    g.prop_flat_map(|g| prop::collection::vec(small(), g))
}

fn even_poly(b: &[Rational]) -> Poly<Rational> {
    let mut f = vec![rat(0); 2 * b.len() - 1];
    for (i, bi) in b.iter().enumerate() {
        f[2 * i] = bi.clone();
    }
    Poly::new(f)
}

fn from_normal(a: &[Rational]) -> Poly<Rational> {
    let mut b = vec![rat(1)];
    b.extend_from_slice(a);
    b.push(rat(1));
    even_poly(&b)
}

fn moebius() -> impl Strategy<Value = MoebiusMap<Rational>> {
    (small(), small(), small(), small())
        .prop_filter_map("singular", |(a, b, c, d)| MoebiusMap::new(a, b, c, d).ok())
}

fn quad(d: &Rational) -> impl Strategy<Value = QuadExt> {
    let d = d.clone();
    (small(), small()).prop_map(move |(a, b)| QuadExt::new(a, b, d.clone()))
}

fn conj_all(xs: &[QuadExt]) -> Vec<QuadExt> {
    xs.iter().map(QuadExt::conj).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_are_swap_invariant(a in normal_form(2..=6)) {
        prop_assert_eq!(dihedral_from_normal(&a), dihedral_from_normal(&swap_action(&a)));
    }

    #[test]
    fn invariants_are_scale_invariant(
        b in (3usize..=7).prop_flat_map(|n| prop::collection::vec(nonzero(), n)),
        t in nonzero(),
        s in nonzero(),
    ) {
        prop_assert_eq!(dihedral_from_even(&b).unwrap(), dihedral_from_even(&scale_action(&b, &t, &s)).unwrap());
    }

    #[test]
    fn even_invariants_agree_with_normal_form(a in normal_form(2..=6)) {
        let mut b = vec![rat(1)];
        b.extend(a.iter().cloned());
        b.push(rat(1));
        prop_assert_eq!(dihedral_from_even(&b).unwrap(), dihedral_from_normal(&a));
    }

    #[test]
    fn cover_residual_vanishes(a in normal_form(2..=6)) {
        let u = dihedral_from_normal(&a);
        prop_assert!(cover_residual(&a, &u).is_zero());
    }

    #[test]
    fn palindromic_points_lie_on_minus_factor(a in normal_form(2..=6)) {
        let mut a = a;
        let g = a.len();
        a[g - 1] = a[0].clone();
        prop_assert!(locus_eval(&dihedral_from_normal(&a)).0.is_zero());
    }

    #[test]
    fn compose_agrees_with_apply(m in moebius(), n in moebius(), x in small()) {
        let x = ProjPoint::Finite(x);
        prop_assert_eq!(m.compose(&n).apply(&x), m.apply(&n.apply(&x)));
        prop_assert_eq!(m.compose(&m.inverse()), MoebiusMap::identity());
    }

    #[test]
    fn pullback_is_a_right_action(m in moebius(), n in moebius(), f in prop::collection::vec(small(), 7)) {
        let f = Poly::new(f);
        let left = m.compose(&n).pullback_form(&f, 6).unwrap();
        let right = n.pullback_form(&m.pullback_form(&f, 6).unwrap(), 6).unwrap();
        prop_assert_eq!(left.monic(), right.monic());
    }

    #[test]
    fn fixed_points_are_fixed(m in moebius()) {
        prop_assume!(!m.is_identity());
        let q = m.to_quad();
        let (p1, p2) = m.fixed_points().unwrap();
        prop_assert_eq!(q.apply(&p1), p1);
        prop_assert_eq!(q.apply(&p2), p2);
    }

    #[test]
    fn transform_round_trip(m in moebius(), f in prop::collection::vec(small(), 7)) {
        let Ok(curve) = HyperellipticCurve::new(Poly::new(f)) else { return Ok(()); };
        prop_assume!(curve.form_degree() == 6);
        let (image, _) = curve.transform(&m).unwrap();
        let (back, _) = image.transform(&m.inverse()).unwrap();
        prop_assert_eq!(back.monic_poly(), curve.monic_poly());
    }

    #[test]
    fn rational_roots_match_planted(
        planted in prop::collection::vec(small(), 0..4),
        extra in prop::collection::vec(small(), 1..4),
    ) {
        // x^2 + x + 3 has no rational roots
        let mut p = Poly::new(vec![rat(3), rat(1), rat(1)]);
        for r in &planted {
            p = p * Poly::new(vec![-r.clone(), rat(1)]);
        }
        let extra = Poly::new(extra);
        if !extra.is_zero() {
            p = p * extra;
        }
        let found = rational_roots(&p);
        for r in &planted {
            prop_assert!(found.contains(r));
        }
        for r in &found {
            prop_assert!(p.eval(r).is_zero());
        }
        let brute: Vec<Rational> = (-36i64..=36)
            .flat_map(|n| (1i64..=16).map(move |d| ratio(n, d)))
            .filter(|x| p.eval(x).is_zero())
            .collect();
        for r in &brute {
            prop_assert!(found.contains(r));
        }
    }

    #[test]
    fn quadratic_field_arithmetic(
        (x, y, z) in prop_oneof![Just(rat(2)), Just(rat(-1)), Just(rat(5)), Just(ratio(3, 7))]
            .prop_flat_map(|d| (quad(&d), quad(&d), quad(&d))),
    ) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.try_inv().unwrap(), QuadExt::one());
        }
    }

    #[test]
    fn invariants_commute_with_conjugation(
        b in (3usize..=6).prop_flat_map(|n| prop::collection::vec((nonzero(), small()), n)),
    ) {
        let b: Vec<QuadExt> = b.into_iter().map(|(x, y)| QuadExt::new(x, y, rat(2))).collect();
        let u = dihedral_from_even(&b).unwrap();
        prop_assert_eq!(dihedral_from_even(&conj_all(&b)).unwrap(), conj_all(&u));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn two_involutions_give_a_rational_model(a in normal_form(2..=3)) {
        // a_i = a_{g+1-i}: X -> -X and X -> 1/X commute
        let g = a.len();
        let mut a = a;
        for i in 0..g / 2 {
            a[g - 1 - i] = a[i].clone();
        }
        let Ok(curve) = HyperellipticCurve::new(from_normal(&a)) else { return Ok(()); };
        let Ok(c) = classify(&curve) else { return Ok(()); };
        let u = c.u.unwrap();
        let (minus, plus) = locus_eval(&u);
        prop_assert!(minus.is_zero() || plus.is_zero());
        prop_assume!(!u[0].is_zero());
        let model = rational_model(&u).unwrap();
        prop_assert!(model.verified);
    }
}
