use hyperinv::curve::HyperellipticCurve;
use hyperinv::exact::rat;
use hyperinv::invariants::{classify, classify_with, GroupName};
use hyperinv::moduli::rational_model;
use hyperinv::moebius::MoebiusMap;
use hyperinv::oracle::{label_from_signature, reduced_group};
use hyperinv::par::Execution;
use hyperinv::poly::DEFAULT_TOL;
use hyperinv::{Error, Rational};

fn curve(c: &[i64]) -> HyperellipticCurve<Rational> {
    HyperellipticCurve::from_ints(c).unwrap()
}

const GENUS2: &[(&[i64], GroupName)] = &[
    (&[1, 0, 0, 0, 0, 0, 1], GroupName::Z3xD8),
    (&[0, -1, 0, 0, 0, 1], GroupName::Gl23),
    (&[1, 0, 0, 4, 0, 0, 1], GroupName::D12),
    (&[0, -1, 0, 0, 0, 0, 1], GroupName::Z10),
    (&[1, 0, 2, 0, 5, 0, 1], GroupName::V4),
    (&[1, 1, 0, 0, 0, 0, 1], GroupName::Z2),
];

#[test]
fn exact_labels_agree_with_oracle() {
    for (c, name) in GENUS2 {
        let cv = curve(c);
        let exact = classify(&cv).unwrap();
        let group = reduced_group(&cv, DEFAULT_TOL).unwrap();
        assert_eq!(exact.label.name, *name, "{c:?}");
        assert_eq!(label_from_signature(2, &group).unwrap().name, *name, "{c:?}");
    }
}

#[test]
fn classification_survives_a_change_of_coordinates() {
    let cv = curve(&[1, 0, 2, 0, 5, 0, 1]);
    let m = MoebiusMap::new(rat(2), rat(1), rat(1), rat(3)).unwrap();
    let (image, _) = cv.transform(&m).unwrap();
    let before = classify(&cv).unwrap();
    let after = classify(&image).unwrap();
    assert_eq!(before.label, after.label);
    assert_eq!(before.fiber, after.fiber);
}

#[test]
fn classify_then_rebuild_over_the_rationals() {
    let cv = curve(&[1, 0, 3, 0, 7, 0, 3, 0, 1]);
    let c = classify(&cv).unwrap();
    let u = c.u.unwrap();
    let model = rational_model(&u).unwrap();
    assert!(model.verified);
    assert_eq!(classify(&model.curve).unwrap().fiber.first(), c.fiber.first());
}

#[test]
fn sequential_and_parallel_agree() {
    for (c, _) in GENUS2 {
        let cv = curve(c);
        assert_eq!(
            classify_with(&cv, Execution::Sequential).unwrap(),
            classify_with(&cv, Execution::Parallel).unwrap()
        );
    }
}

#[test]
fn singular_input_is_rejected() {
    assert_eq!(HyperellipticCurve::from_ints(&[1, 0, 3, 0, 3, 0, 1]).unwrap_err(), Error::SingularModel);
}
