use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperinv::curve::HyperellipticCurve;
use hyperinv::exact::ratio;
use hyperinv::invariants::classify_with;
use hyperinv::moduli::{minus_locus_point, verify_batch};
use hyperinv::oracle::reduced_group_with;
use hyperinv::par::Execution;
use hyperinv::poly::DEFAULT_TOL;
use hyperinv::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn locus_points(n: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..n)
        .map(|i| {
            let g = 2 + i % 4;
            let a: Vec<Rational> = (0..g).map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=5))).collect();
            minus_locus_point(&a)
        })
        .collect()
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for (name, coeffs) in [("x5-x", &[0, -1, 0, 0, 0, 1][..]), ("x10+1", &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1][..])] {
        let curve = HyperellipticCurve::from_ints(coeffs).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &curve, |b, cv| {
                b.iter(|| reduced_group_with(cv, DEFAULT_TOL, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn round_trip(c: &mut Criterion) {
    let points = locus_points(200);
    let mut group = c.benchmark_group("verify_batch");
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| b.iter(|| verify_batch(&points, exec)));
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let curve = HyperellipticCurve::from_ints(&[0, -1, 0, 0, 0, 1]).unwrap();
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| b.iter(|| classify_with(&curve, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, oracle, round_trip, classify);
criterion_main!(benches);
