use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gbdepth::family::{build_family, verify_theorem, VerifyOptions};
use gbdepth::monomial_invariants::{betti_table_split, hilbert_numerator};
use gbdepth::{betti_table, buchberger, family_order, initial_ideal, GroebnerConfig, InvariantConfig, Rational};

fn bench_buchberger(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    for d in [2usize, 3] {
        let family = build_family::<Rational>(d).unwrap();
        for r in [0, d] {
            let order = family_order(d, r).unwrap();
            group.bench_with_input(BenchmarkId::new(format!("d{d}"), r), &order, |b, order| {
                b.iter(|| buchberger(black_box(&family.ideal), order, &GroebnerConfig::default()).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    let cfg = InvariantConfig::default();
    for d in [2usize, 3] {
        let family = build_family::<Rational>(d).unwrap();
        let gb = buchberger(&family.ideal, &family_order(d, 0).unwrap(), &GroebnerConfig::default()).unwrap();
        let init = initial_ideal(&gb);
        group.bench_with_input(BenchmarkId::new("split", d), &init, |b, j| {
            b.iter(|| betti_table_split::<Rational>(black_box(j), &cfg).unwrap())
        });
        if d == 2 {
            group.bench_with_input(BenchmarkId::new("direct", d), &init, |b, j| {
                b.iter(|| betti_table::<Rational>(black_box(j), &cfg).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("hilbert", d), &init, |b, j| b.iter(|| hilbert_numerator(black_box(j))));
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    for d in [1usize, 2, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| verify_theorem::<Rational>(d, &VerifyOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(family, bench_buchberger, bench_betti, bench_verify);
criterion_main!(family);
