use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homog_core::exactalg::{q, Rational};
use homog_core::homog::{moduli_report_with, CMode};
use homog_core::par::Strategy;
use homog_core::sweep::{parse_grid, sweep};

fn grid_sweep(c: &mut Criterion) {
    let cs = parse_grid("-5:2:1").unwrap();
    let rs = parse_grid("-2:2:1").unwrap();
    let mut group = c.benchmark_group("sweep_8x5");
    group.sample_size(10);
    for strategy in [Strategy::Sequential, Strategy::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(strategy.name()), &strategy, |b, &s| {
            b.iter(|| sweep(black_box(&cs), black_box(&rs), None, s).unwrap())
        });
    }
    group.finish();
}

fn r_instantiations(c: &mut Criterion) {
    let rs: Vec<Rational> = (-6..=6).map(|r| q(r, 2)).collect();
    let mut group = c.benchmark_group("moduli_r_samples");
    group.sample_size(10);
    for strategy in [Strategy::Sequential, Strategy::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(strategy.name()), &strategy, |b, &s| {
            b.iter(|| moduli_report_with(&CMode::Rational(q(1, 1)), black_box(&rs), s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, grid_sweep, r_instantiations);
criterion_main!(benches);
