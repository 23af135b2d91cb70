use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphpot_bench::{decompositions, necklace_potential, uvz_terms};
use std::hint::black_box;

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("necklace potential");
    for g in [2, 4, 6, 8] {
        group.bench_with_input(BenchmarkId::new("edge variables", g), &g, |b, &g| b.iter(|| necklace_potential(black_box(g))));
        group.bench_with_input(BenchmarkId::new("uvz", g), &g, |b, &g| b.iter(|| uvz_terms(black_box(g))));
    }
    group.finish();
}

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching decompositions");
    for g in [3, 5, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| b.iter(|| decompositions(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, build, decompose);
criterion_main!(benches);
