use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphpot_bench::{certify_flips, numeric_clusters, sign_components};
use std::hint::black_box;

fn certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify flip points");
    for g in [3, 5, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| b.iter(|| certify_flips(black_box(g))));
    }
    group.finish();
}

fn signs(c: &mut Criterion) {
    let mut group = c.benchmark_group("sign components");
    group.sample_size(10);
    for g in [3, 5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| b.iter(|| sign_components(black_box(g))));
    }
    group.finish();
}

fn numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric search");
    group.sample_size(10);
    group.bench_function("g=3, 500 starts", |b| b.iter(|| numeric_clusters(3, black_box(500))));
    group.finish();
}

criterion_group!(benches, certify, signs, numeric);
criterion_main!(benches);
