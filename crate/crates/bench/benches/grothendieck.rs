use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphpot_bench::moduli_checks;
use std::hint::black_box;

fn moduli(c: &mut Criterion) {
    let mut group = c.benchmark_group("moduli report");
    group.sample_size(10);
    for g in [2, 5, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| b.iter(|| moduli_checks(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, moduli);
criterion_main!(benches);
