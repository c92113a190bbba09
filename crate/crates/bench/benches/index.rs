use abcgg_bench::fixtures;
use abcgg_core::{abc_classic, abc_gg, canonical_form};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn index(c: &mut Criterion) {
    let mut group = c.benchmark_group("abc_gg");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| abc_gg(black_box(g))));
    }
    group.finish();

    let mut group = c.benchmark_group("abc_classic");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| abc_classic(black_box(g))));
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.order() <= 40) {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| canonical_form(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, index, canon);
criterion_main!(benches);
