use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use prym_bench::symmetric_group;
use prym_core::permgroup::DEFAULT_CAP;
use prym_core::{GaloisGroup, ReflectionSplit, WeylGroup, WeylType};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [4, 5, 6] {
        group.bench_with_input(BenchmarkId::new("symmetric", n), &n, |b, &n| {
            b.iter(|| symmetric_group(black_box(n)))
        });
    }
    group.finish();
}

fn character_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("galois");
    group.sample_size(20);
    for n in [4, 5, 6] {
        let g = symmetric_group(n);
        group.bench_with_input(BenchmarkId::new("symmetric", n), &g, |b, g| {
            b.iter(|| GaloisGroup::new(g.clone()).unwrap())
        });
    }
    group.finish();
}

fn dimensions(c: &mut Criterion) {
    let mut group = c.benchmark_group("dims");
    for (kind, rank) in [(WeylType::B, 3), (WeylType::F, 4)] {
        let w = WeylGroup::new(kind, rank, DEFAULT_CAP).unwrap();
        let spec = w.hitchin_preset(2, ReflectionSplit::Roots).unwrap();
        group.bench_function(BenchmarkId::new("hitchin", w.name()), |b| {
            b.iter(|| black_box(&spec).validate())
        });
    }
    let s5 = Arc::new(GaloisGroup::new(symmetric_group(5)).unwrap());
    group.bench_function("fixed_dim_det/S5", |b| {
        b.iter(|| s5.fixed_dims().to_rational().determinant())
    });
    group.finish();
}

criterion_group!(benches, enumeration, character_tables, dimensions);
criterion_main!(benches);
