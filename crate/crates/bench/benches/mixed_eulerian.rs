use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mixed_eulerian::engine::count;
use mixed_eulerian::{extract_mixed_eulerian, volume_poly, Family, MemoTable};
use mixed_eulerian_bench::{canonical_division, central, ones};

fn recursion_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursion_table");
    for n in [6, 9, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| MemoTable::new(Family::A).table(black_box(n)).len())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration_count");
    group.sample_size(20);
    for n in [5, 7, 8] {
        let d = canonical_division(&central(n));
        group.bench_with_input(BenchmarkId::new("A", n), &d, |b, d| {
            b.iter(|| count(black_box(d), Family::A))
        });
        group.bench_with_input(BenchmarkId::new("B", n), &d, |b, d| {
            b.iter(|| count(black_box(d), Family::B))
        });
    }
    group.finish();
}

fn volume(c: &mut Criterion) {
    let mut group = c.benchmark_group("volume_poly");
    group.sample_size(10);
    for n in [3, 5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| volume_poly(black_box(n), Family::A).unwrap().len())
        });
    }
    let f = volume_poly(6, Family::A).unwrap();
    group.bench_function("extract/6", |b| {
        b.iter(|| extract_mixed_eulerian(&f, black_box(&ones(6))).unwrap())
    });
    group.finish();
}

criterion_group!(benches, recursion_table, enumeration, volume);
criterion_main!(benches);
