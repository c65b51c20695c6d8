//! Transform construction and application benchmarks.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use polycert::{laguerre_recurrence, laguerre_sum, MonomialTransform};
use polycert_bench::dense_rational;

fn laguerre_generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("laguerre_generation");
    for n in [10usize, 20, 40] {
        group.bench_function(format!("sum_n{n}"), |b| {
            b.iter(|| laguerre_sum(black_box(n)))
        });
        group.bench_function(format!("recurrence_n{n}"), |b| {
            b.iter(|| laguerre_recurrence(black_box(n)))
        });
    }
    group.finish();
}

fn transform_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("transform_tables");
    group.bench_function("laguerre_table_40", |b| {
        b.iter(|| MonomialTransform::laguerre(black_box(40)))
    });
    group.bench_function("compose_factorial_reflection_40", |b| {
        let t = MonomialTransform::factorial(40);
        let r = MonomialTransform::reflection(40);
        b.iter(|| MonomialTransform::compose(black_box(&t), black_box(&r)).unwrap())
    });
    group.finish();
}

fn apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("apply");
    let t = MonomialTransform::laguerre(24);
    for degree in [12usize, 24] {
        let p = dense_rational(degree, 7);
        group.bench_function(format!("laguerre_deg{degree}"), |b| {
            b.iter(|| t.apply(black_box(&p)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, laguerre_generation, transform_tables, apply);
criterion_main!(benches);
