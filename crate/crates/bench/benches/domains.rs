//! Benchmarks for the three classification routes and the boundary tracer.
//!
//! Run with `cargo bench -p ptchain-bench`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num::bigint::BigInt;
use num::rational::BigRational;
use std::hint::black_box;

use ptchain::{
    assess, boundary_bisect, char_poly_from_squares, oracle, to_secular_form, CouplingVector,
    DEFAULT_EPSILON,
};

fn sample_squares(n: usize) -> Vec<BigRational> {
    (1..=n / 2)
        .map(|k| BigRational::new(BigInt::from(((n - k) * k * 350) as i64), BigInt::from(1000)))
        .collect()
}

fn bench_char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly_exact");
    for n in [4usize, 6, 8, 11] {
        let squares = sample_squares(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| char_poly_from_squares(n, black_box(&squares)).unwrap())
        });
    }
    group.finish();
}

fn bench_criteria(c: &mut Criterion) {
    let mut group = c.benchmark_group("criteria_assess");
    for n in [4usize, 6, 8, 11] {
        let squares = sample_squares(n);
        let form = to_secular_form(&char_poly_from_squares(n, &squares).unwrap(), n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &form, |b, form| {
            b.iter(|| assess(black_box(form), DEFAULT_EPSILON).unwrap())
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("sturm_oracle");
    for n in [4usize, 6, 8, 11] {
        let squares = sample_squares(n);
        let form = to_secular_form(&char_poly_from_squares(n, &squares).unwrap(), n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &form, |b, form| {
            b.iter(|| oracle::oracle_verdict_form(black_box(form)).unwrap())
        });
    }
    group.finish();
}

fn bench_spectrum(c: &mut Criterion) {
    let cv = CouplingVector::new(10, vec![1.1, 2.0, 2.7, 3.1, 3.3]).unwrap();
    c.bench_function("numeric_spectrum_n10", |b| {
        b.iter(|| oracle::numeric_spectrum(black_box(&cv)).unwrap())
    });
}

fn bench_boundary(c: &mut Criterion) {
    c.bench_function("boundary_bisect_n6", |b| {
        b.iter(|| boundary_bisect(6, black_box(&[1.0, 1.0, 1.0]), 1e-9).unwrap())
    });
}

criterion_group!(
    benches,
    bench_char_poly,
    bench_criteria,
    bench_oracle,
    bench_spectrum,
    bench_boundary
);
criterion_main!(benches);
