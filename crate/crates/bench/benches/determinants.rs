use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibhess::claims::{verify_all, DEFAULT_T_SAMPLES};
use fibhess::{build_family, cofactor_det, hessenberg_det, Family};
use fibhess_bench::random_hessenberg;

fn family_c(c: &mut Criterion) {
    let mut group = c.benchmark_group("det/C");
    for n in [8usize, 12, 16] {
        let m = build_family(Family::C, n).unwrap();
        group.bench_with_input(BenchmarkId::new("hessenberg", n), &m, |b, m| {
            b.iter(|| hessenberg_det(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cofactor", n), &m, |b, m| {
            b.iter(|| cofactor_det(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn random_integer(c: &mut Criterion) {
    let mut group = c.benchmark_group("det/random");
    for n in [8usize, 14] {
        let m = random_hessenberg(n, n as u64);
        group.bench_with_input(BenchmarkId::new("hessenberg", n), &m, |b, m| {
            b.iter(|| hessenberg_det(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cofactor", n), &m, |b, m| {
            b.iter(|| cofactor_det(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn audit(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    group.bench_function("n_max=12", |b| {
        b.iter(|| verify_all(black_box(12), &DEFAULT_T_SAMPLES).unwrap())
    });
    group.finish();
}

criterion_group!(benches, family_c, random_integer, audit);
criterion_main!(benches);
