use std::hint::black_box;

use braidkl::cactus::{enumerate_cacti, enumerate_husimi, HusimiType};
use braidkl::klcore::{inv_kl_poly_braid, kl_poly_braid};
use braidkl::matroid::range_set;
use braidkl::spgen::SpCatalog;
use braidkl::KlTable;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn kl_recursion(c: &mut Criterion) {
    let mut g = c.benchmark_group("kl_recursion");
    for n in [8, 12, 16, 20] {
        g.bench_with_input(BenchmarkId::new("P", n), &n, |b, &n| {
            b.iter(|| kl_poly_braid(black_box(n), &mut KlTable::new()).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("Q", n), &n, |b, &n| {
            b.iter(|| inv_kl_poly_braid(black_box(n), &mut KlTable::new()).unwrap())
        });
    }
    g.finish();
}

fn sp_catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("sp_catalog");
    g.sample_size(10);
    for n in [5, 6, 7] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| SpCatalog::up_to(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn cacti(c: &mut Criterion) {
    let mut g = c.benchmark_group("cacti");
    g.sample_size(10);
    for v in [5u8, 7] {
        g.bench_with_input(BenchmarkId::new("triangular", v), &v, |b, &v| {
            b.iter(|| enumerate_cacti(range_set(black_box(v))).unwrap())
        });
    }
    let ty = HusimiType::new(vec![2, 1]);
    g.bench_function("husimi p=5 (2,1)", |b| b.iter(|| enumerate_husimi(black_box(5), &ty).unwrap()));
    g.finish();
}

criterion_group!(benches, kl_recursion, sp_catalog, cacti);
criterion_main!(benches);
