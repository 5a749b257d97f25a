use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ratseries::{bf_apply, bf_apply_word, diag_element, hadamard, normal_order, truncate};
use ratseries_bench::{alternating, grid_series, mixed, pole};

fn bench_hadamard(c: &mut Criterion) {
    let mut g = c.benchmark_group("hadamard");
    for m in [1u32, 3, 6] {
        let (f, h) = (pole(m), pole(m));
        g.bench_with_input(BenchmarkId::new("pole_pole", m), &m, |b, _| {
            b.iter(|| hadamard(black_box(&f), black_box(&h)).unwrap())
        });
    }
    let (f, h) = (mixed(4), mixed(6));
    g.bench_function("mixed", |b| b.iter(|| hadamard(black_box(&f), black_box(&h)).unwrap()));
    g.finish();
}

fn bench_cauchy(c: &mut Criterion) {
    let mut g = c.benchmark_group("cauchy_mul");
    for n in [2u32, 4, 8] {
        let (f, h) = (mixed(n), mixed(n));
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| black_box(&f).cauchy_mul(black_box(&h)).unwrap())
        });
    }
    g.finish();
}

fn bench_normal_order(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_order");
    for len in [6usize, 10, 14] {
        let w = alternating(len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| b.iter(|| normal_order(black_box(w))));
    }
    g.finish();
}

fn bench_action(c: &mut Criterion) {
    let series = grid_series();
    let mut g = c.benchmark_group("bf_apply");
    let w = alternating(6);
    g.bench_function("word_len6_grid", |b| {
        b.iter(|| series.iter().map(|f| bf_apply_word(black_box(&w), f).len()).sum::<usize>())
    });
    let x = diag_element(6);
    g.bench_function("diag6_grid", |b| {
        b.iter(|| series.iter().map(|f| bf_apply(black_box(&x), f).len()).sum::<usize>())
    });
    g.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let f = mixed(4);
    c.bench_function("truncate_64", |b| b.iter(|| truncate(black_box(&f), 64).unwrap()));
}

criterion_group!(benches, bench_hadamard, bench_cauchy, bench_normal_order, bench_action, bench_oracle);
criterion_main!(benches);
