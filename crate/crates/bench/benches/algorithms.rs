use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use girth4_bench::{grid, random_graph};
use girth4_core::construction::{build_case_4k, decompose};
use girth4_core::planarity::is_planar_edges;
use girth4_core::search::{search_decomposition, SearchConfig};
use girth4_core::verification::verify;

fn girth(c: &mut Criterion) {
    let mut group = c.benchmark_group("girth");
    for n in [20, 60, 200] {
        let g = random_graph(n, 4.0 / n as f64, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| g.girth()));
    }
    group.finish();
}

fn planarity(c: &mut Criterion) {
    let mut group = c.benchmark_group("planarity");
    for w in [5, 15, 40] {
        let edges = grid(w);
        group.bench_with_input(BenchmarkId::new("grid", w * w), &edges, |b, e| b.iter(|| is_planar_edges(w * w, e)));
    }
    let d = decompose(40).unwrap();
    group.bench_function("k40_part", |b| b.iter(|| is_planar_edges(40, black_box(&d.parts[0]))));
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for k in [5, 25] {
        group.bench_with_input(BenchmarkId::new("build_case_4k", k), &k, |b, &k| b.iter(|| build_case_4k(k).unwrap()));
    }
    let d = decompose(60).unwrap();
    group.bench_function("verify_k60", |b| b.iter(|| verify(black_box(&d))));
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    group.bench_function("k6_two_parts_exhausted", |b| b.iter(|| search_decomposition(&SearchConfig::new(6, 2, 4)).unwrap()));
    group.bench_function("k9_three_parts", |b| b.iter(|| search_decomposition(&SearchConfig::new(9, 3, 4)).unwrap()));
    group.finish();
}

criterion_group!(benches, girth, planarity, construction, search);
criterion_main!(benches);
