use annigraph_core::graph::{
    chromatic_number, clique_number, dominating_number, girth, DistanceMatrix, InvariantReport, DEFAULT_GI_CAP,
};
use annigraph_bench::{ag, dg_of_pairs};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    for n in [4usize, 5, 6] {
        let g = ag(n);
        group.bench_with_input(BenchmarkId::new("dominating", n), &g, |b, g| b.iter(|| dominating_number(black_box(g))));
        group.bench_with_input(BenchmarkId::new("clique", n), &g, |b, g| b.iter(|| clique_number(black_box(g))));
        group.bench_with_input(BenchmarkId::new("chromatic", n), &g, |b, g| b.iter(|| chromatic_number(black_box(g))));
    }
    group.finish();
}

fn distances(c: &mut Criterion) {
    let g = ag(6);
    c.bench_function("distance_matrix/ag6", |b| b.iter(|| DistanceMatrix::new(black_box(&g))));
    c.bench_function("girth/ag6", |b| b.iter(|| girth(black_box(&g))));
    c.bench_function("gi/ag5-all-pairs", |b| {
        let g = ag(5);
        b.iter(|| {
            let mut total = 0u32;
            for u in 0..g.len() {
                for v in u + 1..g.len() {
                    if let Ok(d) = annigraph_core::graph::gi(&g, u, v, DEFAULT_GI_CAP) {
                        total += d.finite().unwrap_or(0);
                    }
                }
            }
            total
        })
    });
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("report");
    group.sample_size(20);
    group.bench_function("ag5", |b| {
        let g = ag(5);
        b.iter(|| InvariantReport::compute(black_box(&g)))
    });
    group.bench_function("dg-pairs4", |b| {
        let g = dg_of_pairs(4);
        b.iter(|| InvariantReport::compute(black_box(&g)))
    });
    group.finish();
}

criterion_group!(benches, searches, distances, reports);
criterion_main!(benches);
