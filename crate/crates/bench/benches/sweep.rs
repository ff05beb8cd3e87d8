use annigraph_core::topo::{enumerate_canonical, enumerate_topologies, MAX_ENUM_POINTS};
use annigraph_core::veritas::{canonical_spaces, claims, compute_dg_report, run_suite, HomTrials, RunOptions, Suite};
use annigraph_core::SpaceFilter;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [3usize, 4, 5] {
        group.bench_with_input(BenchmarkId::new("labeled", n), &n, |b, &n| {
            b.iter(|| enumerate_topologies(n, MAX_ENUM_POINTS).unwrap().len())
        });
    }
    group.bench_function("canonical/5", |b| b.iter(|| enumerate_canonical(5, MAX_ENUM_POINTS).unwrap().len()));
    group.finish();
}

fn verify(c: &mut Criterion) {
    let all = claims();
    let spaces = canonical_spaces(2, 4, SpaceFilter::All).unwrap();
    let opts = RunOptions {
        suite: Suite::All,
        hom: HomTrials { seed: 1, trials: 100 },
    };
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("all-claims/n2-4", |b| {
        b.iter(|| run_suite(&all, &spaces, &opts, &compute_dg_report).reports.len())
    });
    group.finish();
}

criterion_group!(benches, enumeration, verify);
criterion_main!(benches);
