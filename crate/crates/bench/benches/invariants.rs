use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cliquebound_bench::{clique_fixtures, record_fixture, spectral_fixtures};
use cliquebound_core::clique::max_clique;
use cliquebound_core::graph6::{encode_graph6, parse_graph6};
use cliquebound_core::harness::campaigns::run_sweep;
use cliquebound_core::harness::evaluate_graph;
use cliquebound_core::spectral::{spectrum_of, ToleranceConfig};
use cliquebound_core::EvalOptions;

fn bench_eigensolve(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolve");
    for (name, graph) in spectral_fixtures() {
        let cfg = ToleranceConfig::for_graph(&graph);
        group.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, g| {
            b.iter(|| spectrum_of(black_box(g), &cfg).unwrap());
        });
    }
    group.finish();
}

fn bench_max_clique(c: &mut Criterion) {
    let mut group = c.benchmark_group("max-clique");
    for (name, graph) in clique_fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, g| {
            b.iter(|| max_clique(black_box(g), 100_000_000).unwrap());
        });
    }
    group.finish();
}

fn bench_graph6_codec(c: &mut Criterion) {
    let graph = record_fixture();
    let encoded = encode_graph6(&graph);
    c.bench_function("graph6/encode-n100", |b| {
        b.iter(|| encode_graph6(black_box(&graph)));
    });
    c.bench_function("graph6/parse-n100", |b| {
        b.iter(|| parse_graph6(black_box(&encoded)).unwrap());
    });
}

fn bench_full_record(c: &mut Criterion) {
    let graph = record_fixture();
    let options = EvalOptions::default();
    c.bench_function("record/evaluate-n100", |b| {
        b.iter(|| evaluate_graph(black_box(&graph), "bench", &options).unwrap());
    });
}

fn bench_sweep_slice(c: &mut Criterion) {
    let options = EvalOptions {
        workers: 1,
        ..EvalOptions::default()
    };
    c.bench_function("sweep/n-max-5", |b| {
        b.iter(|| run_sweep(black_box(5), &options).unwrap());
    });
}

criterion_group!(
    benches,
    bench_eigensolve,
    bench_max_clique,
    bench_graph6_codec,
    bench_full_record,
    bench_sweep_slice
);
criterion_main!(benches);
