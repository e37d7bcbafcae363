//! Shared fixtures for the benchmark targets: named graphs spanning the
//! regimes the solvers see in practice (structured families and seeded
//! random graphs at several densities).

use cliquebound_core::generators::{gnp_graph, kneser_graph};
use cliquebound_core::Graph;

/// Named eigensolver workloads of increasing size.
pub fn spectral_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen-n10", kneser_graph(5, 2).unwrap()),
        ("kneser8-n28", kneser_graph(8, 2).unwrap()),
        ("gnp-n64-p05", gnp_graph(64, 0.5, 11).unwrap()),
    ]
}

/// Named exact-clique workloads; densities chosen so branch-and-bound
/// does real pruning work without dominating a bench run.
pub fn clique_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("kneser10-n45", kneser_graph(10, 2).unwrap()),
        ("gnp-n40-p05", gnp_graph(40, 0.5, 23).unwrap()),
        ("gnp-n60-p03", gnp_graph(60, 0.3, 31).unwrap()),
    ]
}

/// A dense mid-size graph for codec and whole-record benchmarks.
pub fn record_fixture() -> Graph {
    gnp_graph(100, 0.5, 47).unwrap()
}
