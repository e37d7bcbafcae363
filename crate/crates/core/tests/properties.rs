//! Randomized structural properties of the graph type, codec, solvers, and
//! spectra. These complement the fixed fixtures in the unit tests: every
//! case here must hold for all graphs, so shrunk counterexamples point
//! straight at a logic bug.

use proptest::prelude::*;

use cliquebound_core::clique::{is_clique, max_clique};
use cliquebound_core::coloring::{chromatic_number, is_proper_coloring};
use cliquebound_core::generators::{graph_from_mask, labeled_graph_count, splitmix64};
use cliquebound_core::graph6::{encode_graph6, parse_graph6};
use cliquebound_core::spectral::{spectrum_of, ToleranceConfig};
use cliquebound_core::Graph;

/// A labeled graph on 1..=max_n vertices, uniform over edge subsets.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let mask = bits % labeled_graph_count(n);
        graph_from_mask(n, mask).expect("mask is in range")
    })
}

/// A permutation of 0..n derived from a seed by Fisher-Yates.
fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = seed;
    for i in (1..n).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(11)) {
        let encoded = encode_graph6(&g);
        let decoded = parse_graph6(&encoded).expect("own encoding parses");
        prop_assert_eq!(&decoded, &g);
        prop_assert_eq!(encode_graph6(&decoded), encoded);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(11)) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn neighbors_match_edge_queries(g in arb_graph(9)) {
        for v in 0..g.vertex_count() {
            let from_rows: Vec<usize> = g.neighbors(v).collect();
            let from_queries: Vec<usize> = (0..g.vertex_count())
                .filter(|&u| g.has_edge(v, u))
                .collect();
            prop_assert_eq!(from_rows, from_queries);
        }
    }
}

proptest! {
    // Spectral and solver cases cost more per graph; fewer, bigger cases.
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_invariants(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.vertex_count();
        let perm = permutation(n, seed);
        let h = g.permuted(&perm).expect("permutation is valid");

        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.triangle_count(), g.triangle_count());

        let sg = spectrum_of(&g, &ToleranceConfig::for_graph(&g)).unwrap();
        let sh = spectrum_of(&h, &ToleranceConfig::for_graph(&h)).unwrap();
        prop_assert_eq!(sg.inertia, sh.inertia);
        for (a, b) in sg.eigenvalues.iter().zip(&sh.eigenvalues) {
            prop_assert!((a - b).abs() <= 1e-8, "eigenvalues drifted: {} vs {}", a, b);
        }

        let wg = max_clique(&g, 1_000_000).unwrap();
        let wh = max_clique(&h, 1_000_000).unwrap();
        prop_assert_eq!(wg.omega, wh.omega);
    }

    #[test]
    fn spectrum_satisfies_power_sum_identities(g in arb_graph(10)) {
        let s = spectrum_of(&g, &ToleranceConfig::for_graph(&g)).unwrap();
        let trace: f64 = s.eigenvalues.iter().sum();
        let square_sum: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
        prop_assert!(trace.abs() <= 1e-8);
        prop_assert!((square_sum - 2.0 * g.edge_count() as f64).abs() <= 1e-8);
        prop_assert_eq!(
            s.inertia.positive + s.inertia.negative + s.inertia.zero,
            g.vertex_count()
        );
        prop_assert!(s.s_plus >= 0.0 && s.s_minus >= 0.0);
    }

    #[test]
    fn adding_an_edge_never_shrinks_omega_or_chi(g in arb_graph(8), pick in any::<u64>()) {
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[(pick % missing.len() as u64) as usize];
        let bigger = g.with_edge(u, v).expect("edge endpoints are valid");

        let omega = max_clique(&g, 1_000_000).unwrap().omega;
        let omega_bigger = max_clique(&bigger, 1_000_000).unwrap().omega;
        prop_assert!(omega_bigger >= omega);
        prop_assert!(omega_bigger <= omega + 1);

        let chi = chromatic_number(&g, 10_000_000).unwrap().chi;
        let chi_bigger = chromatic_number(&bigger, 10_000_000).unwrap().chi;
        prop_assert!(chi_bigger >= chi);
        prop_assert!(chi_bigger <= chi + 1);
    }

    #[test]
    fn solver_certificates_are_valid(g in arb_graph(9)) {
        let clique = max_clique(&g, 1_000_000).unwrap();
        prop_assert!(is_clique(&g, &clique.witness));
        prop_assert_eq!(clique.witness.len(), clique.omega);

        let coloring = chromatic_number(&g, 10_000_000).unwrap();
        prop_assert!(is_proper_coloring(&g, &coloring.coloring));
        let used = coloring.coloring.iter().max().map_or(0, |&c| c + 1);
        prop_assert_eq!(used, coloring.chi);
        prop_assert!(clique.omega <= coloring.chi);
    }
}
