//! One-call bundle of the exact combinatorial invariants a single graph
//! needs downstream: clique number with witness, optional chromatic number
//! with witness coloring, and the triangle census.

use crate::clique::max_clique;
use crate::coloring::chromatic_number;
use crate::error::SolveError;
use crate::graph::Graph;

/// Exact combinatorial invariants of one graph. The chromatic fields are
/// `None` when the (often much slower) coloring search was not requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialInvariants {
    pub omega: usize,
    /// One maximum clique, vertices ascending.
    pub omega_witness: Vec<usize>,
    pub chi: Option<usize>,
    /// One optimal proper coloring, colors contiguous from 0.
    pub chi_coloring: Option<Vec<usize>>,
    pub triangle_count: u64,
    pub triangle_free: bool,
    /// `Some(omega == chi)` when the chromatic number was computed.
    pub weakly_perfect: Option<bool>,
}

pub fn is_weakly_perfect(omega: usize, chi: usize) -> bool {
    omega == chi
}

/// Runs the exact solvers. Each embedded search honors `node_budget`
/// independently and aborts rather than approximate.
pub fn combinatorial_invariants(
    g: &Graph,
    with_chi: bool,
    node_budget: u64,
) -> Result<CombinatorialInvariants, SolveError> {
    let clique = max_clique(g, node_budget)?;
    let triangle_count = g.triangle_count();
    let (chi, chi_coloring, weakly_perfect) = if with_chi {
        let coloring = chromatic_number(g, node_budget)?;
        let perfect = is_weakly_perfect(clique.omega, coloring.chi);
        (Some(coloring.chi), Some(coloring.coloring), Some(perfect))
    } else {
        (None, None, None)
    };
    Ok(CombinatorialInvariants {
        omega: clique.omega,
        omega_witness: clique.witness,
        chi,
        chi_coloring,
        triangle_count,
        triangle_free: triangle_count == 0,
        weakly_perfect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph};

    #[test]
    fn cycle_five_is_imperfect() {
        let inv = combinatorial_invariants(&cycle_graph(5).unwrap(), true, u64::MAX).unwrap();
        assert_eq!(inv.omega, 2);
        assert_eq!(inv.chi, Some(3));
        assert_eq!(inv.weakly_perfect, Some(false));
        assert!(inv.triangle_free);
    }

    #[test]
    fn complete_graph_is_weakly_perfect() {
        let inv = combinatorial_invariants(&complete_graph(4).unwrap(), true, u64::MAX).unwrap();
        assert_eq!(inv.omega, 4);
        assert_eq!(inv.chi, Some(4));
        assert_eq!(inv.weakly_perfect, Some(true));
        assert_eq!(inv.triangle_count, 4);
    }

    #[test]
    fn chromatic_work_is_opt_in() {
        let inv = combinatorial_invariants(&cycle_graph(5).unwrap(), false, u64::MAX).unwrap();
        assert_eq!(inv.chi, None);
        assert_eq!(inv.chi_coloring, None);
        assert_eq!(inv.weakly_perfect, None);
    }
}
