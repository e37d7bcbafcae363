//! Exact chromatic number: a DSATUR greedy pass for the upper bound, the
//! clique number for the lower bound, then iterative deepening with a
//! DSATUR-ordered backtracking decision procedure in between. Deterministic
//! by the same rule as the clique solver: ties break on vertex index.

use crate::clique::max_clique;
use crate::error::SolveError;
use crate::graph::Graph;

const UNSET: usize = usize::MAX;

/// Chromatic number with one proper coloring using exactly `chi` colors,
/// numbered contiguously from 0 in order of first use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi: usize,
    pub coloring: Vec<usize>,
}

/// True iff `coloring` assigns every vertex a color and no edge is
/// monochromatic.
pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count()
        && g.edges().all(|(u, v)| coloring[u] != coloring[v])
        && coloring.iter().all(|&c| c != UNSET)
}

/// DSATUR selection: the uncolored vertex with the most distinct neighbor
/// colors, then highest degree among uncolored neighbors, then lowest index.
fn select_vertex(g: &Graph, assignment: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut best = UNSET;
    let mut best_key = (0usize, 0usize);
    for v in 0..n {
        if assignment[v] != UNSET {
            continue;
        }
        let mut seen = vec![false; n];
        let mut saturation = 0;
        let mut uncolored_degree = 0;
        for u in g.neighbors(v) {
            if assignment[u] == UNSET {
                uncolored_degree += 1;
            } else if !seen[assignment[u]] {
                seen[assignment[u]] = true;
                saturation += 1;
            }
        }
        let key = (saturation, uncolored_degree);
        if best == UNSET || key > best_key {
            best = v;
            best_key = key;
        }
    }
    best
}

/// Proper coloring from the DSATUR greedy heuristic (no backtracking).
/// Colors are contiguous from 0; the count used is an upper bound on chi.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut assignment = vec![UNSET; n];
    for _ in 0..n {
        let v = select_vertex(g, &assignment);
        let mut forbidden = vec![false; n];
        for u in g.neighbors(v) {
            if assignment[u] != UNSET {
                forbidden[assignment[u]] = true;
            }
        }
        assignment[v] = (0..n).find(|&c| !forbidden[c]).expect("n colors suffice");
    }
    assignment
}

/// Decision procedure: can `g` be properly colored with `k` colors? Fills
/// `assignment` with a witness on success. `fresh` is the number of distinct
/// colors already used; a branch may open at most one new color, which
/// removes color-permutation symmetry.
fn try_color(
    g: &Graph,
    k: usize,
    assignment: &mut Vec<usize>,
    colored: usize,
    fresh: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, SolveError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(SolveError::BudgetExceeded {
            budget,
            explored: *nodes,
        });
    }
    if colored == g.vertex_count() {
        return Ok(true);
    }
    let v = select_vertex(g, assignment);
    let mut forbidden = vec![false; k];
    for u in g.neighbors(v) {
        let c = assignment[u];
        if c != UNSET {
            forbidden[c] = true;
        }
    }
    let limit = fresh.min(k - 1);
    for (c, &blocked) in forbidden.iter().enumerate().take(limit + 1) {
        if blocked {
            continue;
        }
        assignment[v] = c;
        let next_fresh = fresh.max(c + 1);
        if try_color(g, k, assignment, colored + 1, next_fresh, nodes, budget)? {
            return Ok(true);
        }
        assignment[v] = UNSET;
    }
    Ok(false)
}

/// Exact chromatic number. Aborts with [`SolveError::BudgetExceeded`] rather
/// than return an unproven answer; the budget applies to each embedded exact
/// search (the clique lower bound and each decision call) independently.
pub fn chromatic_number(g: &Graph, node_budget: u64) -> Result<ColoringResult, SolveError> {
    let greedy = greedy_coloring(g);
    let upper = greedy.iter().copied().max().map_or(0, |c| c + 1);
    let lower = max_clique(g, node_budget)?.omega;
    debug_assert!(lower <= upper);

    for k in lower..upper {
        let mut assignment = vec![UNSET; g.vertex_count()];
        let mut nodes = 0u64;
        if try_color(g, k, &mut assignment, 0, 0, &mut nodes, node_budget)? {
            debug_assert!(is_proper_coloring(g, &assignment));
            return Ok(ColoringResult {
                chi: k,
                coloring: assignment,
            });
        }
    }
    debug_assert!(is_proper_coloring(g, &greedy));
    Ok(ColoringResult {
        chi: upper,
        coloring: greedy,
    })
}
