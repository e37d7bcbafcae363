//! Exact maximum clique via branch and bound with greedy-coloring upper
//! bounds (Tomita-style). Fully deterministic: every tie breaks on vertex
//! index, so the witness is reproducible across runs and worker counts.

use crate::error::SolveError;
use crate::graph::Graph;

/// Maximum clique size together with one witness clique (sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: Vec<usize>,
}

/// True iff `vertices` are pairwise adjacent, distinct, and in range.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    let n = g.vertex_count();
    if vertices.iter().any(|&v| v >= n) {
        return false;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if u == v || !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Vertices in removal order of the minimum-degree peeling; ties go to the
/// smallest index.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// Greedy-colors `p` in its given order; returns the vertices regrouped by
/// color class with their class numbers (1-based, nondecreasing). The class
/// number of a vertex bounds the largest clique inside it and its successors.
fn color_sort(g: &Graph, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let words = g.words_per_row();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_masks: Vec<Vec<u64>> = Vec::new();
    for &v in p {
        let row = g.row(v);
        let slot = class_masks
            .iter()
            .position(|mask| row.iter().zip(mask).all(|(r, m)| r & m == 0));
        let ci = match slot {
            Some(ci) => ci,
            None => {
                class_masks.push(vec![0u64; words]);
                classes.push(Vec::new());
                class_masks.len() - 1
            }
        };
        class_masks[ci][v / 64] |= 1u64 << (v % 64);
        classes[ci].push(v);
    }
    let mut ordered = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            ordered.push(v);
            bounds.push(ci + 1);
        }
    }
    (ordered, bounds)
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut CliqueResult,
    nodes: &mut u64,
    budget: u64,
) -> Result<(), SolveError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(SolveError::BudgetExceeded {
            budget,
            explored: *nodes,
        });
    }
    let (mut pool, mut bounds) = color_sort(g, candidates);
    while let Some(v) = pool.pop() {
        let bound = bounds.pop().expect("parallel to pool");
        // bounds are nondecreasing, so once one fails they all do
        if current.len() + bound <= best.omega {
            return Ok(());
        }
        current.push(v);
        let next: Vec<usize> = pool.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        if next.is_empty() {
            if current.len() > best.omega {
                best.omega = current.len();
                best.witness = current.clone();
            }
        } else {
            expand(g, current, &next, best, nodes, budget)?;
        }
        current.pop();
    }
    Ok(())
}

/// Exact maximum clique. Aborts with [`SolveError::BudgetExceeded`] rather
/// than return an unproven answer once more than `node_budget` search nodes
/// have been expanded.
pub fn max_clique(g: &Graph, node_budget: u64) -> Result<CliqueResult, SolveError> {
    let mut best = CliqueResult {
        omega: 0,
        witness: Vec::new(),
    };
    // densest part of the graph first: reverse peeling order
    let root: Vec<usize> = degeneracy_order(g).into_iter().rev().collect();
    let mut nodes = 0u64;
    expand(
        g,
        &mut Vec::new(),
        &root,
        &mut best,
        &mut nodes,
        node_budget,
    )?;
    best.witness.sort_unstable();
    debug_assert!(is_clique(g, &best.witness) && best.witness.len() == best.omega);
    Ok(best)
}
