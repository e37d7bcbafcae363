//! Deterministic graph generators and the exhaustive labeled-graph stream.

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::colex_pairs;
use rand_core::{RngCore, SeedableRng};

/// Largest `n` accepted by [`enumerate_labeled_graphs`]; the upper-triangle
/// bitmask must fit in a `u64`.
pub const ENUMERATION_MAX_N: usize = 11;

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooFewVertices { n, min: 1 });
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooFewVertices { n, min: 3 });
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooFewVertices { n, min: 1 });
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Complete multipartite graph; part `i` occupies a consecutive block of
/// vertex ids. The clique number equals the number of parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(GraphError::BadPartition);
    }
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// All k-subsets of `0..p` in colexicographic order.
fn colex_subsets(p: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // find lowest position that can advance
        let mut i = 0;
        while i < k {
            let ceiling = if i + 1 < k { current[i + 1] } else { p };
            if current[i] + 1 < ceiling {
                break;
            }
            i += 1;
        }
        if i == k {
            return out;
        }
        current[i] += 1;
        for (j, slot) in current.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
}

/// Kneser graph: vertices are the k-subsets of a p-set in colexicographic
/// order, adjacent iff disjoint. Requires `p >= 2k >= 2`.
pub fn kneser_graph(p: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || p < 2 * k {
        return Err(GraphError::BadKneserParameters { p, k });
    }
    let n = binomial(p, k) as usize;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let masks: Vec<u64> = colex_subsets(p, k)
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if masks[u] & masks[v] == 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// SplitMix64 step; the documented derivation for per-trial seeds.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` of a campaign with the given master seed: the
/// `index+1`-th output of a SplitMix64 stream started at the master seed.
pub fn derive_trial_seed(master: u64, index: u64) -> u64 {
    let mut state = master;
    let mut out = 0;
    for _ in 0..=index {
        out = splitmix64(&mut state);
    }
    out
}

/// Erdős–Rényi G(n, p) sampler.
///
/// The generator is pinned for reproducibility: a ChaCha8 stream seeded via
/// `seed_from_u64(seed)`, one draw per vertex pair in colexicographic order
/// `(0,1),(0,2),(1,2),...`, taking the top 53 bits of each `u64` and
/// including the edge iff `draw < round(p * 2^53)`.
pub fn gnp_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GraphError::BadProbability(p));
    }
    if n == 0 {
        return Err(GraphError::TooFewVertices { n, min: 1 });
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let threshold = (p * (1u64 << 53) as f64).round() as u64;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty_unchecked(n);
    for (u, v) in colex_pairs(n) {
        let draw = rng.next_u64() >> 11;
        if draw < threshold {
            g.insert_edge(u, v).expect("colex pairs are in range");
        }
    }
    Ok(g)
}

/// Builds the labeled graph whose upper-triangle bitmask is `mask`: bit `k`
/// of the mask is the `k`-th pair in colexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooFewVertices { n, min: 1 });
    }
    if n > ENUMERATION_MAX_N {
        return Err(GraphError::TooManyVertices {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    let mut g = Graph::empty_unchecked(n);
    for (k, (u, v)) in colex_pairs(n).enumerate() {
        if mask >> k & 1 == 1 {
            g.insert_edge(u, v).expect("colex pairs are in range");
        }
    }
    Ok(g)
}

/// Number of labeled graphs on `n` vertices: `2^C(n,2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Streams every labeled graph on `n` vertices exactly once, in increasing
/// bitmask order: the first graph is edgeless and the last is complete.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::TooFewVertices { n, min: 1 });
    }
    if n > ENUMERATION_MAX_N {
        return Err(GraphError::TooManyVertices {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    let total = labeled_graph_count(n);
    Ok((0..total).map(move |mask| graph_from_mask(n, mask).expect("mask in range")))
}
