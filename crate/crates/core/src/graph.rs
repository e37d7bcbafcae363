//! Simple undirected graphs stored as bitset adjacency rows.
//!
//! Graphs are immutable after construction: every constructor validates its
//! input and the solvers share `&Graph` freely across worker threads.

use crate::error::GraphError;

/// Largest vertex count accepted by constructors. Dense spectra and exact
/// solvers are the intended workload, so this stays small on purpose.
pub const MAX_VERTICES: usize = 1024;

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// The adjacency matrix is kept as one bitset row per vertex (`words` u64
/// words each), which is what the clique solver and triangle counter want.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Per-vertex degrees together with the average degree 2m/n.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub average: f64,
}

impl Graph {
    /// Graph on `n` vertices with no edges. `n = 0` is representable so the
    /// decoder can round-trip degenerate inputs; every analysis entry point
    /// rejects it.
    pub(crate) fn empty_unchecked(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            m: 0,
            words,
            rows: vec![0u64; n * words],
        }
    }

    /// Builds a graph from an explicit edge list. Duplicate edges (in either
    /// orientation) are silently collapsed; self-loops are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::TooFewVertices { n, min: 1 });
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty_unchecked(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Copy of `self` with one extra edge (used by monotonicity checks).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
            self.m += 1;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The bitset row of neighbors of `v`.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / 64] >> (u % 64) & 1 == 1)
    }

    /// Edges as ordered pairs `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n)
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    pub fn is_regular(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// Counts 3-cliques with a bitset scan: for every edge `u < v`, count the
    /// common neighbors `w > v` so each triangle is seen exactly once.
    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for (u, v) in self.edges() {
            let ru = self.row(u);
            let rv = self.row(v);
            // mask away everything <= v
            let first_word = (v + 1) / 64;
            let shift = (v + 1) % 64;
            for w in first_word..self.words {
                let mut bits = ru[w] & rv[w];
                if w == first_word && shift != 0 {
                    bits &= !0u64 << shift;
                }
                t += u64::from(bits.count_ones());
            }
        }
        t
    }

    pub fn degree_stats(&self) -> Result<DegreeStats, GraphError> {
        if self.n == 0 {
            return Err(GraphError::TooFewVertices { n: 0, min: 1 });
        }
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let average = 2.0 * self.m as f64 / self.n as f64;
        Ok(DegreeStats { degrees, average })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::BadPermutation(self.n));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty_unchecked(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Dense symmetric 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}
