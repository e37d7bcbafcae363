//! Error types shared across the crate.

use thiserror::Error;

/// Errors from graph construction and generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected; graphs are simple")]
    SelfLoop(usize),
    #[error("graph must have at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("partition must be non-empty with all part sizes >= 1")]
    BadPartition,
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("Kneser parameters require p >= 2k >= 2, got p={p}, k={k}")]
    BadKneserParameters { p: usize, k: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

/// Errors from graph6 and edge-list text decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}")]
    BadSizeHeader { offset: usize },
    #[error("vertex count {n} not supported by this decoder (max {max})")]
    UnsupportedSize { n: usize, max: usize },
    #[error("payload truncated: expected {expected} bytes after the header, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("line {line}: {message}")]
    BadEdgeLine { line: usize, message: String },
}

/// Errors from the symmetric eigensolver and spectrum assembly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },
    #[error("matrix must be square and non-empty")]
    BadShape,
    #[error("Jacobi sweeps did not converge within {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("trace identity `{identity}` violated: residual {residual:e} exceeds tolerance {tolerance:e}")]
    IdentityViolation {
        identity: &'static str,
        residual: f64,
        tolerance: f64,
    },
    #[error("tolerance configuration invalid: {0}")]
    BadTolerance(String),
}

/// Rejections of weight vectors that are not probability distributions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("weight vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("weight at index {index} is negative or non-finite: {value}")]
    BadEntry { index: usize, value: f64 },
    #[error("weights sum to {sum}, which is not 1 within 1e-9")]
    BadSum { sum: f64 },
}

/// Exact solvers stop with this instead of ever returning an approximate answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("exact solve aborted: node budget of {budget} exhausted after {explored} nodes")]
    BudgetExceeded { budget: u64, explored: u64 },
}

/// Errors surfaced by campaign drivers and report writers.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("input error: {0}")]
    Input(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}
