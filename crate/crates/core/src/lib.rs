//! Spectral and combinatorial clique-bound verification.
//!
//! The crate computes adjacency spectra (eigenvalues, inertia, and the
//! positive/negative square-sum invariants), exact clique and chromatic
//! numbers with witnesses, and evaluates a fixed vocabulary of clique and
//! coloring bound inequalities on every graph it sees. Campaign drivers
//! run exhaustive labeled sweeps, seeded random searches, Kneser family
//! checks, and graph6 corpus verification, all deterministically for any
//! worker count.
//!
//! Commonly used types are re-exported at the crate root; the full APIs
//! live in their modules.

pub mod bounds;
pub mod clique;
pub mod coloring;
pub mod combinatorics;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;

pub use bounds::{BoundEvaluation, BoundId, BoundKind, EvalStatus, GraphFacts, NUMERIC_TOL};
pub use clique::CliqueResult;
pub use coloring::ColoringResult;
pub use combinatorics::CombinatorialInvariants;
pub use error::{GraphError, HarnessError, ParseError, SolveError, SpectralError, WeightError};
pub use graph::{Graph, MAX_VERTICES};
pub use harness::record::{
    CampaignOutput, CampaignSummary, GraphRecord, KneserRow, SCHEMA_VERSION,
};
pub use harness::report::ReportFormat;
pub use harness::{EvalOptions, DEFAULT_NODE_BUDGET};
pub use spectral::{Inertia, Spectrum, ToleranceConfig, ToleranceScales};
