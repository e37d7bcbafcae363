//! Report row and campaign summary types. A `GraphRecord` is one graph's
//! complete audit trail; a `CampaignSummary` is the associative roll-up of
//! a whole run. Field declaration order is the stable JSON key order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundEvaluation, BoundId};

/// Version stamp carried by every record and summary.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// One graph, fully evaluated: identity, spectrum summary, exact
/// invariants, and every bound evaluation. Reproducible from the `graph6`
/// field alone (modulo solver tolerances).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub schema_version: String,
    /// Origin tag: corpus line, sweep index, generator parameters, or seed.
    pub source: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub average_degree: f64,
    pub mu: f64,
    pub mu_min: f64,
    pub inertia_positive: usize,
    pub inertia_negative: usize,
    pub inertia_zero: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub triangle_count: u64,
    pub triangle_free: bool,
    /// `None` only when the exact clique solve aborted on budget.
    pub omega: Option<usize>,
    pub omega_witness: Vec<usize>,
    /// `None` when not requested or when the coloring solve aborted.
    pub chi: Option<usize>,
    pub weakly_perfect: Option<bool>,
    pub evaluations: Vec<BoundEvaluation>,
    /// Bound ids whose evaluation came out violated; always consistent with
    /// `evaluations`.
    pub violations: Vec<BoundId>,
    /// True when the clique analogue of the chromatic square-sum bound
    /// exceeds omega on this graph — evidence that it is not an omega bound.
    pub non_bound_witness: bool,
    /// Cross-check failures between bound values; empty means healthy.
    pub consistency_failures: Vec<String>,
    /// Budget-abort messages from the exact solvers, recorded in-row.
    pub solver_aborted: Option<String>,
    /// True when a falsifiable-bound violation candidate triggered the
    /// tightened-tolerance rerun that produced this record.
    pub reverified: bool,
}

impl GraphRecord {
    /// Ids of falsifiable bounds this record reports as violated.
    pub fn falsifiable_violations(&self) -> Vec<BoundId> {
        self.violations
            .iter()
            .copied()
            .filter(|id| id.is_falsifiable())
            .collect()
    }

    /// Ids of proven bounds this record reports as violated (must never
    /// happen; treated as an internal failure).
    pub fn proven_violations(&self) -> Vec<BoundId> {
        self.violations
            .iter()
            .copied()
            .filter(|id| !id.is_falsifiable())
            .collect()
    }
}

/// Per-family row emitted by the Kneser campaign: closed-form spectrum
/// agreement, the clique chain, and the sign of the reduction polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KneserRow {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub conjecture1_value: f64,
    /// The midpoint `(p-1)/2` the conjectured value stays below.
    pub half_bound: f64,
    /// Largest per-eigenvalue deviation between the numeric and closed-form
    /// spectra.
    pub spectrum_max_dev: f64,
    /// `2p^2 - 9p + 6`, the reduced inequality margin.
    pub reduction_margin: i64,
    pub margin_nonnegative: bool,
    /// `conjecture1_value <= (p-1)/2 <= floor(p/2) = omega`.
    pub chain_holds: bool,
}

/// Roll-up of one campaign. All counters merge associatively, so totals
/// are independent of how work was sharded across workers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub schema_version: String,
    pub campaign: String,
    /// Echo of tolerances, seeds, and budgets (not worker count, which must
    /// not influence results).
    pub config: BTreeMap<String, String>,
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub graphs_aborted: u64,
    /// Violation count per bound id.
    pub violations: BTreeMap<String, u64>,
    /// Count of essentially-zero slack per bound id.
    pub tight: BTreeMap<String, u64>,
    /// Undefined-denominator count per bound id.
    pub undefined: BTreeMap<String, u64>,
    pub proven_bound_violations: u64,
    pub consistency_failures: u64,
    pub non_bound_witnesses: u64,
    /// Capped samples of failure messages, each with enough context to
    /// reproduce (graph6 or line number).
    pub failure_samples: Vec<String>,
    /// Capped samples of skipped-input messages with line numbers.
    pub skip_samples: Vec<String>,
    /// Mean clique number over processed graphs (random search campaigns).
    pub mean_omega: Option<f64>,
    /// Mean conjectured-bound value over processed graphs (random search).
    pub mean_conjecture1: Option<f64>,
    /// One row per family member (Kneser campaigns only).
    pub kneser_rows: Vec<KneserRow>,
    pub wall_time_ms: u64,
}

impl CampaignSummary {
    /// Equality of everything except wall time — the determinism contract
    /// for repeated or differently-sharded runs.
    pub fn same_results(&self, other: &CampaignSummary) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        a == b
    }

    /// Total falsifiable-bound violations (drives exit code 1).
    pub fn falsifiable_violations(&self) -> u64 {
        BoundId::ALL
            .iter()
            .filter(|id| id.is_falsifiable())
            .filter_map(|id| self.violations.get(id.as_str()))
            .sum()
    }

    /// True when an internal consistency failure occurred (drives exit
    /// code 3).
    pub fn internally_inconsistent(&self) -> bool {
        self.proven_bound_violations > 0 || self.consistency_failures > 0
    }
}

/// Everything a campaign returns: emitted rows plus the roll-up.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignOutput {
    pub records: Vec<GraphRecord>,
    pub summary: CampaignSummary,
}
