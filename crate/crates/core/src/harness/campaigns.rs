//! Campaign drivers: exhaustive labeled sweeps, corpus verification,
//! seeded random search, and the Kneser family check.
//!
//! Determinism contract: work is split into fixed-size chunks whose results
//! merge in source order, and summaries are associative roll-ups, so the
//! emitted records and summary are identical for any worker count.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::{BoundId, NUMERIC_TOL};
use crate::error::HarnessError;
use crate::generators::{
    derive_trial_seed, gnp_graph, graph_from_mask, kneser_graph, labeled_graph_count,
    ENUMERATION_MAX_N,
};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::parse_graph6;
use crate::spectral::{kneser2_closed_form, spectrum_of};

use super::record::{CampaignOutput, CampaignSummary, GraphRecord, KneserRow, SCHEMA_VERSION};
use super::{evaluate_graph, EvalOptions};

/// Sweeps and random searches keep at most this many full violation or
/// anomaly rows (the earliest in source order); counting is never capped.
pub const MAX_STORED_VIOLATION_RECORDS: usize = 256;
const MAX_SAMPLES: usize = 32;
const SWEEP_CHUNK: u64 = 4096;
const GNP_CHUNK: usize = 4;
const CORPUS_CHUNK: usize = 64;

#[derive(Debug, Default, Clone)]
struct Accumulator {
    processed: u64,
    skipped: u64,
    aborted: u64,
    violations: BTreeMap<String, u64>,
    tight: BTreeMap<String, u64>,
    undefined: BTreeMap<String, u64>,
    proven_bound_violations: u64,
    consistency_failures: u64,
    non_bound_witnesses: u64,
    failure_samples: Vec<String>,
    skip_samples: Vec<String>,
    sum_omega: f64,
    omega_count: u64,
    sum_conjecture1: f64,
    conjecture1_count: u64,
}

fn push_sample(samples: &mut Vec<String>, message: String) {
    if samples.len() < MAX_SAMPLES {
        samples.push(message);
    }
}

impl Accumulator {
    fn absorb(&mut self, record: &GraphRecord) {
        match &record.solver_aborted {
            Some(message) => {
                self.aborted += 1;
                push_sample(
                    &mut self.failure_samples,
                    format!("{} {}: {}", record.source, record.graph6, message),
                );
            }
            None => self.processed += 1,
        }
        for e in &record.evaluations {
            let key = e.id.as_str();
            if e.is_violated() {
                *self.violations.entry(key.to_string()).or_default() += 1;
            }
            if e.is_tight() {
                *self.tight.entry(key.to_string()).or_default() += 1;
            }
            if e.status == crate::bounds::EvalStatus::UndefinedDenominator {
                *self.undefined.entry(key.to_string()).or_default() += 1;
            }
        }
        let proven = record.proven_violations();
        if !proven.is_empty() {
            self.proven_bound_violations += proven.len() as u64;
            let names: Vec<&str> = proven.iter().map(|id| id.as_str()).collect();
            push_sample(
                &mut self.failure_samples,
                format!(
                    "proven bound(s) {} violated on {} ({})",
                    names.join(","),
                    record.graph6,
                    record.source
                ),
            );
        }
        if !record.consistency_failures.is_empty() {
            self.consistency_failures += record.consistency_failures.len() as u64;
            push_sample(
                &mut self.failure_samples,
                format!(
                    "{} {}: {}",
                    record.source, record.graph6, record.consistency_failures[0]
                ),
            );
        }
        if record.non_bound_witness {
            self.non_bound_witnesses += 1;
        }
        if let Some(omega) = record.omega {
            self.sum_omega += omega as f64;
            self.omega_count += 1;
        }
        if let Some(value) = record
            .evaluations
            .iter()
            .find(|e| e.id == BoundId::Conjecture1)
            .and_then(|e| e.value)
        {
            self.sum_conjecture1 += value;
            self.conjecture1_count += 1;
        }
    }

    fn merge(&mut self, other: Accumulator) {
        self.processed += other.processed;
        self.skipped += other.skipped;
        self.aborted += other.aborted;
        for (k, v) in other.violations {
            *self.violations.entry(k).or_default() += v;
        }
        for (k, v) in other.tight {
            *self.tight.entry(k).or_default() += v;
        }
        for (k, v) in other.undefined {
            *self.undefined.entry(k).or_default() += v;
        }
        self.proven_bound_violations += other.proven_bound_violations;
        self.consistency_failures += other.consistency_failures;
        self.non_bound_witnesses += other.non_bound_witnesses;
        for s in other.failure_samples {
            push_sample(&mut self.failure_samples, s);
        }
        for s in other.skip_samples {
            push_sample(&mut self.skip_samples, s);
        }
        self.sum_omega += other.sum_omega;
        self.omega_count += other.omega_count;
        self.sum_conjecture1 += other.sum_conjecture1;
        self.conjecture1_count += other.conjecture1_count;
    }

    fn into_summary(
        self,
        campaign: &str,
        config: BTreeMap<String, String>,
        include_means: bool,
        kneser_rows: Vec<KneserRow>,
        wall_time_ms: u64,
    ) -> CampaignSummary {
        let mean = |sum: f64, count: u64| (include_means && count > 0).then(|| sum / count as f64);
        CampaignSummary {
            schema_version: SCHEMA_VERSION.to_string(),
            campaign: campaign.to_string(),
            config,
            graphs_processed: self.processed,
            graphs_skipped: self.skipped,
            graphs_aborted: self.aborted,
            violations: self.violations,
            tight: self.tight,
            undefined: self.undefined,
            proven_bound_violations: self.proven_bound_violations,
            consistency_failures: self.consistency_failures,
            non_bound_witnesses: self.non_bound_witnesses,
            failure_samples: self.failure_samples,
            skip_samples: self.skip_samples,
            mean_omega: mean(self.sum_omega, self.omega_count),
            mean_conjecture1: mean(self.sum_conjecture1, self.conjecture1_count),
            kneser_rows,
            wall_time_ms,
        }
    }
}

/// Counters plus the evaluated record, or a counted infrastructure failure.
fn absorb_outcome(
    acc: &mut Accumulator,
    source: &str,
    outcome: Result<GraphRecord, HarnessError>,
) -> Option<GraphRecord> {
    match outcome {
        Ok(record) => {
            acc.absorb(&record);
            Some(record)
        }
        Err(e) => {
            acc.aborted += 1;
            acc.consistency_failures += 1;
            push_sample(&mut acc.failure_samples, format!("{source}: {e}"));
            None
        }
    }
}

/// A record worth keeping in full when a campaign persists only anomalies.
fn is_anomalous(record: &GraphRecord) -> bool {
    !record.violations.is_empty()
        || !record.consistency_failures.is_empty()
        || record.solver_aborted.is_some()
}

fn keep_capped(kept: &mut Vec<GraphRecord>, records: impl IntoIterator<Item = GraphRecord>) {
    for record in records {
        if kept.len() >= MAX_STORED_VIOLATION_RECORDS {
            break;
        }
        kept.push(record);
    }
}

fn run_in_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    if workers == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| HarnessError::Input(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(job))
}

fn base_config(options: &EvalOptions) -> BTreeMap<String, String> {
    let mut config = BTreeMap::new();
    config.insert(
        "tol_zero_scale".to_string(),
        format!("{}", options.tolerances.zero_scale),
    );
    config.insert(
        "tol_identity_scale".to_string(),
        format!("{}", options.tolerances.identity_scale),
    );
    config.insert(
        "sweep_limit".to_string(),
        options.tolerances.sweep_limit.to_string(),
    );
    config.insert("node_budget".to_string(), options.node_budget.to_string());
    config.insert("with_chi".to_string(), options.with_chi.to_string());
    config
}

/// Evaluates every labeled graph on 1..=n_max vertices. Only anomalous
/// rows are persisted (capped); everything is counted in the summary.
pub fn run_sweep(n_max: usize, options: &EvalOptions) -> Result<CampaignOutput, HarnessError> {
    if n_max == 0 {
        return Err(HarnessError::Input("sweep requires n_max >= 1".to_string()));
    }
    if n_max > ENUMERATION_MAX_N {
        return Err(HarnessError::Input(format!(
            "n_max {n_max} exceeds the enumeration cap {ENUMERATION_MAX_N}"
        )));
    }
    let started = Instant::now();
    let (acc, kept) = run_in_pool(options.workers, || {
        let mut acc = Accumulator::default();
        let mut kept: Vec<GraphRecord> = Vec::new();
        for n in 1..=n_max {
            let total = labeled_graph_count(n);
            let chunk_count = total.div_ceil(SWEEP_CHUNK);
            let chunk_results: Vec<(Accumulator, Vec<GraphRecord>)> = (0..chunk_count)
                .into_par_iter()
                .map(|chunk_index| {
                    let lo = chunk_index * SWEEP_CHUNK;
                    let hi = (lo + SWEEP_CHUNK).min(total);
                    let mut acc = Accumulator::default();
                    let mut kept = Vec::new();
                    for mask in lo..hi {
                        let g = graph_from_mask(n, mask).expect("mask below 2^C(n,2)");
                        let source = format!("sweep:n={n}:mask={mask}");
                        let outcome = evaluate_graph(&g, &source, options);
                        if let Some(record) = absorb_outcome(&mut acc, &source, outcome) {
                            if is_anomalous(&record) {
                                keep_capped(&mut kept, [record]);
                            }
                        }
                    }
                    (acc, kept)
                })
                .collect();
            for (chunk_acc, chunk_kept) in chunk_results {
                acc.merge(chunk_acc);
                keep_capped(&mut kept, chunk_kept);
            }
        }
        (acc, kept)
    })?;
    let mut config = base_config(options);
    config.insert("n_max".to_string(), n_max.to_string());
    Ok(CampaignOutput {
        records: kept,
        summary: acc.into_summary(
            "sweep",
            config,
            false,
            Vec::new(),
            started.elapsed().as_millis() as u64,
        ),
    })
}

/// Evaluates each graph6 line of `text`, one record per parseable line.
/// Blank lines and a `>>graph6<<` header are tolerated; malformed lines are
/// counted as skips with their line numbers.
pub fn run_corpus_text(text: &str, options: &EvalOptions) -> Result<CampaignOutput, HarnessError> {
    let started = Instant::now();
    let mut acc = Accumulator::default();
    let mut items: Vec<(usize, Graph)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_number = index + 1;
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => items.push((line_number, g)),
            Err(e) => {
                acc.skipped += 1;
                push_sample(&mut acc.skip_samples, format!("line {line_number}: {e}"));
            }
        }
    }

    let chunk_results: Vec<(Accumulator, Vec<GraphRecord>)> = run_in_pool(options.workers, || {
        items
            .par_chunks(CORPUS_CHUNK)
            .map(|chunk| {
                let mut acc = Accumulator::default();
                let mut records = Vec::with_capacity(chunk.len());
                for (line_number, g) in chunk {
                    let source = format!("corpus:{line_number}");
                    let outcome = evaluate_graph(g, &source, options);
                    if let Some(record) = absorb_outcome(&mut acc, &source, outcome) {
                        records.push(record);
                    }
                }
                (acc, records)
            })
            .collect()
    })?;

    let mut records = Vec::new();
    for (chunk_acc, chunk_records) in chunk_results {
        acc.merge(chunk_acc);
        records.extend(chunk_records);
    }
    let config = base_config(options);
    Ok(CampaignOutput {
        records,
        summary: acc.into_summary(
            "corpus",
            config,
            false,
            Vec::new(),
            started.elapsed().as_millis() as u64,
        ),
    })
}

/// [`run_corpus_text`] over a file.
pub fn run_corpus(path: &Path, options: &EvalOptions) -> Result<CampaignOutput, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    run_corpus_text(&text, options)
}

/// Evaluates `trials` seeded G(n, p) samples. Per-trial seeds derive
/// deterministically from the master seed, so any trial can be reproduced
/// standalone from its source tag. Persists only anomalous rows; reports
/// mean clique number and mean conjectured-bound value.
pub fn run_gnp_search(
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
    options: &EvalOptions,
) -> Result<CampaignOutput, HarnessError> {
    if trials == 0 {
        return Err(HarnessError::Input(
            "gnp search requires trials >= 1".to_string(),
        ));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(HarnessError::Input(format!(
            "gnp vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(HarnessError::Input(format!(
            "gnp edge probability {p} outside [0, 1]"
        )));
    }
    let started = Instant::now();
    let trial_indices: Vec<u64> = (0..trials).collect();
    let chunk_results: Vec<(Accumulator, Vec<GraphRecord>)> = run_in_pool(options.workers, || {
        trial_indices
            .par_chunks(GNP_CHUNK)
            .map(|chunk| {
                let mut acc = Accumulator::default();
                let mut kept = Vec::new();
                for &trial in chunk {
                    let trial_seed = derive_trial_seed(seed, trial);
                    let g = gnp_graph(n, p, trial_seed).expect("parameters pre-validated");
                    let source = format!("gnp:n={n}:p={p}:trial={trial}:seed={trial_seed}");
                    let outcome = evaluate_graph(&g, &source, options);
                    if let Some(record) = absorb_outcome(&mut acc, &source, outcome) {
                        if is_anomalous(&record) {
                            keep_capped(&mut kept, [record]);
                        }
                    }
                }
                (acc, kept)
            })
            .collect()
    })?;

    let mut acc = Accumulator::default();
    let mut kept = Vec::new();
    for (chunk_acc, chunk_kept) in chunk_results {
        acc.merge(chunk_acc);
        keep_capped(&mut kept, chunk_kept);
    }
    let mut config = base_config(options);
    config.insert("n".to_string(), n.to_string());
    config.insert("p".to_string(), format!("{p}"));
    config.insert("trials".to_string(), trials.to_string());
    config.insert("seed".to_string(), seed.to_string());
    Ok(CampaignOutput {
        records: kept,
        summary: acc.into_summary(
            "gnp",
            config,
            true,
            Vec::new(),
            started.elapsed().as_millis() as u64,
        ),
    })
}

/// Checks the 2-subset Kneser family for p in `p_min..=p_max`: numeric
/// versus closed-form spectrum, the clique chain
/// `conjecture value <= (p-1)/2 <= floor(p/2) = omega`, and the sign of the
/// reduction polynomial `2p^2 - 9p + 6`. Keeps every row.
pub fn run_kneser_family(
    p_min: usize,
    p_max: usize,
    options: &EvalOptions,
) -> Result<CampaignOutput, HarnessError> {
    if p_min < 4 {
        return Err(HarnessError::Input(format!(
            "Kneser family requires p_min >= 4, got {p_min}"
        )));
    }
    if p_min > p_max {
        return Err(HarnessError::Input(format!(
            "empty Kneser range: p_min {p_min} > p_max {p_max}"
        )));
    }
    let started = Instant::now();
    let mut acc = Accumulator::default();
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for p in p_min..=p_max {
        let g = kneser_graph(p, 2)?;
        let source = format!("kneser:p={p}");
        let outcome = evaluate_graph(&g, &source, options);
        let Some(record) = absorb_outcome(&mut acc, &source, outcome) else {
            continue;
        };

        let cfg = options
            .tolerances
            .resolve(g.vertex_count(), g.edge_count())?;
        let numeric = spectrum_of(&g, &cfg)?;
        let closed = kneser2_closed_form(p).expect("p >= 4 validated");
        let spectrum_max_dev = numeric
            .eigenvalues
            .iter()
            .zip(&closed.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);

        let conjecture1_value = record
            .evaluations
            .iter()
            .find(|e| e.id == BoundId::Conjecture1)
            .and_then(|e| e.value)
            .unwrap_or(f64::NAN);
        let half_bound = (p as f64 - 1.0) / 2.0;
        let floor_half = (p / 2) as f64;
        let chain_holds = record.omega == Some(p / 2)
            && conjecture1_value <= half_bound + NUMERIC_TOL
            && half_bound <= floor_half + NUMERIC_TOL;
        if !chain_holds {
            acc.consistency_failures += 1;
            push_sample(
                &mut acc.failure_samples,
                format!(
                    "kneser chain failed at p={p}: value {conjecture1_value}, omega {:?}",
                    record.omega
                ),
            );
        }
        let p_i64 = p as i64;
        let reduction_margin = 2 * p_i64 * p_i64 - 9 * p_i64 + 6;
        rows.push(KneserRow {
            p,
            n: g.vertex_count(),
            m: g.edge_count(),
            omega: record.omega.unwrap_or(0),
            conjecture1_value,
            half_bound,
            spectrum_max_dev,
            reduction_margin,
            margin_nonnegative: reduction_margin >= 0,
            chain_holds,
        });
        records.push(record);
    }
    let mut config = base_config(options);
    config.insert("p_min".to_string(), p_min.to_string());
    config.insert("p_max".to_string(), p_max.to_string());
    Ok(CampaignOutput {
        records,
        summary: acc.into_summary(
            "kneser",
            config,
            false,
            rows,
            started.elapsed().as_millis() as u64,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, kneser_graph};
    use crate::graph6::encode_graph6;

    #[test]
    fn sweep_counts_every_labeled_graph() {
        let options = EvalOptions::default();
        let output = run_sweep(4, &options).unwrap();
        // 1 + 2 + 8 + 64 labeled graphs on 1..=4 vertices
        assert_eq!(output.summary.graphs_processed, 75);
        assert_eq!(output.summary.graphs_aborted, 0);
        assert_eq!(output.summary.violations.get("conjecture1"), None);
        assert_eq!(output.summary.proven_bound_violations, 0);
        assert_eq!(output.summary.consistency_failures, 0);
        // the three labeled perfect matchings on 4 vertices are the only
        // graphs this small beating the almost-always square-sum cap
        assert_eq!(output.summary.violations.get("elphick_splus"), Some(&3));
        assert_eq!(output.records.len(), 3);
        assert!(output.records.iter().all(|r| r.reverified));
    }

    #[test]
    fn sweep_is_deterministic_across_worker_counts() {
        let single = EvalOptions {
            workers: 1,
            ..EvalOptions::default()
        };
        let quad = EvalOptions {
            workers: 4,
            ..EvalOptions::default()
        };
        let a = run_sweep(4, &single).unwrap();
        let b = run_sweep(4, &quad).unwrap();
        assert!(a.summary.same_results(&b.summary));
        assert_eq!(a.records, b.records);
    }

    #[test]
    fn sweep_validates_its_cap() {
        assert!(run_sweep(0, &EvalOptions::default()).is_err());
        assert!(run_sweep(ENUMERATION_MAX_N + 1, &EvalOptions::default()).is_err());
    }

    #[test]
    fn corpus_skips_malformed_lines_with_numbers() {
        let k5 = encode_graph6(&complete_graph(5).unwrap());
        let petersen = encode_graph6(&kneser_graph(5, 2).unwrap());
        let c7 = encode_graph6(&cycle_graph(7).unwrap());
        let text = format!(">>graph6<<\n{k5}\n\n{petersen}\n!!bad!!\n{c7}\n");
        let output = run_corpus_text(&text, &EvalOptions::default()).unwrap();
        assert_eq!(output.summary.graphs_processed, 3);
        assert_eq!(output.summary.graphs_skipped, 1);
        assert!(output.summary.skip_samples[0].starts_with("line 5:"));
        assert_eq!(output.records.len(), 3);
        assert_eq!(output.records[0].source, "corpus:2");
        assert_eq!(output.records[2].source, "corpus:6");
        assert_eq!(output.summary.violations.get("conjecture1"), None);
    }

    #[test]
    fn corpus_of_nothing_is_clean() {
        let output = run_corpus_text("", &EvalOptions::default()).unwrap();
        assert_eq!(output.summary.graphs_processed, 0);
        assert_eq!(output.summary.graphs_skipped, 0);
        assert!(output.records.is_empty());
        assert_eq!(output.summary.falsifiable_violations(), 0);
        assert!(!output.summary.internally_inconsistent());
    }

    #[test]
    fn gnp_zero_probability_gives_edgeless_graphs() {
        let output = run_gnp_search(10, 0.0, 5, 7, &EvalOptions::default()).unwrap();
        assert_eq!(output.summary.graphs_processed, 5);
        assert_eq!(output.summary.mean_omega, Some(1.0));
        assert_eq!(output.summary.mean_conjecture1, Some(1.0));
        assert!(output.records.is_empty());
    }

    #[test]
    fn gnp_is_reproducible() {
        let options = EvalOptions::default();
        let a = run_gnp_search(14, 0.5, 6, 99, &options).unwrap();
        let b = run_gnp_search(14, 0.5, 6, 99, &options).unwrap();
        assert!(a.summary.same_results(&b.summary));
        assert_eq!(a.records, b.records);

        let forked = EvalOptions {
            workers: 3,
            ..options
        };
        let c = run_gnp_search(14, 0.5, 6, 99, &forked).unwrap();
        assert!(a.summary.same_results(&c.summary));
    }

    #[test]
    fn gnp_validates_parameters() {
        let options = EvalOptions::default();
        assert!(run_gnp_search(10, 0.5, 0, 1, &options).is_err());
        assert!(run_gnp_search(0, 0.5, 1, 1, &options).is_err());
        assert!(run_gnp_search(10, 1.5, 1, 1, &options).is_err());
    }

    #[test]
    fn kneser_family_rows() {
        let output = run_kneser_family(4, 8, &EvalOptions::default()).unwrap();
        assert_eq!(output.summary.kneser_rows.len(), 5);
        assert_eq!(output.records.len(), 5);
        assert_eq!(output.summary.consistency_failures, 0);
        let margins: Vec<i64> = output
            .summary
            .kneser_rows
            .iter()
            .map(|r| r.reduction_margin)
            .collect();
        assert_eq!(margins, vec![2, 11, 24, 41, 62]);
        for row in &output.summary.kneser_rows {
            assert!(row.chain_holds, "p={}", row.p);
            assert!(row.margin_nonnegative);
            assert!(row.spectrum_max_dev <= 1e-8, "p={}", row.p);
            assert_eq!(row.omega, row.p / 2);
        }
    }

    #[test]
    fn kneser_family_validates_range() {
        let options = EvalOptions::default();
        assert!(run_kneser_family(3, 5, &options).is_err());
        assert!(run_kneser_family(6, 5, &options).is_err());
    }
}
