//! Command-line front end: single-graph invariants, corpus checks,
//! exhaustive sweeps, seeded random search, and the Kneser family, each
//! emitting machine-readable records plus a summary on stderr.
//!
//! Exit codes are a CI contract:
//!   0  clean run
//!   1  a falsifiable bound was violated (candidate counterexample found)
//!   2  input error (arguments, files, formats, tolerances)
//!   3  internal consistency failure (trace identity or proven-bound break)

use std::fmt::Display;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cliquebound_core::graph6::{parse_edge_list, parse_graph6};
use cliquebound_core::harness::campaigns::{
    run_corpus, run_gnp_search, run_kneser_family, run_sweep,
};
use cliquebound_core::harness::evaluate_graph;
use cliquebound_core::harness::report::{render_summary, write_report, write_report_to_path};
use cliquebound_core::{
    CampaignOutput, CampaignSummary, EvalOptions, Graph, GraphRecord, HarnessError, ReportFormat,
    ToleranceScales, DEFAULT_NODE_BUDGET,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cliquebound",
    version,
    about = "Spectral and combinatorial clique/chromatic bound verification",
    after_help = "Exit codes: 0 clean, 1 falsifiable bound violated, 2 input error, \
                  3 internal consistency failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one graph given as a graph6 string or a file path.
    ///
    /// A file may hold a single graph6 line or a whitespace edge list
    /// (optional vertex-count header, `#` comments).
    Invariants {
        /// graph6 string, or path to a graph6/edge-list file.
        input: String,
        /// Also solve for the chromatic number (exact, can be slow).
        #[arg(long, env = "CLIQUEBOUND_WITH_CHI")]
        with_chi: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate every graph6 line of a corpus file.
    Check {
        /// Corpus file: one graph6 string per line, blank lines ignored.
        #[arg(long, env = "CLIQUEBOUND_CORPUS")]
        corpus: PathBuf,
        /// Also solve for the chromatic number (exact, can be slow).
        #[arg(long, env = "CLIQUEBOUND_WITH_CHI")]
        with_chi: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively evaluate every labeled graph on 1..=K vertices.
    Sweep {
        /// Largest vertex count to enumerate (at most 11).
        #[arg(long = "n-max", env = "CLIQUEBOUND_N_MAX")]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Search seeded Erdos-Renyi G(n, p) samples for violations.
    Gnp {
        /// Vertex count of each sample.
        #[arg(long, env = "CLIQUEBOUND_N")]
        n: usize,
        /// Edge probability in [0, 1].
        #[arg(long, env = "CLIQUEBOUND_P")]
        p: f64,
        /// Number of samples to draw.
        #[arg(long, env = "CLIQUEBOUND_TRIALS")]
        trials: u64,
        /// Master seed; each trial derives its own stream from it.
        #[arg(long, env = "CLIQUEBOUND_SEED")]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Check the Kneser family KG(p, 2) against its closed-form spectrum.
    Kneser {
        /// Smallest p (at least 4).
        #[arg(long = "p-min", env = "CLIQUEBOUND_P_MIN")]
        p_min: usize,
        /// Largest p (inclusive).
        #[arg(long = "p-max", env = "CLIQUEBOUND_P_MAX")]
        p_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Zero-eigenvalue tolerance scale; resolves to scale * n per graph.
    #[arg(
        long = "tol-zero",
        env = "CLIQUEBOUND_TOL_ZERO",
        default_value_t = 1e-8
    )]
    tol_zero: f64,
    /// Trace-identity tolerance scale; resolves to scale * max(2m, 1).
    #[arg(
        long = "tol-identity",
        env = "CLIQUEBOUND_TOL_IDENTITY",
        default_value_t = 1e-6
    )]
    tol_identity: f64,
    /// Record format: jsonl or csv.
    #[arg(long, env = "CLIQUEBOUND_FORMAT", default_value = "jsonl")]
    format: String,
    /// Write records to this file instead of stdout.
    #[arg(long, env = "CLIQUEBOUND_OUT")]
    out: Option<PathBuf>,
    /// Worker threads for campaigns; 0 uses one per available core.
    #[arg(long, env = "CLIQUEBOUND_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Search-node budget per exact solve before the row is marked aborted.
    #[arg(long = "node-budget", env = "CLIQUEBOUND_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

impl Common {
    fn options(&self, with_chi: bool) -> EvalOptions {
        EvalOptions {
            with_chi,
            node_budget: self.node_budget,
            workers: self.workers,
            tolerances: self.scales(),
        }
    }

    fn scales(&self) -> ToleranceScales {
        ToleranceScales {
            zero_scale: self.tol_zero,
            identity_scale: self.tol_identity,
            ..ToleranceScales::default()
        }
    }

    /// Rejects unusable tolerances up front so a bad flag reads as an input
    /// error instead of surfacing later as solver trouble.
    fn validate(&self) -> Result<ReportFormat, CliError> {
        self.scales().resolve(1, 1).map_err(CliError::input)?;
        self.format.parse().map_err(CliError::input)
    }
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Display) -> Self {
        CliError {
            message: message.to_string(),
            code: EXIT_INPUT,
        }
    }

    /// Harness failures during evaluation: spectral trouble is an internal
    /// failure, everything else (files, parsing, ranges) is an input error.
    fn from_harness(error: HarnessError) -> Self {
        let code = match error {
            HarnessError::Spectral(_) => EXIT_INCONSISTENT,
            _ => EXIT_INPUT,
        };
        CliError {
            message: error.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Invariants {
            input,
            with_chi,
            common,
        } => {
            let format = common.validate()?;
            let graph = load_graph(&input)?;
            let record = evaluate_graph(
                &graph,
                &format!("invariants:{input}"),
                &common.options(with_chi),
            )
            .map_err(CliError::from_harness)?;
            let code = record_exit(&record);
            emit_records(std::slice::from_ref(&record), format, &common)?;
            Ok(code)
        }
        Command::Check {
            corpus,
            with_chi,
            common,
        } => {
            let format = common.validate()?;
            let output =
                run_corpus(&corpus, &common.options(with_chi)).map_err(CliError::from_harness)?;
            finish_campaign(&output, format, &common)
        }
        Command::Sweep { n_max, common } => {
            let format = common.validate()?;
            let output =
                run_sweep(n_max, &common.options(false)).map_err(CliError::from_harness)?;
            finish_campaign(&output, format, &common)
        }
        Command::Gnp {
            n,
            p,
            trials,
            seed,
            common,
        } => {
            let format = common.validate()?;
            let output = run_gnp_search(n, p, trials, seed, &common.options(false))
                .map_err(CliError::from_harness)?;
            finish_campaign(&output, format, &common)
        }
        Command::Kneser {
            p_min,
            p_max,
            common,
        } => {
            let format = common.validate()?;
            let output = run_kneser_family(p_min, p_max, &common.options(false))
                .map_err(CliError::from_harness)?;
            finish_campaign(&output, format, &common)
        }
    }
}

/// A graph6 string as given, or a path to a file holding a graph6 line or
/// an edge list.
fn load_graph(input: &str) -> Result<Graph, CliError> {
    let trimmed = input.trim();
    if let Ok(graph) = parse_graph6(trimmed) {
        return Ok(graph);
    }
    let path = Path::new(input);
    if !path.is_file() {
        return Err(CliError::input(format!(
            "`{input}` is neither a graph6 string nor a readable file"
        )));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let first_line = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if let Some(line) = first_line {
        let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if let Ok(graph) = parse_graph6(body) {
            return Ok(graph);
        }
    }
    parse_edge_list(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn emit_records(
    records: &[GraphRecord],
    format: ReportFormat,
    common: &Common,
) -> Result<(), CliError> {
    match &common.out {
        Some(path) => write_report_to_path(records, format, path).map_err(CliError::from_harness),
        None => write_report(records, format, io::stdout().lock())
            .map_err(|e| CliError::input(format!("writing records to stdout: {e}"))),
    }
}

/// Records to stdout or --out, summary to stderr, exit code per contract.
fn finish_campaign(
    output: &CampaignOutput,
    format: ReportFormat,
    common: &Common,
) -> Result<ExitCode, CliError> {
    emit_records(&output.records, format, common)?;
    eprintln!("{}", render_summary(&output.summary));
    Ok(summary_exit(&output.summary))
}

fn summary_exit(summary: &CampaignSummary) -> ExitCode {
    if summary.internally_inconsistent() {
        ExitCode::from(EXIT_INCONSISTENT)
    } else if summary.falsifiable_violations() > 0 {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}

fn record_exit(record: &GraphRecord) -> ExitCode {
    if !record.consistency_failures.is_empty() || !record.proven_violations().is_empty() {
        ExitCode::from(EXIT_INCONSISTENT)
    } else if !record.falsifiable_violations().is_empty() {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}
