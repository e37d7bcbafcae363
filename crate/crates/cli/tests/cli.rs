//! End-to-end tests of the installed binary: argument handling, report
//! routing, env-var overrides, and the exit-code contract.

use std::io::Write;
use std::process::{Command, Output};

use cliquebound_core::generators::{complete_graph, cycle_graph, kneser_graph};
use cliquebound_core::graph6::encode_graph6;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliquebound"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn invariants_for_graph6_string() {
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let output = run(&["invariants", &k5]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));

    let record: Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(record["n"], 5);
    assert_eq!(record["m"], 10);
    assert_eq!(record["omega"], 5);
    // chi is opt-in and absent without --with-chi
    assert_eq!(record["chi"], Value::Null);
    assert_eq!(record["evaluations"].as_array().unwrap().len(), 14);
    assert_eq!(record["schema_version"], "1.0.0");
}

#[test]
fn invariants_with_chi() {
    let c5 = encode_graph6(&cycle_graph(5).unwrap());
    let output = run(&["invariants", &c5, "--with-chi"]);
    assert_eq!(output.status.code(), Some(0));
    let record: Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(record["omega"], 2);
    assert_eq!(record["chi"], 3);
    assert_eq!(record["weakly_perfect"], false);
}

#[test]
fn invariants_from_edge_list_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# triangle plus a pendant").unwrap();
    writeln!(file, "4").unwrap();
    writeln!(file, "0 1").unwrap();
    writeln!(file, "1 2").unwrap();
    writeln!(file, "0 2").unwrap();
    writeln!(file, "2 3").unwrap();
    file.flush().unwrap();

    let output = run(&["invariants", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let record: Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(record["n"], 4);
    assert_eq!(record["m"], 4);
    assert_eq!(record["triangle_count"], 1);
}

#[test]
fn invariants_from_graph6_file_with_header() {
    let petersen = encode_graph6(&kneser_graph(5, 2).unwrap());
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, ">>graph6<<{petersen}").unwrap();
    file.flush().unwrap();

    let output = run(&["invariants", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let record: Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(record["n"], 10);
    assert_eq!(record["m"], 15);
    assert_eq!(record["omega"], 2);
}

#[test]
fn rejects_garbage_input_with_code_2() {
    let output = run(&["invariants", "definitely-not-a-graph"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("error:"));
    assert!(stdout_of(&output).is_empty());
}

#[test]
fn rejects_missing_corpus_with_code_2() {
    let output = run(&["check", "--corpus", "/no/such/file.g6"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("error:"));
}

#[test]
fn rejects_bad_format_with_code_2() {
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let output = run(&["invariants", &k5, "--format", "xml"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("xml"));
}

#[test]
fn rejects_bad_tolerance_with_code_2() {
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let output = run(&["invariants", &k5, "--tol-zero", "-1.0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn corpus_check_skips_malformed_lines() {
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let c7 = encode_graph6(&cycle_graph(7).unwrap());
    let petersen = encode_graph6(&kneser_graph(5, 2).unwrap());
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        ">>graph6<<{k5}\n\n{c7}\nthis line is broken\n{petersen}\n"
    )
    .unwrap();
    file.flush().unwrap();

    let output = run(&["check", "--corpus", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));

    let stdout = stdout_of(&output);
    assert_eq!(stdout.lines().count(), 3);
    let summary = stderr_of(&output);
    assert!(summary.contains("\"graphs_processed\": 3"));
    assert!(summary.contains("\"graphs_skipped\": 1"));
    assert!(summary.contains("line 4"));
}

#[test]
fn sweep_reports_falsifiable_violations_with_code_1() {
    // The disconnected perfect matchings of K4 genuinely break the
    // connected-graph eigenvalue inequality, so the n <= 4 sweep must
    // surface them as re-verified violation records and exit 1.
    let output = run(&["sweep", "--n-max", "4"]);
    assert_eq!(output.status.code(), Some(1), "{}", stderr_of(&output));

    let stdout = stdout_of(&output);
    assert_eq!(stdout.lines().count(), 3);
    for line in stdout.lines() {
        let record: Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["violations"], serde_json::json!(["elphick_splus"]));
        assert_eq!(record["reverified"], true);
    }
    assert!(stderr_of(&output).contains("\"elphick_splus\": 3"));
}

#[test]
fn small_sweep_is_clean() {
    let output = run(&["sweep", "--n-max", "3"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    assert!(stdout_of(&output).is_empty());
    assert!(stderr_of(&output).contains("\"graphs_processed\": 11"));
}

#[test]
fn sweep_rejects_oversized_n_with_code_2() {
    let output = run(&["sweep", "--n-max", "12"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn gnp_runs_are_reproducible() {
    let args = [
        "gnp", "--n", "30", "--p", "0.5", "--trials", "5", "--seed", "7",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr_of(&first));
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stderr_of(&first).contains("\"mean_omega\""));
}

#[test]
fn gnp_rejects_bad_probability_with_code_2() {
    let output = run(&[
        "gnp", "--n", "10", "--p", "1.5", "--trials", "1", "--seed", "0",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn kneser_family_summary() {
    // KG(4,2) is the disconnected matching 3K2 and genuinely violates the
    // connected-graph eigenvalue inequality, so including p = 4 exits 1
    // while the family chain itself still holds.
    let output = run(&["kneser", "--p-min", "4", "--p-max", "6"]);
    assert_eq!(output.status.code(), Some(1), "{}", stderr_of(&output));
    let summary = stderr_of(&output);
    assert!(summary.contains("\"kneser_rows\""));
    assert!(summary.contains("\"reduction_margin\": 2"));
    assert!(summary.contains("\"reduction_margin\": 11"));
    assert!(summary.contains("\"elphick_splus\": 1"));
    // one record per family member on stdout
    assert_eq!(stdout_of(&output).lines().count(), 3);

    let connected = run(&["kneser", "--p-min", "5", "--p-max", "6"]);
    assert_eq!(
        connected.status.code(),
        Some(0),
        "{}",
        stderr_of(&connected)
    );
    assert_eq!(stdout_of(&connected).lines().count(), 2);
}

#[test]
fn kneser_rejects_small_p_with_code_2() {
    let output = run(&["kneser", "--p-min", "3", "--p-max", "5"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn csv_format_via_flag_and_env() {
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let via_flag = run(&["invariants", &k5, "--format", "csv"]);
    assert_eq!(via_flag.status.code(), Some(0));
    let body = stdout_of(&via_flag);
    assert!(body.starts_with("source,graph6,n,m,"));
    assert_eq!(body.lines().count(), 2);

    let via_env = bin()
        .args(["invariants", &k5])
        .env("CLIQUEBOUND_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(via_env.stdout, via_flag.stdout);
}

#[test]
fn out_flag_routes_records_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("records.jsonl");
    let k5 = encode_graph6(&complete_graph(5).unwrap());
    let output = run(&["invariants", &k5, "--out", out_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    assert!(stdout_of(&output).is_empty());

    let written = std::fs::read_to_string(&out_path).unwrap();
    let record: Value = serde_json::from_str(written.trim()).unwrap();
    assert_eq!(record["omega"], 5);
}

#[test]
fn node_budget_abort_is_reported_in_row() {
    let k6 = encode_graph6(&complete_graph(6).unwrap());
    let output = run(&["invariants", &k6, "--node-budget", "1"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let record: Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(record["omega"], Value::Null);
    assert!(record["solver_aborted"].is_string());
    // spectral work still completes
    assert_eq!(record["n"], 6);
    assert!(record["mu"].as_f64().unwrap() > 4.9);
}
