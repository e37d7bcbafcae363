//! Report writers. JSONL is the full-fidelity format: one record object
//! per line, keys in fixed declaration order, floats in shortest
//! round-trip form — so identical campaigns produce byte-identical files.
//! CSV is the flat summary table: fixed columns plus a `<id>_value` and
//! `<id>_slack` pair per bound.

use std::io::{self, Write};
use std::path::Path;

use crate::bounds::BoundId;
use crate::error::HarnessError;

use super::record::{CampaignSummary, GraphRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!(
                "unknown report format `{other}`; expected jsonl or csv"
            )),
        }
    }
}

/// One JSON object per record, newline-terminated.
pub fn write_jsonl<W: Write>(records: &[GraphRecord], mut writer: W) -> io::Result<()> {
    for record in records {
        let line = serde_json::to_string(record)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        writer.write_all(line.as_bytes())?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// The JSONL payload as a string (handy for byte-identity checks).
pub fn render_jsonl(records: &[GraphRecord]) -> String {
    let mut buffer = Vec::new();
    write_jsonl(records, &mut buffer).expect("writing to memory cannot fail");
    String::from_utf8(buffer).expect("JSON is UTF-8")
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

const CSV_FIXED_COLUMNS: [&str; 20] = [
    "source",
    "graph6",
    "n",
    "m",
    "average_degree",
    "mu",
    "mu_min",
    "inertia_positive",
    "inertia_negative",
    "inertia_zero",
    "s_plus",
    "s_minus",
    "triangle_count",
    "triangle_free",
    "omega",
    "chi",
    "weakly_perfect",
    "non_bound_witness",
    "reverified",
    "solver_aborted",
];

/// CSV column names, in order: the fixed columns, then `<id>_value` and
/// `<id>_slack` for every bound id.
pub fn csv_header() -> Vec<String> {
    let mut header: Vec<String> = CSV_FIXED_COLUMNS.iter().map(|s| s.to_string()).collect();
    for id in BoundId::ALL {
        header.push(format!("{id}_value"));
        header.push(format!("{id}_slack"));
    }
    header
}

fn opt_float(value: Option<f64>) -> String {
    value.map(|v| format!("{v}")).unwrap_or_default()
}

/// Flat summary table, header always present (header-only when empty).
pub fn write_csv<W: Write>(records: &[GraphRecord], writer: W) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(csv_header()).map_err(csv_error)?;
    for record in records {
        let mut row: Vec<String> = vec![
            record.source.clone(),
            record.graph6.clone(),
            record.n.to_string(),
            record.m.to_string(),
            format!("{}", record.average_degree),
            format!("{}", record.mu),
            format!("{}", record.mu_min),
            record.inertia_positive.to_string(),
            record.inertia_negative.to_string(),
            record.inertia_zero.to_string(),
            format!("{}", record.s_plus),
            format!("{}", record.s_minus),
            record.triangle_count.to_string(),
            record.triangle_free.to_string(),
            record.omega.map(|w| w.to_string()).unwrap_or_default(),
            record.chi.map(|c| c.to_string()).unwrap_or_default(),
            record
                .weakly_perfect
                .map(|w| w.to_string())
                .unwrap_or_default(),
            record.non_bound_witness.to_string(),
            record.reverified.to_string(),
            record.solver_aborted.clone().unwrap_or_default(),
        ];
        for id in BoundId::ALL {
            let evaluation = record
                .evaluations
                .iter()
                .find(|e| e.id == id)
                .expect("records carry every bound id");
            row.push(opt_float(evaluation.value));
            row.push(opt_float(evaluation.slack));
        }
        out.write_record(&row).map_err(csv_error)?;
    }
    out.flush()
}

/// Writes `records` in the chosen format.
pub fn write_report<W: Write>(
    records: &[GraphRecord],
    format: ReportFormat,
    writer: W,
) -> io::Result<()> {
    match format {
        ReportFormat::Jsonl => write_jsonl(records, writer),
        ReportFormat::Csv => write_csv(records, writer),
    }
}

/// Writes `records` to a file, creating or truncating it.
pub fn write_report_to_path(
    records: &[GraphRecord],
    format: ReportFormat,
    path: &Path,
) -> Result<(), HarnessError> {
    let wrap = |source: io::Error| HarnessError::Io {
        path: path.display().to_string(),
        source,
    };
    let file = std::fs::File::create(path).map_err(wrap)?;
    write_report(records, format, io::BufWriter::new(file)).map_err(wrap)
}

/// Human-readable summary JSON (config echo, counters, samples).
pub fn render_summary(summary: &CampaignSummary) -> String {
    serde_json::to_string_pretty(summary).expect("summary serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, kneser_graph};
    use crate::harness::{evaluate_graph, EvalOptions};

    fn sample_records() -> Vec<GraphRecord> {
        let options = EvalOptions {
            with_chi: true,
            ..EvalOptions::default()
        };
        [
            complete_graph(5).unwrap(),
            cycle_graph(7).unwrap(),
            kneser_graph(5, 2).unwrap(),
        ]
        .iter()
        .enumerate()
        .map(|(i, g)| evaluate_graph(g, &format!("corpus:{}", i + 1), &options).unwrap())
        .collect()
    }

    #[test]
    fn jsonl_round_trips_and_is_stable() {
        let records = sample_records();
        let text = render_jsonl(&records);
        assert_eq!(text.lines().count(), 3);
        let parsed: Vec<GraphRecord> = text
            .lines()
            .map(|line| serde_json::from_str(line).unwrap())
            .collect();
        assert_eq!(parsed, records);
        assert_eq!(render_jsonl(&records), text);
    }

    #[test]
    fn csv_has_fixed_columns() {
        let records = sample_records();
        let mut buffer = Vec::new();
        write_csv(&records, &mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let mut lines = text.lines();
        let header = lines.next().unwrap();
        let columns: Vec<&str> = header.split(',').collect();
        assert_eq!(columns.len(), 20 + 2 * BoundId::ALL.len());
        assert_eq!(columns[0], "source");
        assert!(columns.contains(&"conjecture1_value"));
        assert!(columns.contains(&"conjecture1_slack"));
        assert_eq!(lines.count(), 3);
    }

    #[test]
    fn empty_report_is_header_only_csv_and_empty_jsonl() {
        let mut buffer = Vec::new();
        write_csv(&[], &mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert_eq!(render_jsonl(&[]), "");
    }

    #[test]
    fn report_files_round_trip() {
        let records = sample_records();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.jsonl");
        write_report_to_path(&records, ReportFormat::Jsonl, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, render_jsonl(&records));

        let missing = dir.path().join("no-such-dir").join("report.csv");
        assert!(write_report_to_path(&records, ReportFormat::Csv, &missing).is_err());
    }

    #[test]
    fn format_parses_from_flags() {
        assert_eq!(
            "jsonl".parse::<ReportFormat>().unwrap(),
            ReportFormat::Jsonl
        );
        assert_eq!("csv".parse::<ReportFormat>().unwrap(), ReportFormat::Csv);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
