//! Report structures and the text / json / csv emitters.
//!
//! Everything written to stdout is deterministic: exact rationals serialized
//! as `p/q` strings (integers without `/1`), parameters in sorted key order,
//! and no timings or timestamps. Timing goes to stderr via [`print_timing`],
//! so re-running the same checks yields byte-identical stdout.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One row of a check: exact left/right sides (already serialized) and their
/// comparison.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub n: u64,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// The outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<ReportRow>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Writes the elapsed time to stderr, keeping stdout reproducible.
pub fn print_timing(report: &IdentityReport) {
    eprintln!("# {} finished in {:.1?}", report.identity, report.elapsed);
}

/// Emits `reports` in the chosen format: text blocks, one JSON object per
/// report (one per line), or a single CSV table.
pub fn emit(
    out: &mut impl Write,
    reports: &[IdentityReport],
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Text => emit_text(out, reports),
        Format::Json => emit_json(out, reports),
        Format::Csv => emit_csv(out, reports),
    }
}

fn params_line(params: &BTreeMap<String, String>) -> String {
    if params.is_empty() {
        return "-".to_string();
    }
    params
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_text(out: &mut impl Write, reports: &[IdentityReport]) -> std::io::Result<()> {
    for (index, report) in reports.iter().enumerate() {
        if index > 0 {
            writeln!(out)?;
        }
        writeln!(out, "identity: {}", report.identity)?;
        writeln!(out, "params: {}", params_line(&report.params))?;
        for row in &report.rows {
            writeln!(
                out,
                "  n={:<3} lhs={} rhs={} {}",
                row.n,
                row.lhs,
                row.rhs,
                if row.pass { "ok" } else { "FAIL" }
            )?;
        }
        writeln!(
            out,
            "result: {} ({} rows)",
            if report.pass { "PASS" } else { "FAIL" },
            report.rows.len()
        )?;
    }
    Ok(())
}

fn emit_json(out: &mut impl Write, reports: &[IdentityReport]) -> std::io::Result<()> {
    for report in reports {
        serde_json::to_writer(&mut *out, report)?;
        writeln!(out)?;
    }
    Ok(())
}

fn emit_csv(out: &mut impl Write, reports: &[IdentityReport]) -> std::io::Result<()> {
    writeln!(out, "identity,params,n,lhs,rhs,pass")?;
    for report in reports {
        let params = params_line(&report.params);
        for row in &report.rows {
            writeln!(
                out,
                "{},\"{}\",{},{},{},{}",
                report.identity, params, row.n, row.lhs, row.rhs, row.pass
            )?;
        }
    }
    Ok(())
}
