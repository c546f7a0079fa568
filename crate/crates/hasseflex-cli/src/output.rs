//! JSON report serialization and CSV writers.

use hasseflex_core::report::{Verdict, VerificationReport};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// JSON shape of one report: `{id, params, verdict, computed, expected,
/// counterexample?, millis}`.
#[derive(Serialize)]
pub struct JsonReport<'a> {
    pub id: &'a str,
    pub params: &'a str,
    pub verdict: String,
    pub computed: &'a str,
    pub expected: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<&'a str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<&'a str>,
    pub millis: u128,
}

pub fn to_json(report: &VerificationReport, millis: u128) -> serde_json::Value {
    serde_json::to_value(JsonReport {
        id: &report.id,
        params: &report.params,
        verdict: report.verdict.to_string(),
        computed: &report.computed,
        expected: &report.expected,
        counterexample: report.counterexample.as_deref(),
        assumptions: report.assumptions.iter().map(|s| s.as_str()).collect(),
        millis,
    })
    .expect("report serializes")
}

pub fn print_report_line(report: &VerificationReport) {
    let tag = match report.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Refused => "REFUSED",
    };
    println!("[{tag}] {} ({})", report.id, report.params);
    if report.verdict == Verdict::Fail {
        println!("      computed: {}", report.computed);
        println!("      expected: {}", report.expected);
        if let Some(ce) = &report.counterexample {
            println!("      counterexample: {ce}");
        }
    }
}

/// Writes a CSV with an optional provenance header (suppressed by
/// `--no-header` for byte-identical reruns).
pub fn write_csv(
    path: &Path,
    header: Option<String>,
    columns: &str,
    rows: impl Iterator<Item = String>,
) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    if let Some(h) = header {
        writeln!(f, "# {h}")?;
    }
    writeln!(f, "{columns}")?;
    for row in rows {
        writeln!(f, "{row}")?;
    }
    Ok(())
}

/// Provenance header line for generated files.
pub fn provenance(tool_line: &str) -> String {
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("{tool_line} generated-at={now}")
}
