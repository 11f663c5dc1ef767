//! Human-readable and JSON renderings of verification reports.
//!
//! JSON schema (version "1"):
//!
//! ```text
//! { "version": "1",
//!   "reports": [ { "identity": "thm1" | ... | "asymptotic",
//!                  "parameters": { "<name>": <integer>, ... },
//!                  "mode": "series" | "symbolic" | "numeric",
//!                  "passed": <bool>,
//!                  "witness": { "index": <integer>, "lhs": "<string>", "rhs": "<string>" } } ] }
//! ```
//!
//! `witness` is present exactly when `passed` is false. Elapsed times are
//! left out so the document is byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use catalan_ode::verify::suite::sort_reports;
use catalan_ode::verify::{IdentityId, Mode, VerificationReport, Witness};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireDocument {
    version: String,
    reports: Vec<WireReport>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireReport {
    identity: String,
    parameters: BTreeMap<String, i64>,
    mode: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<WireWitness>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireWitness {
    index: i64,
    lhs: String,
    rhs: String,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported report version {0:?}")]
    Version(String),
    #[error("report {0}: {1}")]
    Content(usize, String),
}

/// Renders reports in deterministic order (identity, then parameters).
pub fn emit_report(reports: &[VerificationReport], format: Format) -> String {
    let mut sorted = reports.to_vec();
    sort_reports(&mut sorted);
    match format {
        Format::Json => emit_json(&sorted),
        Format::Human => emit_human(&sorted),
    }
}

fn emit_json(reports: &[VerificationReport]) -> String {
    let doc = WireDocument {
        version: SCHEMA_VERSION.to_string(),
        reports: reports
            .iter()
            .map(|r| WireReport {
                identity: r.identity().to_string(),
                parameters: r.parameters().clone(),
                mode: r.mode().to_string(),
                passed: r.passed(),
                witness: r.witness().map(|w| WireWitness {
                    index: w.index,
                    lhs: w.lhs.clone(),
                    rhs: w.rhs.clone(),
                }),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("report serialization cannot fail")
}

/// Parses a JSON document produced by [`emit_report`]. Elapsed times are
/// not part of the format and come back as zero.
pub fn parse_json_report(text: &str) -> Result<Vec<VerificationReport>, ReportError> {
    let doc: WireDocument = serde_json::from_str(text)?;
    if doc.version != SCHEMA_VERSION {
        return Err(ReportError::Version(doc.version));
    }
    doc.reports
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            let bad = |msg: String| ReportError::Content(k, msg);
            let identity: IdentityId = r.identity.parse().map_err(|e| bad(format!("{e}")))?;
            let mode: Mode = r.mode.parse().map_err(|e| bad(format!("{e}")))?;
            if r.passed == r.witness.is_some() {
                return Err(bad(
                    "witness must be present exactly when passed is false".into()
                ));
            }
            let witness = r.witness.map(|w| Witness {
                index: w.index,
                lhs: w.lhs,
                rhs: w.rhs,
            });
            Ok(VerificationReport::new(
                identity,
                r.parameters,
                mode,
                witness,
                Duration::ZERO,
            ))
        })
        .collect()
}

fn format_parameters(params: &BTreeMap<String, i64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_human(reports: &[VerificationReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.identity().to_string(),
                format_parameters(r.parameters()),
                r.mode().to_string(),
                if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                format!("{:.3} ms", r.elapsed().as_secs_f64() * 1e3),
            ]
        })
        .collect();
    let header = ["identity", "parameters", "mode", "result", "time"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let mut line = |cells: &[String; 5]| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if k == 4 {
                let _ = write!(s, "{cell:>w$}");
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&header);
    for row in &rows {
        line(row);
    }

    for r in reports.iter().filter(|r| !r.passed()) {
        let w = r.witness().expect("failed report carries a witness");
        let _ = writeln!(
            out,
            "FAIL {} [{}] {}: first mismatch at index {}: lhs = {}, rhs = {}",
            r.identity(),
            format_parameters(r.parameters()),
            r.mode(),
            w.index,
            w.lhs,
            w.rhs
        );
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(out, "{} passed, {} failed", reports.len() - failed, failed);
    out
}
