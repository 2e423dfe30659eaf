//! Uniform result record for every verification scan, plus JSON/CSV emission.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of one named check.
///
/// `pass` follows the margin convention: the check passed iff
/// `worst_margin >= -tolerance`, with the tolerance echoed in `params_echo`
/// (key `"tolerance"`). Structural failures set `worst_margin` to -inf.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub check_name: String,
    pub params_echo: BTreeMap<String, serde_json::Value>,
    pub samples: u64,
    pub worst_margin: f64,
    pub onset_radius: Option<f64>,
    pub pass: bool,
    pub excluded_points: u64,
    pub notes: String,
}

impl VerificationReport {
    /// Margin-convention constructor: pass ⟺ worst_margin ≥ -tolerance.
    pub fn from_margin(check_name: &str, samples: u64, worst_margin: f64, tolerance: f64) -> Self {
        let mut report = VerificationReport {
            check_name: check_name.to_string(),
            params_echo: BTreeMap::new(),
            samples,
            worst_margin,
            onset_radius: None,
            pass: worst_margin >= -tolerance && !worst_margin.is_nan(),
            excluded_points: 0,
            notes: String::new(),
        };
        report.echo("tolerance", tolerance);
        report
    }

    /// Structural failure (no meaningful margin).
    pub fn failed(check_name: &str, notes: impl Into<String>) -> Self {
        VerificationReport {
            check_name: check_name.to_string(),
            params_echo: BTreeMap::new(),
            samples: 0,
            worst_margin: f64::NEG_INFINITY,
            onset_radius: None,
            pass: false,
            excluded_points: 0,
            notes: notes.into(),
        }
    }

    pub fn echo(&mut self, key: &str, value: impl Into<serde_json::Value>) -> &mut Self {
        self.params_echo.insert(key.to_string(), value.into());
        self
    }

    pub fn with_onset(mut self, onset: f64) -> Self {
        self.onset_radius = Some(onset);
        self
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }
}

/// Report container as written to disk: body is diffable, timestamps live
/// only in `meta`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportSet {
    pub meta: BTreeMap<String, String>,
    pub reports: Vec<VerificationReport>,
}

impl ReportSet {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        ReportSet { meta: BTreeMap::new(), reports }
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    /// Body serialization: reports only, stable field order, no metadata.
    pub fn body_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.reports)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::config("format", format!("unknown format `{other}`"))),
        }
    }
}

/// Write reports to `path`. JSON carries the full records under a `reports`
/// field; CSV has the fixed column order
/// `check_name, samples, worst_margin, onset_radius, pass`.
pub fn emit_report(set: &ReportSet, format: ReportFormat, path: &Path) -> Result<()> {
    let display = path.display().to_string();
    match format {
        ReportFormat::Json => {
            let body = serde_json::to_string_pretty(set)?;
            std::fs::write(path, body.as_bytes()).map_err(|e| Error::io(&display, e))?;
        }
        ReportFormat::Csv => {
            let file = std::fs::File::create(path).map_err(|e| Error::io(&display, e))?;
            let mut w = csv::Writer::from_writer(file);
            w.write_record(["check_name", "samples", "worst_margin", "onset_radius", "pass"])?;
            for r in &set.reports {
                w.write_record([
                    r.check_name.clone(),
                    r.samples.to_string(),
                    r.worst_margin.to_string(),
                    r.onset_radius.map(|o| o.to_string()).unwrap_or_default(),
                    r.pass.to_string(),
                ])?;
            }
            w.flush().map_err(|e| Error::io(&display, e))?;
        }
    }
    Ok(())
}

/// Read back a JSON report file written by [`emit_report`].
pub fn load_report(path: &Path) -> Result<ReportSet> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(&display, e))?;
    Ok(serde_json::from_str(&text)?)
}

/// Render a one-line console summary per report.
pub fn print_summary(set: &ReportSet, out: &mut impl Write) -> std::io::Result<()> {
    for r in &set.reports {
        writeln!(
            out,
            "{:<34} {}  samples={} worst_margin={:+.3e}{}{}",
            r.check_name,
            if r.pass { "PASS" } else { "FAIL" },
            r.samples,
            r.worst_margin,
            r.onset_radius.map(|o| format!(" onset={o:.6e}")).unwrap_or_default(),
            if r.excluded_points > 0 { format!(" excluded={}", r.excluded_points) } else { String::new() },
        )?;
    }
    Ok(())
}
