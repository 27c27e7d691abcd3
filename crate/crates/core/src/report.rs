//! Report rendering: aligned text, CSV, and JSON, each carrying the resolved
//! run configuration in its header so every artifact states how it was made.
//!
//! Numeric policy: text reports print 6 significant digits; CSV and JSON
//! carry full precision (shortest round-tripping representation).

use std::fmt::Write as _;

use serde::Serialize;

use crate::geometry::{ComparisonRow, DomainSummary, Normalize};
use crate::metrics::RocCurve;
use crate::threshold::ThresholdReport;

pub const TOOL_NAME: &str = "scorelab";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Output structure selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// The resolved run configuration echoed into every report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportMeta {
    pub command: String,
    /// Ordered `key=value` pairs describing the fully-resolved config.
    pub config: Vec<(String, String)>,
}

impl ReportMeta {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            config: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl std::fmt::Display) {
        self.config.push((key.into(), value.to_string()));
    }

    fn header_lines(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {TOOL_NAME} {TOOL_VERSION}");
        let _ = writeln!(out, "# command: {}", self.command);
        let config = self
            .config
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "# config: {config}");
        out
    }

    fn json_value(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.config {
            map.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        serde_json::json!({
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "command": self.command,
            "config": map,
        })
    }
}

/// Format with a fixed number of significant digits, deterministically.
pub fn fmt_sig(v: f64, sig: u32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| fmt_sig(x, 6))
}

fn fmt_full_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn align_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:<width$}", width = widths[i]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn csv_table(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line = row
            .iter()
            .map(|c| csv_escape(c))
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

// ─── domain (analyze / compare) reports ─────────────────────────────────────

/// One row of the per-class geometry report.
#[derive(Debug, Clone, Serialize)]
pub struct DomainReportRow {
    pub class: String,
    pub variant: String,
    #[serde(flatten)]
    pub summary: DomainSummaryCells,
}

/// The numeric cells of a domain row.
#[derive(Debug, Clone, Serialize)]
pub struct DomainSummaryCells {
    pub radius: f64,
    pub normalize: Option<f64>,
    pub density: f64,
    pub n: usize,
    pub center: f64,
    pub center_method: String,
    pub min: f64,
    pub max: f64,
}

impl DomainSummaryCells {
    pub fn from_summary(s: &DomainSummary) -> Self {
        Self {
            radius: s.radius,
            normalize: match s.normalize {
                Normalize::Value(v) => Some(v),
                Normalize::OneSided => None,
            },
            density: s.density,
            n: s.n,
            center: s.center.value,
            center_method: s.center.method.to_string(),
            min: s.min,
            max: s.max,
        }
    }
}

/// The geometry report: one row per class (and per variant when comparing).
#[derive(Debug, Clone)]
pub struct DomainReport {
    pub meta: ReportMeta,
    pub rows: Vec<DomainReportRow>,
    /// Interpretive annotations; they never feed back into computation.
    pub annotations: Vec<String>,
}

impl DomainReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    fn table_cells(&self, full: bool) -> Vec<Vec<String>> {
        let fmt = |v: f64| {
            if full {
                v.to_string()
            } else {
                fmt_sig(v, 6)
            }
        };
        let fmt_o = |v: Option<f64>| if full { fmt_full_opt(v) } else { fmt_opt(v) };
        let mut rows = vec![vec![
            "class".to_string(),
            "variant".to_string(),
            "radius".to_string(),
            "normalize".to_string(),
            "density".to_string(),
        ]];
        for r in &self.rows {
            rows.push(vec![
                r.class.clone(),
                r.variant.clone(),
                fmt(r.summary.radius),
                fmt_o(r.summary.normalize),
                fmt(r.summary.density),
            ]);
        }
        rows
    }

    fn to_text(&self) -> String {
        let mut out = self.meta.header_lines();
        out.push('\n');
        out.push_str(&align_table(&self.table_cells(false)));
        if !self.annotations.is_empty() {
            out.push('\n');
            for a in &self.annotations {
                let _ = writeln!(out, "note: {a}");
            }
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = self.meta.header_lines();
        out.push_str(&csv_table(&self.table_cells(true)));
        out
    }

    fn to_json(&self) -> String {
        let value = serde_json::json!({
            "meta": self.meta.json_value(),
            "rows": self.rows,
            "annotations": self.annotations,
        });
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Build the delta annotations for one compared class.
pub fn comparison_annotations(class: &str, row: &ComparisonRow) -> Vec<String> {
    let mut notes = Vec::new();
    if row.domain_expanded {
        notes.push(format!(
            "{class}: domain expanded (radius delta +{})",
            fmt_sig(row.radius_delta, 6)
        ));
    }
    if row.domain_more_cohesive {
        notes.push(format!(
            "{class}: domain more cohesive (density delta {})",
            fmt_sig(row.density_delta, 6)
        ));
    }
    notes
}

// ─── threshold report ────────────────────────────────────────────────────────

/// Render the strategy/threshold table.
pub fn render_threshold_report(
    meta: &ReportMeta,
    report: &ThresholdReport,
    format: OutputFormat,
) -> String {
    let has_dev = report.rows.iter().any(|r| r.dev.is_some());
    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let full = format == OutputFormat::Csv;
            let fmt = |v: f64| {
                if full {
                    v.to_string()
                } else {
                    fmt_sig(v, 6)
                }
            };
            let mut header = vec![
                "strategy".to_string(),
                "threshold".to_string(),
                "note".to_string(),
                "train_fpr".to_string(),
                "train_tpr".to_string(),
                "train_acer".to_string(),
            ];
            if has_dev {
                header.extend(["dev_fpr".into(), "dev_tpr".into(), "dev_acer".into()]);
            }
            let mut rows = vec![header];
            for r in &report.rows {
                let mut row = vec![
                    r.candidate.strategy.to_string(),
                    fmt(r.candidate.value),
                    r.candidate.note.as_str().to_string(),
                    fmt(r.train.fpr),
                    fmt(r.train.tpr),
                    fmt(r.train.acer),
                ];
                if has_dev {
                    match &r.dev {
                        Some(d) => row.extend([fmt(d.fpr), fmt(d.tpr), fmt(d.acer)]),
                        None => row.extend(["n/a".into(), "n/a".into(), "n/a".into()]),
                    }
                }
                rows.push(row);
            }
            let mut out = meta.header_lines();
            if format == OutputFormat::Text {
                out.push('\n');
                out.push_str(&align_table(&rows));
            } else {
                out.push_str(&csv_table(&rows));
            }
            out
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "meta": meta.json_value(),
                "rows": report.rows,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

// ─── roc report ──────────────────────────────────────────────────────────────

/// Render the ROC sweep (points plus AUC).
pub fn render_roc_report(meta: &ReportMeta, roc: &RocCurve, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut rows = vec![vec![
                "threshold".to_string(),
                "fpr".to_string(),
                "tpr".to_string(),
            ]];
            for p in &roc.points {
                rows.push(vec![
                    fmt_sig(p.threshold, 6),
                    fmt_sig(p.fpr, 6),
                    fmt_sig(p.tpr, 6),
                ]);
            }
            let mut out = meta.header_lines();
            out.push('\n');
            out.push_str(&align_table(&rows));
            out.push('\n');
            let _ = writeln!(out, "auc = {}", fmt_sig(roc.auc, 6));
            out
        }
        OutputFormat::Csv => {
            let mut out = meta.header_lines();
            let _ = writeln!(out, "# auc={}", roc.auc);
            let mut rows = vec![vec![
                "threshold".to_string(),
                "fpr".to_string(),
                "tpr".to_string(),
            ]];
            for p in &roc.points {
                rows.push(vec![
                    p.threshold.to_string(),
                    p.fpr.to_string(),
                    p.tpr.to_string(),
                ]);
            }
            out.push_str(&csv_table(&rows));
            out
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "meta": meta.json_value(),
                "points": roc.points,
                "auc": roc.auc,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
            s.push('\n');
            s
        }
    }
}
