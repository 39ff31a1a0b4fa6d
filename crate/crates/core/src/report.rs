//! Rendering of computation reports: JSON (exact, schema-stable), CSV and
//! markdown with a display-only decimal column. Identical inputs produce
//! byte-identical output.

use serde::Serialize;

use crate::kodaira::Certificate;
use crate::pipeline::PipelineReport;
use crate::pointed::{DeltaEntry, PointedDivisorClass};
use crate::rat::Rat;

/// Output format selector for the CLI surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format {other:?} (json|csv|markdown)")),
        }
    }
}

const DECIMAL_PLACES: u32 = 6;

/// A flat key/value table used by the csv and markdown renderers.
struct Table {
    rows: Vec<(String, String, Option<String>)>,
}

impl Table {
    fn new() -> Self {
        Table { rows: Vec::new() }
    }

    fn rat(&mut self, key: impl Into<String>, value: &Rat) {
        self.rows.push((
            key.into(),
            value.to_string(),
            Some(value.to_decimal_string(DECIMAL_PLACES)),
        ));
    }

    fn text(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.rows.push((key.into(), value.into(), None));
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("field,value,decimal\n");
        for (k, v, d) in &self.rows {
            let quote = |s: &str| {
                if s.contains(',') || s.contains('"') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.to_string()
                }
            };
            out.push_str(&format!(
                "{},{},{}\n",
                quote(k),
                quote(v),
                d.as_deref().unwrap_or("")
            ));
        }
        out
    }

    fn to_markdown(&self) -> String {
        let mut out = String::from("| field | value | decimal |\n|---|---|---|\n");
        for (k, v, d) in &self.rows {
            out.push_str(&format!("| {k} | {v} | {} |\n", d.as_deref().unwrap_or("")));
        }
        out
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

pub fn render_pipeline(report: &PipelineReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(report),
        OutputFormat::Csv | OutputFormat::Markdown => {
            let mut t = Table::new();
            t.rat("i", &Rat::from_int(report.i as i64));
            t.rat("prefactor", &report.prefactor);
            t.rat("raw.lambda", &report.raw.lambda);
            for (j, b) in report.raw.delta.iter().enumerate() {
                t.rat(format!("raw.delta_{j}"), b);
            }
            t.rat("normalized.lambda", &report.normalized.lambda);
            for (j, b) in report.normalized.delta.iter().enumerate() {
                t.rat(format!("normalized.delta_{j}"), b);
            }
            t.rat("slope", &report.slope);
            t.rat("bn_slope", &report.bn_slope);
            t.text(
                "flags.leading_match_closed_form",
                report.flags.leading_match_closed_form.to_string(),
            );
            t.text(
                "flags.first_case_matches_closed_form",
                report.flags.first_case_matches_closed_form.to_string(),
            );
            t.text("flags.min_bj_is_b0", report.flags.min_bj_is_b0.to_string());
            t.text(
                "flags.slope_in_window",
                report.flags.slope_in_window.to_string(),
            );
            for (n, a) in report.annotations.iter().enumerate() {
                t.text(format!("annotation_{n}"), a.clone());
            }
            for (n, a) in report.assumptions.iter().enumerate() {
                t.text(format!("assumption_{n}"), a.clone());
            }
            match format {
                OutputFormat::Csv => t.to_csv(),
                _ => t.to_markdown(),
            }
        }
    }
}

pub fn render_pointed(class: &PointedDivisorClass, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(class),
        OutputFormat::Csv | OutputFormat::Markdown => {
            let mut t = Table::new();
            t.rat("g", &Rat::from_int(class.g as i64));
            t.rat("multiplier", &class.multiplier);
            t.rat("lambda", &class.lambda);
            t.rat("psi", &class.psi);
            for (j, e) in class.delta.iter().enumerate() {
                match e {
                    DeltaEntry::Exact(v) => t.rat(format!("delta_{j}"), v),
                    DeltaEntry::LowerBound { bound, note } => {
                        t.text(format!("delta_{j}"), format!(">= {bound} ({note})"))
                    }
                }
            }
            for (n, r) in class.relations_verified.iter().enumerate() {
                t.text(format!("relation_{n}"), r.clone());
            }
            match format {
                OutputFormat::Csv => t.to_csv(),
                _ => t.to_markdown(),
            }
        }
    }
}

pub fn render_certificate(cert: &Certificate, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(cert),
        OutputFormat::Csv | OutputFormat::Markdown => {
            let mut t = Table::new();
            t.rat("g", &Rat::from_int(cert.g as i64));
            t.rat("n", &Rat::from_int(cert.n as i64));
            t.rat("s", &cert.s);
            t.rat("t", &cert.t);
            t.rat("u", &cert.u);
            for (n, a) in cert.assumptions.iter().enumerate() {
                t.text(format!("assumption_{n}"), a.clone());
            }
            match format {
                OutputFormat::Csv => t.to_csv(),
                _ => t.to_markdown(),
            }
        }
    }
}
