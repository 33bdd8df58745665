//! Report serialization.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use toric_cy4::DoublingReport;

use crate::batch::FanResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmitFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for EmitFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(EmitFormat::Text),
            "json" => Ok(EmitFormat::Json),
            "csv" => Ok(EmitFormat::Csv),
            other => Err(format!("unknown format `{other}` (text, json, csv)")),
        }
    }
}

/// One CSV record: every report field next to the fan's labels.
#[derive(Debug, Clone, Serialize)]
pub struct CsvRow<'a> {
    pub id: &'a str,
    pub name: &'a str,
    pub chi_p: i64,
    pub tau_p: i64,
    pub chi_d: i64,
    pub h11_d: i64,
    pub h21_d: i64,
    pub chi_s: i64,
    pub h02_s: i64,
    pub h11_s: i64,
    pub tau_s: i64,
    pub chi_m: i64,
    pub tau_m: i64,
    pub a_hat: i64,
    pub holonomy: &'static str,
}

impl<'a> CsvRow<'a> {
    pub fn new(id: &'a str, name: &'a str, r: &DoublingReport) -> Self {
        CsvRow {
            id,
            name,
            chi_p: r.chi_p,
            tau_p: r.tau_p,
            chi_d: r.chi_d,
            h11_d: r.h11_d,
            h21_d: r.h21_d,
            chi_s: r.chi_s,
            h02_s: r.h02_s,
            h11_s: r.h11_s,
            tau_s: r.tau_s,
            chi_m: r.chi_m,
            tau_m: r.tau_m,
            a_hat: r.a_hat,
            holonomy: r.holonomy.label(),
        }
    }
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    origin: &'a str,
    id: &'a str,
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a DoublingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Renders successful reports (and, for text and JSON, errors) to a string.
pub fn render(results: &[FanResult], format: EmitFormat) -> String {
    match format {
        EmitFormat::Text => render_text(results),
        EmitFormat::Json => render_json(results),
        EmitFormat::Csv => render_csv(results),
    }
}

fn render_text(results: &[FanResult]) -> String {
    let mut s = String::new();
    for r in results {
        match &r.outcome {
            Ok(rep) => {
                writeln!(s, "{} (id {}, {})", non_empty(r.name(), r.id()), r.id(), r.origin).unwrap();
                writeln!(s, "  P: chi {}  tau {}", rep.chi_p, rep.tau_p).unwrap();
                writeln!(s, "  D: chi {}  h11 {}  h21 {}", rep.chi_d, rep.h11_d, rep.h21_d).unwrap();
                writeln!(
                    s,
                    "  S: chi {}  h02 {}  h11 {}  tau {}",
                    rep.chi_s, rep.h02_s, rep.h11_s, rep.tau_s
                )
                .unwrap();
                writeln!(
                    s,
                    "  M: chi {}  tau {}  A-hat {}  holonomy {}",
                    rep.chi_m,
                    rep.tau_m,
                    rep.a_hat,
                    rep.holonomy.label()
                )
                .unwrap();
            }
            Err(e) => writeln!(s, "error: {e}").unwrap(),
        }
    }
    s
}

fn non_empty<'a>(a: &'a str, b: &'a str) -> &'a str {
    if a.is_empty() {
        b
    } else {
        a
    }
}

fn render_json(results: &[FanResult]) -> String {
    let entries: Vec<JsonEntry> = results
        .iter()
        .map(|r| JsonEntry {
            origin: &r.origin,
            id: r.id(),
            name: r.name(),
            report: r.outcome.as_ref().ok(),
            error: r.outcome.as_ref().err().map(ToString::to_string),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("reports serialize");
    s.push('\n');
    s
}

fn render_csv(results: &[FanResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in results {
        if let Ok(report) = &r.outcome {
            w.serialize(CsvRow::new(r.id(), r.name(), report))
                .expect("reports serialize");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
