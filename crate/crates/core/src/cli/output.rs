use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

use super::commands::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn write(report: &Report, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => write_csv(&report.results, out),
        Format::Text => write_text(report, out),
    }
}

/// Nested objects become dotted keys; scalar arrays are joined with `;`.
fn flatten(prefix: &str, value: &Value, cells: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, cells);
            }
        }
        other => cells.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(";")
        }
        other => other.to_string(),
    }
}

fn write_csv(results: &[Value], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<Vec<(String, String)>> = results
        .iter()
        .map(|r| {
            let mut cells = Vec::new();
            flatten("", r, &mut cells);
            cells
        })
        .collect();
    let mut columns: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&columns)?;
    for row in &rows {
        let record = columns.iter().map(|c| {
            row.iter()
                .find(|(k, _)| k == c)
                .map(|(_, v)| v.as_str())
                .unwrap_or("")
        });
        w.write_record(record)?;
    }
    w.flush()
}

fn write_text(report: &Report, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{} {}", report.command, scalar(&report.params))?;
    for r in &report.results {
        let mut cells = Vec::new();
        flatten("", r, &mut cells);
        let line: Vec<String> = cells
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "  {}", line.join(" "))?;
    }
    writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" })
}
