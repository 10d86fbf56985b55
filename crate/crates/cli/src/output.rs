//! Result envelope and its JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use apery_core::Discrepancy;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows of an Apéry table, one per power, columns indexed by residue.
pub type TableRows = Vec<Vec<i64>>;

pub struct Report {
    pub params: BTreeMap<String, i64>,
    pub result: Value,
    pub text: String,
    pub table: Option<TableRows>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    params: &'a BTreeMap<String, i64>,
    result: &'a Value,
    discrepancies: &'a [Discrepancy],
}

impl Report {
    pub fn new(params: BTreeMap<String, i64>) -> Self {
        Self {
            params,
            result: Value::Object(Default::default()),
            text: String::new(),
            table: None,
            discrepancies: Vec::new(),
        }
    }

    /// Adds `key` to the JSON result only.
    pub fn insert(&mut self, key: &str, value: Value) {
        self.result
            .as_object_mut()
            .expect("result is an object")
            .insert(key.to_string(), value);
    }

    /// Adds `key` to the JSON result and a `key: text` block to the text
    /// output.
    pub fn section(&mut self, key: &str, value: Value, text: impl AsRef<str>) {
        self.insert(key, value);
        let text = text.as_ref();
        if text.contains('\n') {
            let _ = writeln!(self.text, "{key}:\n{}", text.trim_end());
        } else {
            let _ = writeln!(self.text, "{key}: {text}");
        }
    }

    pub fn has_failures(&self) -> bool {
        self.discrepancies.iter().any(Discrepancy::is_failure)
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let env = Envelope {
                    params: &self.params,
                    result: &self.result,
                    discrepancies: &self.discrepancies,
                };
                let mut s = serde_json::to_string_pretty(&env).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let rows = self
                    .table
                    .as_ref()
                    .ok_or("csv output is only available for tables")?;
                let width = rows.first().map_or(0, Vec::len);
                let mut w = csv::Writer::from_writer(Vec::new());
                let header =
                    std::iter::once("s".to_string()).chain((0..width).map(|r| format!("r{r}")));
                w.write_record(header).map_err(|e| e.to_string())?;
                for (s, row) in rows.iter().enumerate() {
                    let record = std::iter::once(s.to_string()).chain(row.iter().map(i64::to_string));
                    w.write_record(record).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
            Format::Text => {
                let mut s = self.text.clone();
                if !self.discrepancies.is_empty() {
                    let _ = writeln!(s, "discrepancies:");
                    for d in &self.discrepancies {
                        let _ = writeln!(
                            s,
                            "  [{}] {} {}: computed {}, expected {}",
                            if d.is_failure() { "failure" } else { "warning" },
                            fmt_params(&d.params),
                            d.claim,
                            d.computed,
                            d.expected
                        );
                    }
                }
                Ok(s)
            }
        }
    }
}

pub fn fmt_params(params: &BTreeMap<String, i64>) -> String {
    let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("({})", inner.join(", "))
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Rows as aligned text, one line per row.
pub fn table_text(header: &[String], rows: &[Vec<i64>]) -> String {
    let cells: Vec<Vec<String>> = std::iter::once(header.to_vec())
        .chain(rows.iter().enumerate().map(|(s, r)| {
            std::iter::once(s.to_string()).chain(r.iter().map(i64::to_string)).collect()
        }))
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  {}", line.join(" "));
    }
    out
}
