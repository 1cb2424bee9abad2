use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// A command result: a JSON document and its flattened CSV rows.
pub struct Output {
    pub schema: &'static str,
    pub json: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn new(schema: &'static str, json: impl Serialize, headers: Vec<&'static str>) -> Result<Self> {
        let mut json = serde_json::to_value(json)?;
        if let Value::Object(map) = &mut json {
            map.insert("schema".into(), Value::String(format!("{schema}/v1")));
        }
        Ok(Output {
            schema,
            json,
            headers,
            rows: Vec::new(),
        })
    }

    pub fn row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Json => {
                let mut out = serde_json::to_vec_pretty(&self.json)?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let mut out = format!("#schema={}/v1\n", self.schema).into_bytes();
                {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(&self.headers)?;
                    for row in &self.rows {
                        w.write_record(row)?;
                    }
                    w.flush()?;
                }
                Ok(out)
            }
        }
    }
}

pub fn emit(output: &Output, format: Format, path: Option<&Path>) -> Result<()> {
    let bytes = output.render(format)?;
    match path {
        Some(p) => std::fs::write(p, &bytes).with_context(|| format!("cannot write {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes)?;
            Ok(stdout.flush()?)
        }
    }
}

/// Rounds to 12 decimals so that embeddings print stably, with `-0` folded into `0`.
pub fn stable(x: f64) -> f64 {
    let y = (x * 1e12).round() / 1e12;
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tables_are_valid_documents() {
        let out = Output::new("empty", serde_json::json!({ "rows": [] }), vec!["a", "b"]).unwrap();
        let json: Value = serde_json::from_slice(&out.render(Format::Json).unwrap()).unwrap();
        assert_eq!(json["schema"], "empty/v1");
        let csv = String::from_utf8(out.render(Format::Csv).unwrap()).unwrap();
        assert_eq!(csv, "#schema=empty/v1\na,b\n");
    }

    #[test]
    fn stable_rounding() {
        assert_eq!(stable(0.9999999999999999), 1.0);
        assert_eq!(stable(-1e-17).to_string(), "0");
    }
}
