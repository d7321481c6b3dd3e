//! Tabular output shared by every subcommand: one schema, rendered either
//! as RFC-4180 CSV (header row + one record per line) or as a JSON array of
//! objects with the same field names.

use serde_json::{Map, Value};
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

/// Column-ordered record table.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn cell_to_string(v: &Value) -> String {
        match v {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }

    pub fn write_to(&self, format: OutFormat, mut w: impl Write) -> io::Result<()> {
        match format {
            OutFormat::Csv => {
                let mut out = csv::Writer::from_writer(w);
                out.write_record(&self.header)?;
                for row in &self.rows {
                    out.write_record(row.iter().map(Self::cell_to_string))?;
                }
                out.flush()?;
                Ok(())
            }
            OutFormat::Json => {
                let objects: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (key, value) in self.header.iter().zip(row) {
                            obj.insert(key.clone(), value.clone());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut w, &objects)?;
                writeln!(w)?;
                Ok(())
            }
        }
    }

    /// Write to a file path, or stdout when no path is given.
    pub fn write(&self, format: OutFormat, path: Option<&Path>) -> io::Result<()> {
        match path {
            Some(p) => self.write_to(format, File::create(p)?),
            None => self.write_to(format, io::stdout().lock()),
        }
    }
}

/// Uniform float rendering: shortest round-trip representation, so output
/// files are byte-identical across runs.
pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

pub fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}

pub fn opt_num(v: Option<f64>) -> Value {
    v.map(num).unwrap_or(Value::Null)
}
