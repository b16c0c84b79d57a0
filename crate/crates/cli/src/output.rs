use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::fail::Failure;
use crate::job::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            // shortest representation that parses back to the same double
            Cell::Num(v) => format!("{v:?}"),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null),
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

/// Rows with a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| Failure::other(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(fail)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text)).map_err(fail)?;
        }
        w.into_inner().map_err(|e| Failure::other(format!("csv: {e}")))
    }

    pub fn to_json(&self, meta: &impl Serialize) -> Result<Vec<u8>, Failure> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("meta".into(), serde_json::to_value(meta).map_err(|e| Failure::other(format!("json: {e}")))?);
        doc.insert("rows".into(), Value::Array(rows));
        let mut bytes = serde_json::to_vec_pretty(&Value::Object(doc)).map_err(|e| Failure::other(format!("json: {e}")))?;
        bytes.push(b'\n');
        Ok(bytes)
    }

    pub fn render(&self, format: Format, meta: &impl Serialize) -> Result<Vec<u8>, Failure> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(meta),
        }
    }
}

pub fn emit(bytes: &[u8], out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Failure::other(format!("out: cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(|e| Failure::other(format!("stdout: {e}")))
        }
    }
}
