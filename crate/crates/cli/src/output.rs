//! Deterministic CSV/JSON table writers.
//!
//! CSV: UTF-8, `#`-prefixed header comments echoing the configuration, one
//! data header row, `.` decimal separator, 17 significant digits. JSON: a
//! single object {config, columns, rows} with numbers as IEEE doubles.

use serde_json::{json, Map, Value};
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Default)]
pub struct Table {
    pub config: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn push_config(&mut self, key: &str, value: impl std::fmt::Display) {
        self.config.push((key.to_string(), value.to_string()));
    }

    fn render_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.config {
            let _ = writeln!(s, "# {k} = {v}");
        }
        let _ = writeln!(s, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(cell_csv).collect();
            let _ = writeln!(s, "{}", line.join(","));
        }
        s
    }

    fn render_json(&self) -> String {
        let mut config = Map::new();
        for (k, v) in &self.config {
            // numeric config entries stay numbers in JSON
            match v.parse::<f64>() {
                Ok(x) if x.is_finite() => {
                    config.insert(k.clone(), json!(x));
                }
                _ => {
                    config.insert(k.clone(), Value::String(v.clone()));
                }
            }
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(cell_json).collect()))
            .collect();
        let obj = json!({
            "config": Value::Object(config),
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&obj).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write_to(&self, format: Format, out: Option<&Path>) -> io::Result<()> {
        let body = match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        };
        match out {
            Some(path) => File::create(path)?.write_all(body.as_bytes()),
            None => io::stdout().write_all(body.as_bytes()),
        }
    }
}

fn cell_csv(c: &Cell) -> String {
    match c {
        Cell::Num(x) => format_num(*x),
        Cell::Int(i) => i.to_string(),
        Cell::Text(t) => t.clone(),
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Num(x) => {
            if x.is_finite() {
                json!(x)
            } else {
                Value::String(format_num(*x))
            }
        }
        Cell::Int(i) => json!(i),
        Cell::Text(t) => Value::String(t.clone()),
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_num(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".to_string() } else { "-inf".to_string() }
    } else {
        format!("{x:.16e}")
    }
}
