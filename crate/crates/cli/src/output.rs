//! CSV and JSON emitters. CSV has a header row, data rows, then `# key=value` lines.

use std::io::Write;

use serde::Serialize;

use crate::args::Format;
use crate::config::RunConfig;
use crate::error::CliError;

/// Shortest round-trip form, switching to exponent notation outside `[1e-5, 1e16)`.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub meta: Vec<(String, String)>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), ..Self::default() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::from(std::io::Error::other(e));
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let mut buf = w.into_inner().map_err(|e| CliError::from(e.into_error()))?;
        for (k, v) in &self.meta {
            writeln!(buf, "# {k}={v}")?;
        }
        Ok(buf)
    }

    fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| {
                self.header
                    .iter()
                    .zip(r)
                    .map(|(h, c)| (h.to_string(), cell_json(c)))
                    .collect()
            })
            .collect();
        let meta: serde_json::Map<String, serde_json::Value> =
            self.meta.iter().map(|(k, v)| (k.clone(), cell_json(v))).collect();
        serde_json::json!({ "rows": rows, "meta": meta })
    }
}

/// Numbers stay numbers; everything else (including `pi/3`) stays a string.
fn cell_json(c: &str) -> serde_json::Value {
    if let Ok(i) = c.parse::<i64>() {
        return i.into();
    }
    match c.parse::<f64>() {
        Ok(f) if f.is_finite() => serde_json::Value::from(f),
        _ => match c {
            "true" => true.into(),
            "false" => false.into(),
            _ => c.into(),
        },
    }
}

pub enum Artifact {
    Table(Table),
    /// Emitted as JSON whatever the requested format.
    Document(serde_json::Value),
}

impl Artifact {
    pub fn document<T: Serialize>(value: &T) -> Result<Self, CliError> {
        serde_json::to_value(value).map(Self::Document).map_err(|e| CliError::from(std::io::Error::other(e)))
    }
}

pub fn emit(artifact: &Artifact, cfg: &RunConfig) -> Result<(), CliError> {
    let bytes = match (artifact, cfg.output_format) {
        (Artifact::Table(t), Format::Csv) => t.to_csv()?,
        (Artifact::Table(t), Format::Json) => pretty(&t.to_json())?,
        (Artifact::Document(v), _) => pretty(v)?,
    };
    match &cfg.output_path {
        Some(p) => std::fs::write(p, bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> Result<Vec<u8>, CliError> {
    let mut s = serde_json::to_vec_pretty(v).map_err(|e| CliError::from(std::io::Error::other(e)))?;
    s.push(b'\n');
    Ok(s)
}
