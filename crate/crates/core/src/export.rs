//! CSV / JSON-lines output of sampled trajectories.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrator::TimeSeries;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    #[default]
    #[serde(rename = "csv")]
    Csv,
    #[serde(rename = "json-lines", alias = "jsonl", alias = "json_lines")]
    JsonLines,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::JsonLines => "jsonl",
        }
    }
}

/// `t_us` followed by one column per observable. Values carry 17
/// significant digits; undefined values are empty cells.
pub fn to_csv(series: &TimeSeries) -> String {
    let mut out = String::from("t_us");
    for o in series.observables() {
        out.push(',');
        out.push_str(o.name());
    }
    out.push('\n');
    let columns: Vec<&[f64]> = series
        .observables()
        .iter()
        .map(|&o| series.column(o).expect("observable listed by the series"))
        .collect();
    for (k, t) in series.times().iter().enumerate() {
        let _ = write!(out, "{t:.16e}");
        for c in &columns {
            out.push(',');
            if !c[k].is_nan() {
                let _ = write!(out, "{:.16e}", c[k]);
            }
        }
        out.push('\n');
    }
    out
}

/// One JSON object per sample; undefined values are `null`.
pub fn to_json_lines(series: &TimeSeries) -> String {
    let mut out = String::new();
    for (k, &t) in series.times().iter().enumerate() {
        let mut record = serde_json::Map::new();
        record.insert("t_us".into(), t.into());
        for &o in series.observables() {
            let v = series.column(o).expect("observable listed by the series")[k];
            let v = if v.is_nan() { serde_json::Value::Null } else { v.into() };
            record.insert(o.name().into(), v);
        }
        out.push_str(&serde_json::Value::Object(record).to_string());
        out.push('\n');
    }
    out
}

pub fn write_series(path: &Path, series: &TimeSeries, format: Format) -> Result<()> {
    let text = match format {
        Format::Csv => to_csv(series),
        Format::JsonLines => to_json_lines(series),
    };
    write_file(path, text.as_bytes())
}

pub fn write_manifest<T: Serialize>(path: &Path, manifest: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(manifest).map_err(|e| Error::Serialization(e.to_string()))?;
    text.push('\n');
    write_file(path, text.as_bytes())
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    w.write_all(bytes).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}
