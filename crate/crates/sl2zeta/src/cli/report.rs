//! Output plumbing for the command-line layer: CSV tables whose every row
//! carries the hash of the resolved run configuration, and the JSON envelope
//! {config, results, margins, version} emitted by report-style commands.
//!
//! All numbers are written with 17 significant digits so that re-parsing a
//! table reproduces the computed doubles exactly, and all collections are
//! ordered, so identical configurations produce byte-identical output.

use serde_json::{Map, Value};
use std::collections::BTreeMap;

/// Formats a double with 17 significant digits (1 before the point, 16
/// after); round-trips through parsing losslessly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// 64-bit FNV-1a over a byte string; stable, dependency-free fingerprint.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Hash of a resolved configuration: FNV-1a over its canonical JSON text
/// (object keys sorted), printed as 16 hex digits.
pub fn config_hash(config: &BTreeMap<String, String>) -> String {
    let canonical =
        serde_json::to_string(config).expect("string map serialization cannot fail");
    format!("{:016x}", fnv1a64(canonical.as_bytes()))
}

/// An in-memory CSV table: header row plus data rows, comma-separated, with
/// a trailing `config` column holding the run-configuration hash.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    hash: String,
}

impl Table {
    /// Starts a table with the given data columns; the `config` column is
    /// appended automatically.
    pub fn new<S: Into<String>>(columns: Vec<S>, hash: &str) -> Table {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            hash: hash.to_string(),
        }
    }

    /// Appends one row; the cell count must match the data columns.
    pub fn row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.columns.len(), "row shape mismatch");
        self.rows.push(cells);
    }

    /// Renders the table as CSV text with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push_str(",config\n");
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push(',');
            out.push_str(&self.hash);
            out.push('\n');
        }
        out
    }

    /// Renders the rows as an ordered JSON array of objects (used when a
    /// table command is asked for `--format json`).
    pub fn to_json_rows(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    obj.insert(name.clone(), Value::String(cell.clone()));
                }
                obj.insert("config".into(), Value::String(self.hash.clone()));
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

/// The JSON envelope shared by all report outputs. `config` echoes the
/// resolved parameters (feeding the envelope back through `--config`
/// reproduces the run), `margins` collects the measured numerical slacks.
pub fn envelope(
    config: &BTreeMap<String, String>,
    results: Value,
    margins: &BTreeMap<String, f64>,
) -> Value {
    let mut obj = Map::new();
    let config_json: Map<String, Value> = config
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    obj.insert("config".into(), Value::Object(config_json));
    obj.insert("results".into(), results);
    let margins_json: Map<String, Value> = margins
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::json!(v)))
        .collect();
    obj.insert("margins".into(), Value::Object(margins_json));
    obj.insert(
        "version".into(),
        Value::String(env!("CARGO_PKG_VERSION").to_string()),
    );
    Value::Object(obj)
}

/// Pretty-prints an envelope with a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("tree serialization cannot fail");
    text.push('\n');
    text
}
