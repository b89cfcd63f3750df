use std::fs;
use std::path::Path;

use boolnet::dynamics::Attractor;
use boolnet::models::ModelDocument;
use boolnet::network::format_word;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Top-level JSON document. Keys come out sorted because `serde_json::Value`
/// objects are ordered maps.
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub network: Value,
    pub command: Value,
    pub payload: Value,
}

impl ReportDocument {
    pub fn new(doc: &ModelDocument, command: Value, payload: Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            network: network_metadata(doc),
            command,
            payload,
        }
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        // round trip through Value so nested struct fields are sorted too
        let value = serde_json::to_value(self).map_err(CliError::internal)?;
        let mut text = serde_json::to_string_pretty(&value).map_err(CliError::internal)?;
        text.push('\n');
        fs::write(path, text).map_err(|e| CliError::io(path, e))
    }
}

pub fn network_metadata(doc: &ModelDocument) -> Value {
    let n = doc.network.size();
    let automata: Vec<Value> = (0..n)
        .map(|i| {
            json!({
                "index": i + 1,
                "name": doc.display_name(i),
                "function": doc.network.local(i).expr().to_string(),
            })
        })
        .collect();
    json!({ "name": doc.name(), "n": n, "automata": automata })
}

pub fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(CliError::internal)
}

/// `(0, 24, 56, 32)`.
pub fn decimal_cycle(configs: &[u32]) -> String {
    let parts: Vec<String> = configs.iter().map(u32::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `(000000, 011000, …)`.
pub fn binary_cycle(configs: &[u32], n: usize) -> String {
    let parts: Vec<String> = configs.iter().map(|&c| format_word(c, n)).collect();
    format!("({})", parts.join(", "))
}

pub fn attractor_lines(attractors: &[Attractor], n: usize) -> Vec<String> {
    let mut out = vec![format!(
        "{} attractor{}",
        attractors.len(),
        if attractors.len() == 1 { "" } else { "s" }
    )];
    for (k, a) in attractors.iter().enumerate() {
        let kind = if a.is_fixed_point() {
            "fixed point"
        } else {
            "limit cycle"
        };
        out.push(format!(
            "  #{} {kind}, length {}, basin {}: {} = {}",
            k + 1,
            a.len(),
            a.basin_size,
            binary_cycle(&a.configs, n),
            decimal_cycle(&a.configs)
        ));
    }
    out
}
