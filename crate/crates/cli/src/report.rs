//! The report printed by every command, as JSON or as a flat table.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, pass: bool) -> Self {
        Report { command: command.to_string(), inputs, results, pass, timings: None }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize"),
            Format::Table => {
                let value = serde_json::to_value(self).expect("reports serialize");
                let mut rows = Vec::new();
                flatten("", &value, &mut rows);
                let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n")
            }
        }
    }
}

/// `a.b[2].c -> scalar` rows, in serialization order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(items) => {
            // partitions and other comma-joined strings stay readable inside a list
            let parts: Vec<String> = items
                .iter()
                .map(|x| match x {
                    Value::String(s) if s.contains(',') => format!("({s})"),
                    other => scalar(other),
                })
                .collect();
            out.push((prefix.to_string(), format!("[{}]", parts.join(", "))));
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
