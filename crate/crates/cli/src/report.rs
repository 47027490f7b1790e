//! Human-readable and JSON reports.

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// An ordered list of findings. Text output prints one `key: value` line per
/// entry with booleans as `yes`/`no`; JSON output is a single object.
#[derive(Debug, Clone, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    /// A boolean finding with an optional witness, shown as `no (witness ...)`.
    pub fn verdict<W: serde::Serialize>(&mut self, key: &str, witness: Option<W>) -> &mut Self {
        match witness {
            None => self.push(key, true),
            Some(w) => {
                self.push(key, false);
                self.push(
                    format!("{key} witness"),
                    serde_json::to_value(w).expect("witnesses serialize"),
                )
            }
        }
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let object: Map<String, Value> = self.entries.iter().cloned().collect();
                let mut text = serde_json::to_string(&Value::Object(object)).expect("reports serialize");
                text.push('\n');
                text
            }
            Format::Text => self
                .entries
                .iter()
                .map(|(k, v)| {
                    let shown = match v {
                        Value::Bool(true) => "yes".to_string(),
                        Value::Bool(false) => "no".to_string(),
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    format!("{k}: {shown}\n")
                })
                .collect(),
        }
    }
}
