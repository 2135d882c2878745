use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    HypothesesNotMet,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::HypothesesNotMet => 2,
        }
    }
}

/// One report per invocation. The field names are a stable contract.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub command: String,
    pub payload: Value,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn ok(command: &str, payload: Value) -> Self {
        Report { status: Status::Ok, command: command.into(), payload, notes: Vec::new() }
    }

    pub fn error(command: &str, message: String) -> Self {
        Report {
            status: Status::Error,
            command: command.into(),
            payload: serde_json::json!({ "error": message }),
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes.extend(notes);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_plain(&self) -> String {
        let status = serde_json::to_value(self.status).expect("status serializes");
        let mut lines = vec![format!("status: {}", status.as_str().unwrap_or_default())];
        flatten("", &self.payload, &mut lines);
        lines.extend(self.notes.iter().map(|n| format!("note: {n}")));
        lines.join("\n")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<_> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", joined.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, out);
            }
        }
        other => out.push(format!("{prefix}: {}", scalar(other))),
    }
}
