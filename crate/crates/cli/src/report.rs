//! Command results, rendered as text or as a JSON document with the fields
//! `command`, `input`, `result`, `warnings` and `elapsed_ms`.

use hypertoric::IntMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub elapsed_ms: u128,
    /// Text output, one item per line.
    pub text: String,
    /// Exit code for a report that is still printed, such as a verdict whose
    /// witness search ran out of budget.
    pub exit_code: u8,
}

impl Report {
    pub fn new(command: &'static str, input: Value) -> Self {
        Report {
            command,
            input,
            result: Value::Null,
            warnings: Vec::new(),
            elapsed_ms: 0,
            text: String::new(),
            exit_code: 0,
        }
    }

    /// Appends a `key: value` line to the text output.
    pub fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        self.text.push_str(&format!("{key}: {value}\n"));
    }

    pub fn raw(&mut self, text: &str) {
        self.text.push_str(text);
    }

    pub fn warn(&mut self, warning: impl Into<String>) {
        self.warnings.push(warning.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "warnings": self.warnings,
            "elapsed_ms": u64::try_from(self.elapsed_ms).unwrap_or(u64::MAX),
        })
    }
}

/// Error document for `--json` mode.
pub fn error_json(command: &str, error: &CliError) -> Value {
    let mut doc = json!({
        "command": command,
        "error": {
            "message": error.to_string(),
            "exit_code": error.exit_code(),
        },
    });
    if let CliError::Parse { file, at: Some((line, column)), .. } = error {
        doc["error"]["file"] = json!(file);
        doc["error"]["line"] = json!(line);
        doc["error"]["column"] = json!(column);
    }
    doc
}

/// An exact JSON number; values beyond `i64` keep every digit.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON"),
    }
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_value).collect()))
            .collect(),
    )
}

/// 1-based positions, as shown to users.
pub fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}
