//! Versioned JSON reports and their text rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use homex_core::verdict::{Status, Verdict};

pub const SCHEMA: &str = "homex/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub field: String,
    pub seed: u64,
    pub cutoff_pd: usize,
    pub cutoff_nil: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    /// Positional and named arguments as given.
    pub args: Value,
    pub config: RunConfig,
    pub result: Value,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, args: Value, config: RunConfig, result: Value, status: Status) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            args,
            config,
            result,
            status: status.as_str().to_string(),
            timing_ms: None,
        }
    }

    pub fn status(&self) -> Option<Status> {
        [Status::Certified, Status::Refuted, Status::Inconclusive].into_iter().find(|s| s.as_str() == self.status)
    }

    /// 0 certified, 2 refuted, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Some(Status::Certified) => 0,
            Some(Status::Refuted) => 2,
            Some(Status::Inconclusive) => 3,
            None => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}]", self.command, self.status);
        let c = &self.config;
        let _ = writeln!(out, "field {}  seed {}  cutoff-pd {}  cutoff-nil {}", c.field, c.seed, c.cutoff_pd, c.cutoff_nil);
        render(&mut out, &self.result, 0);
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "time {t} ms");
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        x => {
            let _ = writeln!(out, "{pad}{}", scalar(x).unwrap_or_default());
        }
    }
}

/// `{"status": ..., "value" | "witness" | "pending": ...}`.
pub fn verdict_json<C, R, I>(
    v: &Verdict<C, R, I>,
    c: impl FnOnce(&C) -> Value,
    r: impl FnOnce(&R) -> Value,
    i: impl FnOnce(&I) -> Value,
) -> Value {
    match v {
        Verdict::Certified(x) => json!({ "status": "certified", "value": c(x) }),
        Verdict::Refuted(x) => json!({ "status": "refuted", "witness": r(x) }),
        Verdict::Inconclusive(x) => json!({ "status": "inconclusive", "pending": i(x) }),
    }
}

/// Degree-indexed dimensions; `null` where undetermined.
pub fn dims_json(dims: &[Option<usize>]) -> Value {
    Value::Array(dims.iter().map(|d| d.map_or(Value::Null, Value::from)).collect())
}
