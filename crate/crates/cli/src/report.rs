//! Reports shared by every command, rendered as text or JSON.
//!
//! JSON layout (`report_version` 1):
//!
//! ```text
//! {
//!   "report_version": 1,
//!   "command": "<name>",
//!   ...command fields...,
//!   "checks": [{"name": "...", "status": "pass" | "fail" | "indeterminate"}],
//!   "status": "pass" | "fail" | "indeterminate"
//! }
//! ```
//!
//! Object keys are emitted in sorted order and every expression is a
//! rendered canonical form, so identical inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sublorentz_expr::Truth;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Indeterminate,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Indeterminate => 2,
        }
    }
}

impl From<Truth> for Status {
    fn from(t: Truth) -> Status {
        match t {
            Truth::True => Status::Pass,
            Truth::False => Status::Fail,
            Truth::Unknown => Status::Indeterminate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// Fields in display order; JSON output sorts them.
    pub fields: Vec<(String, Value)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            fields: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn check(&mut self, name: impl Into<String>, status: impl Into<Status>) {
        self.checks.push(Check {
            name: name.into(),
            status: status.into(),
        });
    }

    /// Worst check status: any failure wins over indeterminate.
    pub fn status(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }

    pub fn exit_code(&self) -> u8 {
        self.status().exit_code()
    }

    pub fn to_json_value(&self) -> Value {
        let mut map: BTreeMap<String, Value> = BTreeMap::new();
        for (k, v) in &self.fields {
            map.insert(k.clone(), sorted(v));
        }
        map.insert("report_version".into(), REPORT_VERSION.into());
        map.insert("command".into(), self.command.clone().into());
        map.insert(
            "checks".into(),
            serde_json::to_value(&self.checks).expect("checks serialize"),
        );
        map.insert("status".into(), self.status().as_str().into());
        serde_json::to_value(map).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (report version {REPORT_VERSION})\n", self.command);
        for (k, v) in &self.fields {
            write_text(&mut out, k, v, 0);
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let _ = writeln!(out, "  {:<14}{}", c.status.as_str(), c.name);
            }
        }
        let _ = writeln!(out, "status: {}", self.status().as_str());
        out
    }
}

/// Rebuilds objects through a BTreeMap so key order never depends on
/// insertion order.
fn sorted(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let b: BTreeMap<String, Value> = m.iter().map(|(k, v)| (k.clone(), sorted(v))).collect();
            serde_json::to_value(b).expect("object serializes")
        }
        Value::Array(a) => Value::Array(a.iter().map(sorted).collect()),
        other => other.clone(),
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn write_text(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = inline(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                write_text(out, k, v, depth + 1);
            }
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                write_text(out, &format!("[{i}]"), v, depth + 1);
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}
