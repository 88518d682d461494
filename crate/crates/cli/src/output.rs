use colored_core::Report;
use serde_json::{json, Map, Value};

use crate::input::Failure;

pub use colored_core::json::render;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
}

impl Outcome {
    /// Exit 0 when `report` and every extra condition hold, else 1. The
    /// report's first violation is repeated as `first_failure`.
    pub fn checked(command: &str, report: &Report, extra_ok: bool, fields: Map<String, Value>) -> Outcome {
        let ok = report.ok() && extra_ok;
        let mut out = fields;
        out.insert("command".into(), json!(command));
        out.insert("ok".into(), json!(ok));
        out.insert("report".into(), report.to_json());
        out.insert("first_failure".into(), report.to_json()["violations"].get(0).cloned().unwrap_or(Value::Null));
        Outcome { code: if ok { 0 } else { 1 }, json: Value::Object(out) }
    }

    pub fn failure(f: Failure) -> Outcome {
        Outcome { code: 2, json: json!({ "ok": false, "error": f.to_json() }) }
    }
}

/// `{degree: rank}` as a list, ordered numerically.
pub fn ranks_json(r: &std::collections::BTreeMap<i64, usize>) -> Value {
    Value::Array(r.iter().map(|(d, n)| json!({"degree": d, "rank": n})).collect())
}
