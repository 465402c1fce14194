//! Diagnostics go to stderr, one JSON object per line.

use serde_json::{json, Map, Value};

pub fn line(level: &str, event: &str, fields: Value) -> String {
    let mut obj = Map::new();
    obj.insert("level".into(), json!(level));
    obj.insert("event".into(), json!(event));
    if let Value::Object(extra) = fields {
        obj.extend(extra);
    }
    Value::Object(obj).to_string()
}

pub fn emit(level: &str, event: &str, fields: Value) {
    eprintln!("{}", line(level, event, fields));
}
