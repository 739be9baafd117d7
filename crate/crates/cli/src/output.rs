//! Output emission: compact JSON (field order fixed by sorted keys) or a
//! flattened key/value TSV.

use serde_json::Value;

pub struct Out {
    tsv: bool,
}

impl Out {
    pub fn from(tsv: bool) -> Out {
        Out { tsv }
    }
}

pub fn emit(out: &Out, value: Value) {
    if out.tsv {
        let mut lines = Vec::new();
        flatten("", &value, &mut lines);
        for (k, v) in lines {
            println!("{k}\t{v}");
        }
    } else {
        println!("{value}");
    }
}

fn flatten(prefix: &str, value: &Value, lines: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, lines);
            }
        }
        Value::Array(items) => {
            if items
                .iter()
                .all(|v| !matches!(v, Value::Object(_) | Value::Array(_)))
            {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                lines.push((prefix.to_string(), joined.join(",")));
            } else {
                for (i, v) in items.iter().enumerate() {
                    flatten(&format!("{prefix}.{i}"), v, lines);
                }
            }
        }
        other => lines.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
