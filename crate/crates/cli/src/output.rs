//! Deterministic rendering. Records keep their field order; nothing here
//! formats floats.

use serde_json::Value;

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// Nonempty arrays of arrays or of objects.
fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty()
        && (rows.iter().all(Value::is_array) || rows.iter().all(Value::is_object)))
}

/// Objects get one field per line, nested tables one row per line and
/// top-level arrays one item per line.
pub fn render_json(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            let last = map.len() - 1;
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&format!("  {}: ", compact(&Value::String(key.clone()))));
                if is_table(val) {
                    let rows = val.as_array().expect("table");
                    out.push_str("[\n");
                    for (r, row) in rows.iter().enumerate() {
                        out.push_str("    ");
                        out.push_str(&compact(row));
                        out.push_str(if r + 1 < rows.len() { ",\n" } else { "\n" });
                    }
                    out.push_str("  ]");
                } else {
                    out.push_str(&compact(val));
                }
                out.push_str(if k < last { ",\n" } else { "\n" });
            }
            out.push_str("}\n");
        }
        Value::Array(items) if !items.is_empty() => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&compact(item));
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str("]\n");
        }
        other => {
            out.push_str(&compact(other));
            out.push('\n');
        }
    }
    out
}

/// `key: value` lines; strings print bare.
pub fn render_text(v: &Value) -> String {
    let Value::Object(map) = v else {
        return render_json(v);
    };
    let mut out = String::new();
    for (key, val) in map {
        let shown = match val {
            Value::String(s) => s.clone(),
            other => compact(other),
        };
        out.push_str(&format!("{key}: {shown}\n"));
    }
    out
}
