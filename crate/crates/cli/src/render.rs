//! JSON encodings of library values and the plain-text table renderer.
//!
//! Every number is written as a decimal string.

use std::fmt::Display;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use markov_core::sail::{Point, SailPolyline};
use markov_core::{Mat2, QuadForm, RadicalRatio, Surd};

pub fn num(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn matrix(m: &Mat2) -> Value {
    json!([[num(&m.a), num(&m.c)], [num(&m.b), num(&m.d)]])
}

pub fn form(f: &QuadForm) -> Value {
    json!({ "A": num(&f.a), "B": num(&f.b), "C": num(&f.c), "text": f.to_string() })
}

pub fn radical(r: &RadicalRatio, digits: usize) -> Value {
    json!({
        "N": num(r.radicand()),
        "d": num(r.denominator()),
        "decimal": r.to_decimal(digits),
        "text": r.to_string(),
    })
}

pub fn surd(s: &Surd, digits: usize) -> Value {
    json!({ "exact": s.to_string(), "decimal": s.to_decimal(digits) })
}

pub fn point(p: &Point) -> Value {
    json!([num(&p.0), num(&p.1)])
}

pub fn points(ps: &[(BigInt, BigInt)]) -> Value {
    Value::Array(ps.iter().map(point).collect())
}

pub fn polyline(p: &SailPolyline) -> Value {
    points(&p.vertices)
}

/// One-line text for a value: strings bare, arrays bracketed, objects as
/// `key=value` pairs.
pub fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(o) => {
            if let Some(Value::String(t)) = o.get("text") {
                return t.clone();
            }
            o.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join(" ")
        }
    }
}

/// `key  value` lines, nested objects flattened with dotted keys.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(o) if !o.contains_key("text") => {
            for (k, x) in o {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        _ => rows.push((prefix.to_string(), inline(v))),
    }
}

/// A tab-separated row of the given fields of an object.
pub fn row(v: &Map<String, Value>, fields: &[&str]) -> String {
    fields
        .iter()
        .map(|f| v.get(*f).map(inline).unwrap_or_default())
        .collect::<Vec<_>>()
        .join("\t")
}
