use crate::{Fail, Res};
use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;
use std::io::Write;
use std::path::Path;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One result in all three output forms.
pub struct Rendered {
    pub text: String,
    pub csv: String,
    pub json: Value,
}

/// JSON number when it fits in i64, decimal string otherwise.
pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(n.to_string()),
    }
}

pub fn emit(r: &Rendered, fmt: Format, out: Option<&Path>) -> Res<()> {
    let body = match fmt {
        Format::Text => r.text.clone(),
        Format::Csv => r.csv.clone(),
        Format::Json => {
            let mut s = String::new();
            layout(&r.json, 0, &mut s);
            s + "\n"
        }
    };
    match out {
        Some(p) => std::fs::write(p, body).map_err(|e| Fail::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = std::io::stdout().lock();
            s.write_all(body.as_bytes()).and_then(|_| s.flush()).map_err(|e| Fail::Usage(e.to_string()))
        }
    }
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(a) => a.iter().any(has_object),
        _ => false,
    }
}

/// Objects one key per line; arrays without objects inside stay on one line.
/// Map keys come out sorted, so the bytes depend only on the value.
fn layout(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                layout(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(a) if has_object(v) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad);
                layout(x, depth + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}
