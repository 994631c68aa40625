//! Deterministic JSON output: sorted keys, floats with 17 significant digits.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::linalg::CMatrix;
use crate::word_algebra::NormalFormCombination;

/// Pretty-prints with two-space indentation. Object keys come out sorted
/// because `serde_json::Map` is ordered.
pub fn to_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                let x = n.as_f64().expect("f64 number");
                write!(out, "{}", format_float(x)).expect("write to string");
            } else {
                write!(out, "{n}").expect("write to string");
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            // short arrays of scalars stay on one line
            if items.iter().all(|x| !x.is_array() && !x.is_object()) {
                out.push('[');
                for (k, x) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    write_value(out, x, indent);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
    }
}

fn pad(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

/// `{:.16e}`, i.e. 17 significant digits, which round-trips any `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn float(x: f64) -> Value {
    // non-finite values have no JSON form
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": float(z.re), "im": float(z.im) })
}

/// Row-major array of `{re, im}` rows.
pub fn matrix(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| complex(m[(r, c)])).collect()))
            .collect(),
    )
}

/// List of `{monomial, word, coeff: {num, den}}` entries.
pub fn combination(c: &NormalFormCombination) -> Value {
    Value::Array(
        c.terms()
            .iter()
            .map(|(m, coeff)| {
                let mut obj = Map::new();
                obj.insert(
                    "monomial".into(),
                    Value::Array(m.factors().iter().map(|&k| Value::from(k)).collect()),
                );
                obj.insert("word".into(), Value::String(m.to_string()));
                obj.insert(
                    "coeff".into(),
                    json!({
                        "num": coeff.numerator().to_string(),
                        "den": coeff.denominator().to_string(),
                    }),
                );
                Value::Object(obj)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_keys_and_float_format() {
        let v = json!({ "b": 1, "a": float(0.5), "c": [1, 2] });
        assert_eq!(to_string(&v), "{\n  \"a\": 5.0000000000000000e-1,\n  \"b\": 1,\n  \"c\": [1, 2]\n}\n");
    }

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 12345.678] {
            assert_eq!(format_float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn nested_output_is_valid_json() {
        let v = json!({ "m": [[{ "re": float(1.0), "im": float(0.0) }]], "s": "x\"y" });
        let text = to_string(&v);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["s"], "x\"y");
        assert_eq!(back["m"][0][0]["re"].as_f64(), Some(1.0));
    }
}
