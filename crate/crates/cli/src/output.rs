//! Rendering reports as JSON, plain tables or LaTeX.

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

/// A command's result: the report, an optional LaTeX rendering, and whether it passed.
pub struct Report {
    pub value: Value,
    pub latex: Option<String>,
    pub passed: bool,
}

impl Report {
    pub fn ok(value: Value) -> Self {
        Self {
            value,
            latex: None,
            passed: true,
        }
    }

    pub fn verdict(value: Value, passed: bool) -> Self {
        Self {
            value,
            latex: None,
            passed,
        }
    }
}

/// `printf("%.15g", x)`.
pub fn fmt_g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.14e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..15).contains(&exp) {
        let mant = trim_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{x:.*}", (14 - exp) as usize)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `re+imi` with both parts at 15 significant digits.
pub fn fmt_complex(z: Complex64) -> String {
    let im = fmt_g(z.im.abs());
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{}{sign}{im}i", fmt_g(z.re))
}

/// Rounds every float in `v` to 15 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r: f64 = format!("{x:.14e}").parse().unwrap_or(x);
            Number::from_f64(r).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, x)| (k, round_floats(x))).collect()),
        other => other,
    }
}

pub fn render(report: &Report, format: Format) -> CliResult<String> {
    let value = round_floats(report.value.clone());
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Table => {
            let mut out = String::new();
            table(&value, 0, &mut out);
            Ok(out.trim_end().to_string())
        }
        Format::Latex => report
            .latex
            .clone()
            .ok_or_else(|| CliError::Usage("latex output is only available for `identities generate`".into())),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => fmt_g(x),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(" "),
        Value::Object(o) => o
            .iter()
            .map(|(k, x)| format!("{k}={}", scalar(x)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Rows of objects sharing one key set render as a column table; everything else as `key: value`.
fn table(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    table(x, indent + 2, out);
                }
            }
        }
        Value::Array(rows) if rows.iter().all(|r| r.is_object()) && !rows.is_empty() => {
            let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
            let same = rows.iter().all(|r| r.as_object().unwrap().keys().eq(keys.iter().copied()));
            if !same {
                for r in rows {
                    table(r, indent, out);
                    out.push('\n');
                }
                return;
            }
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| keys.iter().map(|k| scalar(&r[k.as_str()])).collect())
                .collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(j, k)| cells.iter().map(|c| c[j].len()).chain([k.len()]).max().unwrap())
                .collect();
            let line = |items: Vec<String>| {
                let row: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                format!("{pad}{}\n", row.join("  ").trim_end())
            };
            out.push_str(&line(keys.iter().map(|k| k.to_string()).collect()));
            for c in cells {
                out.push_str(&line(c));
            }
        }
        Value::Array(items) => {
            for x in items {
                out.push_str(&format!("{pad}- {}\n", scalar(x)));
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn percent_g() {
        assert_eq!(fmt_g(1.086_434_811_213_308), "1.08643481121331");
        assert_eq!(fmt_g(0.1 + 0.2), "0.3");
        assert_eq!(fmt_g(1e-7), "1e-07");
        assert_eq!(fmt_g(123456789012345678.0), "1.23456789012346e+17");
        assert_eq!(fmt_g(-2.5), "-2.5");
        assert_eq!(fmt_g(100.0), "100");
        assert_eq!(fmt_g(0.0001), "0.0001");
    }

    #[test]
    fn complex_strings() {
        assert_eq!(fmt_complex(Complex64::new(1.0, -0.5)), "1-0.5i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 0.0)), "0+0i");
        assert_eq!(fmt_complex(Complex64::new(-1e-20, 2.0)), "-1e-20+2i");
    }

    #[test]
    fn rounding_keeps_integers() {
        let v = round_floats(json!({"a": 0.30000000000000004, "n": 36, "s": [1.0000000000000002]}));
        assert_eq!(v, json!({"a": 0.3, "n": 36, "s": [1.0]}));
    }

    #[test]
    fn table_layout() {
        let v = json!({"rows": [{"a": 1, "b": "x"}, {"a": 22, "b": "y"}], "pass": true});
        let mut s = String::new();
        table(&v, 0, &mut s);
        assert_eq!(s, "pass: true\nrows:\n  a   b\n  1   x\n  22  y\n");
    }
}
