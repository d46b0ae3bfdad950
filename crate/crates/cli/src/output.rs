use serde::Serialize;
use serde_json::Value;

use crate::error::CliResult;

/// Rounds to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

pub fn num(x: f64) -> String {
    let r = round15(x);
    if r == 0.0 || (1e-5..1e16).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round15(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::error::CliError::parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(num(1.0 / 3.0), "0.333333333333333");
        assert_eq!(num(16.000000000000004), "16");
        assert_eq!(num(-2.5e-20), "-2.5e-20");
        assert_eq!(num(f64::NAN), "NaN");
    }

    #[test]
    fn json_keeps_integers() {
        let s = json(&serde_json::json!({"a": 3, "b": 0.1 + 0.2})).unwrap();
        assert!(s.contains("\"a\": 3") && s.contains("0.3"), "{s}");
    }
}
