use serde_json::{Number, Value};

/// Rounds to 12 significant digits and maps `-0` to `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Formats a float for text and CSV output.
pub fn fmt_float(x: f64) -> String {
    format!("{}", round12(x))
}

/// Applies [`round12`] to every non-integer number in a JSON tree.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *n = Number::from_f64(round12(x)).unwrap_or_else(|| n.clone());
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

pub fn to_pretty(mut v: Value) -> String {
    round_json(&mut v);
    serde_json::to_string_pretty(&v).expect("JSON values always serialise")
}

/// Integers that may exceed `u64` are written as strings.
pub fn big_int(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}
