//! JSON rendering shared by every subcommand.
//!
//! Object keys come out sorted, non-integer reals are rounded to
//! [`SIGNIFICANT_DIGITS`] significant digits, and `-0` becomes `0`, so equal
//! inputs always give byte-identical documents.

use serde::Serialize;
use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Values within this much of zero (relative to the spectrum scale) are
/// shown as exactly zero in spectrum listings.
pub const DISPLAY_ZERO: f64 = 1e-9;

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("scientific notation round-trips");
    if rounded == 0.0 { 0.0 } else { rounded }
}

pub fn snap_zero(x: f64, scale: f64) -> f64 {
    if x.abs() < DISPLAY_ZERO * scale.max(1.0) { 0.0 } else { x }
}

fn normalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_significant(n.as_f64().expect("f64 number"));
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

/// Pretty-printed, normalised JSON followed by a newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let value = normalize(serde_json::to_value(doc).expect("report types serialize"));
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}
