//! JSON configuration files.
//!
//! ```json
//! { "v": { "12": [1, 0], "13": ["1/2", -3], "14": [0, 1],
//!          "23": [1, 0], "24": [0, 1], "34": [1, 0] } }
//! ```
//!
//! Scalars are JSON integers or `"p/q"` strings. Decimal numbers are only
//! accepted when reading for the float backend.

use std::str::FromStr;

use dets2_core::{normalize_rational, Configuration, Pair, Rational, Scalar, Vec2};
use num_traits::ToPrimitive;
use serde_json::{Map, Number, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected an object with key \"v\"")]
    MissingVectors,
    #[error("missing key \"{0}\" in \"v\"")]
    MissingKey(&'static str),
    #[error("unknown key \"{0}\" in \"v\" (expected 12, 13, 14, 23, 24, 34)")]
    UnknownKey(String),
    #[error("\"{0}\" must be an array of two scalars")]
    NotAPair(&'static str),
    #[error("\"{key}\": {detail}")]
    BadScalar { key: &'static str, detail: String },
}

fn bad(key: &'static str, detail: impl Into<String>) -> ConfigError {
    ConfigError::BadScalar { key, detail: detail.into() }
}

/// A scalar as written in the file.
enum Entry {
    Exact(Rational),
    Decimal(f64),
}

fn parse_entry(key: &'static str, value: &Value) -> Result<Entry, ConfigError> {
    match value {
        Value::Number(n) => number_entry(key, n),
        Value::String(s) => {
            let s = s.trim();
            let r = Rational::from_str(s)
                .map_err(|_| bad(key, format!("\"{s}\" is not an integer or p/q with nonzero q")))?;
            Ok(Entry::Exact(r))
        }
        other => Err(bad(key, format!("{other} is not a scalar"))),
    }
}

fn number_entry(key: &'static str, n: &Number) -> Result<Entry, ConfigError> {
    if let Some(i) = n.as_i64() {
        return Ok(Entry::Exact(Rational::from_i64(i)));
    }
    if let Some(u) = n.as_u64() {
        return Ok(Entry::Exact(normalize_rational(u, 1).expect("nonzero denominator")));
    }
    n.as_f64().map(Entry::Decimal).ok_or_else(|| bad(key, format!("{n} is not representable")))
}

fn read_pairs(text: &str) -> Result<[[Entry; 2]; 6], ConfigError> {
    let doc: Value = serde_json::from_str(text)?;
    let v: &Map<String, Value> =
        doc.get("v").and_then(Value::as_object).ok_or(ConfigError::MissingVectors)?;
    if let Some(extra) = v.keys().find(|k| !Pair::ALL.iter().any(|p| p.key() == k.as_str())) {
        return Err(ConfigError::UnknownKey(extra.clone()));
    }
    let mut out = Vec::with_capacity(6);
    for p in Pair::ALL {
        let key = p.key();
        let arr = v.get(key).ok_or(ConfigError::MissingKey(key))?;
        match arr.as_array().map(Vec::as_slice) {
            Some([a, b]) => out.push([parse_entry(key, a)?, parse_entry(key, b)?]),
            _ => return Err(ConfigError::NotAPair(key)),
        }
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!("six pairs")))
}

/// Reads a configuration for the exact backend; decimals are rejected.
pub fn parse_rational(text: &str) -> Result<Configuration<Rational>, ConfigError> {
    let pairs = read_pairs(text)?;
    let mut slots = Vec::with_capacity(6);
    for (p, [a, b]) in Pair::ALL.into_iter().zip(pairs) {
        let exact = |e: Entry| match e {
            Entry::Exact(r) => Ok(r),
            Entry::Decimal(x) => Err(bad(
                p.key(),
                format!("decimal {x} needs the float backend; write exact values as integers or \"p/q\""),
            )),
        };
        slots.push(Vec2::new(exact(a)?, exact(b)?));
    }
    Ok(Configuration::new(slots.try_into().unwrap_or_else(|_| unreachable!("six slots"))))
}

/// Reads a configuration for the float backend.
pub fn parse_float(text: &str) -> Result<Configuration<f64>, ConfigError> {
    let pairs = read_pairs(text)?;
    let slots = pairs.map(|[a, b]| {
        let f = |e: Entry| match e {
            Entry::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Entry::Decimal(x) => x,
        };
        Vec2::new(f(a), f(b))
    });
    Ok(Configuration::new(slots))
}

fn scalar_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::from(r.to_string())
}

/// Serializes an exact configuration; integers that fit in 64 bits become
/// JSON numbers, everything else a `"p/q"` string.
pub fn to_json(c: &Configuration<Rational>) -> String {
    let mut v = Map::new();
    for p in Pair::ALL {
        let x = c.at(p);
        v.insert(p.key().to_owned(), Value::Array(vec![scalar_json(&x.alpha), scalar_json(&x.beta)]));
    }
    let mut doc = Map::new();
    doc.insert("v".to_owned(), Value::Object(v));
    serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize")
}
