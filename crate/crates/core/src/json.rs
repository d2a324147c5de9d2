//! Helpers for the JSON wire format. Numbers are rationals written as strings
//! `"p/q"`; plain JSON integers are accepted on input.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational};

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

pub fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

pub fn opt_field<'a>(obj: &'a Value, key: &str) -> Option<&'a Value> {
    obj.get(key).filter(|v| !v.is_null())
}

pub fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be an array")))
}

pub fn string(v: &Value, what: &str) -> Result<String> {
    v.as_str().map(str::to_owned).ok_or_else(|| Error::Parse(format!("{what} must be a string")))
}

pub fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("{what} must be a nonnegative integer")))
}

pub fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(Error::Parse(format!("expected a rational string, found {v}"))),
    }
}

pub fn rational_vec(v: &Value) -> Result<Vec<Rational>> {
    array(v, "vector")?.iter().map(rational).collect()
}

pub fn rational_rows(v: &Value) -> Result<Vec<Vec<Rational>>> {
    array(v, "matrix")?.iter().map(rational_vec).collect()
}

pub fn int_vec(v: &Value) -> Result<Vec<BigInt>> {
    rational_vec(v)?
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Parse(format!("expected an integer, found {}", format_rational(&x))))
            }
        })
        .collect()
}

pub fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?.iter().map(|x| string(x, what)).collect()
}

pub fn q_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn qvec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

pub fn qrows_json(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| qvec_json(r)).collect())
}

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
pub fn ivec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn int_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_owned(), v);
    }
    Value::Object(m)
}
