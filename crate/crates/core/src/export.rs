//! Sequence interchange formats: OEIS-style b-files, CSV and JSON.
//!
//! All three carry integers losslessly. Every sequence starts at offset 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::verify::json_integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
    Bfile,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "bfile" => Ok(Format::Bfile),
            other => Err(format!("unknown format `{other}` (expected text, json, csv or bfile)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Bfile => "bfile",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("invalid JSON sequence: {0}")]
    Json(String),
}

/// One `n a(n)` pair per line, space separated, from `n = 0`, newline
/// terminated, no header.
pub fn to_bfile(values: &[BigInt]) -> String {
    let mut out = String::new();
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n} {v}\n"));
    }
    out
}

/// Header `n,<name>` then one row per term.
pub fn to_csv(name: &str, values: &[BigInt]) -> String {
    let mut out = format!("n,{name}\n");
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

/// `{"name": .., "offset": 0, "values": [..]}`; values past 53 bits are
/// decimal strings.
pub fn to_json(name: &str, values: &[BigInt]) -> String {
    let doc = serde_json::json!({
        "name": name,
        "offset": 0,
        "values": values.iter().map(json_integer).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Renders a sequence; `Text` is the b-file layout.
pub fn render(format: Format, name: &str, values: &[BigInt]) -> String {
    match format {
        Format::Text | Format::Bfile => to_bfile(values),
        Format::Csv => to_csv(name, values),
        Format::Json => to_json(name, values),
    }
}

fn parse_int(s: &str, line: usize) -> Result<BigInt, ParseError> {
    s.trim().parse().map_err(|_| ParseError::Line {
        line,
        reason: format!("`{s}` is not an integer"),
    })
}

fn expect_index(got: &str, expected: usize, line: usize) -> Result<(), ParseError> {
    match got.trim().parse::<usize>() {
        Ok(n) if n == expected => Ok(()),
        _ => Err(ParseError::Line {
            line,
            reason: format!("expected index {expected}, found `{got}`"),
        }),
    }
}

pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut fields = raw.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(ParseError::Line {
                line,
                reason: "expected `n a(n)`".into(),
            });
        };
        expect_index(n, values.len(), line)?;
        values.push(parse_int(v, line)?);
    }
    Ok(values)
}

pub fn parse_csv(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.starts_with("n,") => {}
        _ => {
            return Err(ParseError::Line {
                line: 1,
                reason: "missing `n,<name>` header".into(),
            })
        }
    }
    let mut values = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let Some((n, v)) = raw.split_once(',') else {
            return Err(ParseError::Line {
                line,
                reason: "expected `n,value`".into(),
            });
        };
        expect_index(n, values.len(), line)?;
        values.push(parse_int(v, line)?);
    }
    Ok(values)
}

pub fn parse_json(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if doc.get("offset").and_then(|o| o.as_u64()) != Some(0) {
        return Err(ParseError::Json("expected \"offset\": 0".into()));
    }
    let items = doc
        .get("values")
        .and_then(|v| v.as_array())
        .ok_or_else(|| ParseError::Json("missing \"values\" array".into()))?;
    items
        .iter()
        .map(|item| match item {
            serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n
                .to_string()
                .parse()
                .map_err(|_| ParseError::Json(format!("bad integer {n}"))),
            serde_json::Value::String(s) => s
                .parse()
                .map_err(|_| ParseError::Json(format!("bad integer string {s:?}"))),
            other => Err(ParseError::Json(format!("not an integer: {other}"))),
        })
        .collect()
}

pub fn parse(format: Format, text: &str) -> Result<Vec<BigInt>, ParseError> {
    match format {
        Format::Text | Format::Bfile => parse_bfile(text),
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bfile_layout() {
        assert_eq!(to_bfile(&ints(&[1, 1, 0, 1, 5])), "0 1\n1 1\n2 0\n3 1\n4 5\n");
        assert_eq!(to_bfile(&[]), "");
    }

    #[test]
    fn csv_layout() {
        assert_eq!(to_csv("u", &ints(&[0, 0, 2])), "n,u\n0,0\n1,0\n2,2\n");
    }

    #[test]
    fn json_layout() {
        let doc: serde_json::Value = serde_json::from_str(&to_json("p", &ints(&[1]))).unwrap();
        assert_eq!(doc["values"], serde_json::json!([1]));
        assert_eq!(doc["offset"], 0);
        let big = BigInt::from(1u64 << 60);
        let doc: serde_json::Value = serde_json::from_str(&to_json("x", std::slice::from_ref(&big))).unwrap();
        assert_eq!(doc["values"][0], big.to_string());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_bfile("0 1\n2 5\n").is_err());
        assert!(parse_bfile("0 x\n").is_err());
        assert!(parse_csv("0,1\n").is_err());
        assert!(parse_json("{\"values\": [1]}").is_err());
        assert!(parse_json("{\"offset\": 0, \"values\": [1.5]}").is_err());
    }

    fn arb_values() -> impl Strategy<Value = Vec<BigInt>> {
        prop::collection::vec(
            prop::collection::vec(any::<u32>(), 1..6).prop_flat_map(|digits| {
                any::<bool>().prop_map(move |neg| {
                    let mag = num_bigint::BigUint::new(digits.clone());
                    let v = BigInt::from(mag);
                    if neg { -v } else { v }
                })
            }),
            0..40,
        )
    }

    proptest! {
        #[test]
        fn every_format_round_trips(values in arb_values()) {
            for format in [Format::Bfile, Format::Csv, Format::Json, Format::Text] {
                let text = render(format, "a", &values);
                prop_assert_eq!(&parse(format, &text).unwrap(), &values);
            }
        }
    }
}
