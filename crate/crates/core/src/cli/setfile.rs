//! Plain-text point-set files.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! dim 2          <- optional, must be the first non-blank line
//! 0 0
//! 1, 0           <- integers separated by commas and/or whitespace
//! ```
//!
//! Every record must have the same arity, equal to the declared dimension
//! when a `dim` header is present. Repeated points are rejected.

use std::fmt::Write as _;

use thiserror::Error;

use crate::lattice::{LatticePoint, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    NotUtf8,

    #[error("line {line}: malformed dimension header")]
    BadHeader { line: usize },

    #[error("line {line}: `{token}` is not an integer")]
    NotAnInteger { line: usize, token: String },

    #[error("line {line}: expected {expected} coordinates, found {found}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: duplicate point {point}")]
    Duplicate { line: usize, point: LatticePoint },

    #[error("cannot infer the dimension of an empty set; add a `dim N` header")]
    UnknownDimension,

    #[error("declared dimension {declared} conflicts with requested dimension {requested}")]
    DimensionConflict { declared: usize, requested: usize },
}

pub fn parse_point_set_bytes(
    bytes: &[u8],
    dim_hint: Option<usize>,
) -> Result<PointSet, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotUtf8)?;
    parse_point_set(text, dim_hint)
}

/// Parses a set file. `dim_hint` fixes the dimension when the file has no
/// header (and must agree with it when it does).
pub fn parse_point_set(text: &str, dim_hint: Option<usize>) -> Result<PointSet, ParseError> {
    let mut dimension: Option<usize> = None;
    let mut seen_content = false;
    let mut records: Vec<(usize, Vec<i64>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !seen_content && content.starts_with("dim") {
            seen_content = true;
            let mut parts = content.split_whitespace();
            let (Some("dim"), Some(value), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(ParseError::BadHeader { line });
            };
            let n: usize = value.parse().map_err(|_| ParseError::BadHeader { line })?;
            if n == 0 {
                return Err(ParseError::BadHeader { line });
            }
            dimension = Some(n);
            continue;
        }
        seen_content = true;
        let coords = content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>().map_err(|_| ParseError::NotAnInteger {
                    line,
                    token: t.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        records.push((line, coords));
    }

    let dimension = match (dimension, dim_hint) {
        (Some(d), Some(h)) if d != h => {
            return Err(ParseError::DimensionConflict {
                declared: d,
                requested: h,
            })
        }
        (Some(d), _) | (None, Some(d)) => d,
        (None, None) => match records.first() {
            Some((_, first)) if !first.is_empty() => first.len(),
            _ => return Err(ParseError::UnknownDimension),
        },
    };
    if dimension == 0 {
        return Err(ParseError::UnknownDimension);
    }

    let mut set = PointSet::new(dimension).map_err(|_| ParseError::UnknownDimension)?;
    for (line, coords) in records {
        if coords.len() != dimension {
            return Err(ParseError::Ragged {
                line,
                expected: dimension,
                found: coords.len(),
            });
        }
        let point = LatticePoint::new(coords);
        if !set.insert(point.clone()).expect("arity checked") {
            return Err(ParseError::Duplicate { line, point });
        }
    }
    Ok(set)
}

/// Canonical text form: a `dim` header, then one point per line in
/// lexicographic order.
pub fn format_point_set(set: &PointSet) -> String {
    let mut out = format!("dim {}\n", set.dimension());
    for p in set {
        let mut first = true;
        for c in p.coords() {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{c}").expect("writing to a String cannot fail");
        }
        out.push('\n');
    }
    out
}
