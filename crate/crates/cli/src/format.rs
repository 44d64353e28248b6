//! JSON file formats.
//!
//! A polytope is `{"dim": n, "vertices": [["p/q", ...], ...]}` with every
//! coordinate a string holding an integer or a fraction. A formal sum is a
//! list `[{"coef": c, "polytope": {...}}, ...]`. Output is canonical: hull
//! vertices in lexicographic order, sum terms in class order, no whitespace.

use convexval_core::group::{ClassRep, FormalSum};
use convexval_core::{Point, Polytope, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{field}: expected {expected} coordinates, found {found}")]
    DimensionMismatch {
        field: String,
        expected: usize,
        found: usize,
    },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn syntax(e: serde_json::Error) -> FormatError {
    FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    dim: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coef: i64,
    polytope: PolytopeJson,
}

/// A parsed polytope plus how many listed points were not extreme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPolytope {
    pub polytope: Polytope,
    pub pruned: usize,
}

fn decode_polytope(raw: PolytopeJson, path: &str) -> Result<ParsedPolytope, FormatError> {
    if raw.vertices.is_empty() {
        return Err(field(format!("{path}vertices"), "at least one vertex is required"));
    }
    let mut points = Vec::with_capacity(raw.vertices.len());
    for (i, row) in raw.vertices.iter().enumerate() {
        if row.len() != raw.dim {
            return Err(FormatError::DimensionMismatch {
                field: format!("{path}vertices[{i}]"),
                expected: raw.dim,
                found: row.len(),
            });
        }
        let coords = row
            .iter()
            .enumerate()
            .map(|(j, text)| {
                text.parse::<Rational>()
                    .map_err(|e| field(format!("{path}vertices[{i}][{j}]"), e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(Point::new(coords));
    }
    let listed = points.len();
    let polytope = Polytope::hull(points).map_err(|e| field(format!("{path}vertices"), e.to_string()))?;
    Ok(ParsedPolytope {
        pruned: listed - polytope.vertices().len(),
        polytope,
    })
}

fn encode_polytope(p: &Polytope) -> PolytopeJson {
    PolytopeJson {
        dim: p.ambient_dim(),
        vertices: p
            .vertices()
            .iter()
            .map(|v| v.coords().iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

pub fn parse_polytope(text: &str) -> Result<ParsedPolytope, FormatError> {
    let raw: PolytopeJson = serde_json::from_str(text).map_err(syntax)?;
    decode_polytope(raw, "")
}

/// Canonical single-line JSON.
pub fn polytope_to_json(p: &Polytope) -> String {
    serde_json::to_string(&encode_polytope(p)).expect("plain data serializes")
}

pub fn polytope_value(p: &Polytope) -> Value {
    serde_json::to_value(encode_polytope(p)).expect("plain data serializes")
}

/// Reads a formal sum. A bare polytope object is read as its class with
/// coefficient 1. Terms of the same class merge; zero sums are dropped.
pub fn parse_formal_sum(text: &str) -> Result<FormalSum, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(syntax)?;
    if value.is_object() {
        let raw: PolytopeJson = serde_json::from_value(value).map_err(|e| field("polytope", e.to_string()))?;
        return Ok(convexval_core::group::class_of(&decode_polytope(raw, "")?.polytope));
    }
    let raw: Vec<TermJson> = serde_json::from_value(value).map_err(|e| field("terms", e.to_string()))?;
    let mut sum = FormalSum::empty();
    let mut dim = None;
    for (i, term) in raw.into_iter().enumerate() {
        let p = decode_polytope(term.polytope, &format!("[{i}].polytope."))?.polytope;
        match dim {
            None => dim = Some(p.ambient_dim()),
            Some(n) if n != p.ambient_dim() => {
                return Err(FormatError::DimensionMismatch {
                    field: format!("[{i}].polytope"),
                    expected: n,
                    found: p.ambient_dim(),
                })
            }
            Some(_) => {}
        }
        sum.add_term(ClassRep::of(&p), BigInt::from(term.coef));
    }
    Ok(sum)
}

pub fn formal_sum_value(s: &FormalSum) -> Value {
    Value::Array(
        s.terms()
            .map(|(k, c)| {
                let coef = i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()));
                serde_json::json!({ "coef": coef, "polytope": polytope_value(k.polytope()) })
            })
            .collect(),
    )
}

/// Canonical single-line JSON.
pub fn formal_sum_to_json(s: &FormalSum) -> String {
    formal_sum_value(s).to_string()
}
