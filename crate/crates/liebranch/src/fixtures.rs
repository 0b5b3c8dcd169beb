//! Reference data shipped with the crate.
//!
//! All fixture files are line oriented. `#` starts a comment line, blank lines
//! are ignored, and table columns are separated by `|`.
//!
//! * `projection_matrix.txt`: one matrix row per line, integers separated by
//!   whitespace.
//! * `branching_c28_e7.txt`: `hw | dim | c_1 + c_2 + … | d_1 + d_2 + …` where
//!   each `c_i` is an E7 highest weight with optional `k*` multiplicity prefix.
//! * `tensor_c28.txt`: `hw_1 x hw_2 x … | dim | k*d + …`, the decomposition
//!   given by constituent dimensions.

use liebranch_core::{ProjectionMatrix, Weight};
use num_bigint::BigUint;

pub const PROJECTION_MATRIX: &str = include_str!("../fixtures/projection_matrix.txt");
pub const BRANCHING_TABLE: &str = include_str!("../fixtures/branching_c28_e7.txt");
pub const TENSOR_TABLE: &str = include_str!("../fixtures/tensor_c28.txt");

#[derive(Debug, thiserror::Error)]
#[error("fixture line {line}: {message}")]
pub struct FixtureError {
    pub line: usize,
    pub message: String,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn err(line: usize, message: impl Into<String>) -> FixtureError {
    FixtureError {
        line,
        message: message.into(),
    }
}

fn parse_weight(line: usize, s: &str) -> Result<Weight, FixtureError> {
    s.trim().parse().map_err(|e| err(line, format!("{}", e)))
}

fn parse_big(line: usize, s: &str) -> Result<BigUint, FixtureError> {
    s.trim()
        .parse()
        .map_err(|_| err(line, format!("bad integer `{}`", s.trim())))
}

/// `k*item` or `item`.
fn split_mult(line: usize, s: &str) -> Result<(BigUint, &str), FixtureError> {
    match s.split_once('*') {
        Some((k, rest)) => Ok((parse_big(line, k)?, rest.trim())),
        None => Ok((BigUint::from(1u32), s.trim())),
    }
}

pub fn parse_projection_matrix(text: &str) -> Result<ProjectionMatrix, FixtureError> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let row: Result<Vec<i32>, _> = l
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| err(line, format!("bad entry `{}`", t))))
            .collect();
        rows.push(row?);
    }
    ProjectionMatrix::new(rows).map_err(|e| err(0, e.to_string()))
}

pub fn published_projection_matrix() -> ProjectionMatrix {
    parse_projection_matrix(PROJECTION_MATRIX).expect("bundled projection matrix parses")
}

/// One row of the branching table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingRow {
    pub highest_weight: Weight,
    pub dimension: BigUint,
    /// `(E7 highest weight, dimension, multiplicity)`
    pub constituents: Vec<(Weight, BigUint, BigUint)>,
}

pub fn parse_branching_table(text: &str) -> Result<Vec<BranchingRow>, FixtureError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        let cols: Vec<&str> = l.split('|').collect();
        if cols.len() != 4 {
            return Err(err(line, "expected 4 columns"));
        }
        let hws: Vec<&str> = cols[2].split('+').collect();
        let dims: Vec<&str> = cols[3].split('+').collect();
        if hws.len() != dims.len() {
            return Err(err(line, "constituent and dimension counts differ"));
        }
        let mut constituents = Vec::new();
        for (h, d) in hws.iter().zip(&dims) {
            let (m, h) = split_mult(line, h)?;
            constituents.push((parse_weight(line, h)?, parse_big(line, d)?, m));
        }
        out.push(BranchingRow {
            highest_weight: parse_weight(line, cols[0])?,
            dimension: parse_big(line, cols[1])?,
            constituents,
        });
    }
    Ok(out)
}

/// One row of the tensor product table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorRow {
    pub factors: Vec<Weight>,
    pub dimension: BigUint,
    /// `(constituent dimension, multiplicity)`
    pub constituents: Vec<(BigUint, BigUint)>,
}

pub fn parse_tensor_table(text: &str) -> Result<Vec<TensorRow>, FixtureError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        let cols: Vec<&str> = l.split('|').collect();
        if cols.len() != 3 {
            return Err(err(line, "expected 3 columns"));
        }
        let factors = cols[0]
            .split('x')
            .map(|f| parse_weight(line, f))
            .collect::<Result<Vec<_>, _>>()?;
        let constituents = cols[2]
            .split('+')
            .map(|c| {
                let (m, d) = split_mult(line, c)?;
                Ok((parse_big(line, d)?, m))
            })
            .collect::<Result<Vec<_>, FixtureError>>()?;
        out.push(TensorRow {
            factors,
            dimension: parse_big(line, cols[1])?,
            constituents,
        });
    }
    Ok(out)
}

pub fn branching_table() -> Vec<BranchingRow> {
    parse_branching_table(BRANCHING_TABLE).expect("bundled branching table parses")
}

pub fn tensor_table() -> Vec<TensorRow> {
    parse_tensor_table(TENSOR_TABLE).expect("bundled tensor table parses")
}
