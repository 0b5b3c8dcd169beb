//! Plain-text exact sparse matrix format.
//!
//! ```text
//! # optional comment lines
//! 56 56
//! 1 2 1
//! 3 7 -1/2
//! ```
//!
//! The first content line holds the row and column counts. Every further
//! line is `row col value` with 1-based indices and the value written as an
//! integer or `numerator/denominator` in lowest terms. Entries are listed in
//! row-major order and zero entries are omitted.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use liebranch_core::linalg::SparseMatrix;
use liebranch_core::minrep::{BilinearForm, RepMatrices};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn format_sparse(m: &SparseMatrix, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(s, "# {}", line);
        }
    }
    let _ = writeln!(s, "{} {}", m.rows(), m.cols());
    for (r, c, v) in m.iter() {
        let _ = writeln!(s, "{} {} {}", r + 1, c + 1, v);
    }
    s
}

#[derive(Debug, thiserror::Error)]
#[error("sparse matrix line {line}: {message}")]
pub struct DumpParseError {
    pub line: usize,
    pub message: String,
}

pub fn parse_sparse(text: &str) -> Result<SparseMatrix, DumpParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line, message: &str| DumpParseError {
        line,
        message: message.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| bad(0, "missing header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(hl, "bad dimension")))
        .collect::<Result<_, _>>()?;
    let [rows, cols] = dims[..] else {
        return Err(bad(hl, "header must be `rows cols`"));
    };
    let mut m = SparseMatrix::zeros(rows, cols);
    for (line, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() != 3 {
            return Err(bad(line, "expected `row col value`"));
        }
        let r: usize = t[0].parse().map_err(|_| bad(line, "bad row"))?;
        let c: usize = t[1].parse().map_err(|_| bad(line, "bad column"))?;
        if r == 0 || c == 0 || r > rows || c > cols {
            return Err(bad(line, "index out of range"));
        }
        let v: BigRational = match t[2].split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad(line, "bad numerator"))?;
                let d: BigInt = d.parse().map_err(|_| bad(line, "bad denominator"))?;
                if d == BigInt::from(0) {
                    return Err(bad(line, "zero denominator"));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t[2].parse().map_err(|_| bad(line, "bad value"))?),
        };
        m.set(r - 1, c - 1, v);
    }
    Ok(m)
}

/// Writes `x1.txt … x7.txt`, `y*.txt`, `h*.txt`, `form.txt` and
/// `weights.txt` (basis weights, one per line) into `dir`.
pub fn dump_embedding(dir: &Path, rep: &RepMatrices, form: &BilinearForm) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    for i in 1..=rep.rank() {
        for (name, m) in [("x", rep.x(i)), ("y", rep.y(i)), ("h", rep.h(i))] {
            let comment = format!("{}_{} acting on the {}-dimensional module", name, i, rep.dim());
            fs::write(dir.join(format!("{}{}.txt", name, i)), format_sparse(m, Some(&comment)))?;
        }
    }
    fs::write(
        dir.join("form.txt"),
        format_sparse(&form.to_sparse(), Some("invariant antisymmetric form M0")),
    )?;
    let mut w = String::new();
    for (k, wt) in rep.weights().iter().enumerate() {
        let _ = writeln!(w, "{} {}", k + 1, wt);
    }
    fs::write(dir.join("weights.txt"), w)
}
