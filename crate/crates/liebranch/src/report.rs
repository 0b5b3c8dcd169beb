//! Structured output: JSON documents and plain-text tables.

use std::fmt::Write as _;

use liebranch_core::{Decomposition, RootSystem, Weight};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Number;

/// One irreducible constituent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub hw: String,
    pub dim: Number,
    pub mult: Number,
}

/// JSON document shared by `dim`, `branch` and `tensor`. Numbers are written
/// with all digits, however large.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest_weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    pub dimension: Number,
    pub constituents: Vec<Constituent>,
}

pub fn number(n: &BigUint) -> Number {
    n.to_string().parse().expect("decimal digits form a JSON number")
}

impl Document {
    pub fn dimension_only(rs: &RootSystem, hw: &Weight, dim: &BigUint) -> Self {
        Document {
            algebra: rs.algebra_type().to_string(),
            subalgebra: None,
            highest_weight: Some(hw.to_string()),
            factors: None,
            dimension: number(dim),
            constituents: Vec::new(),
        }
    }

    pub fn constituents_of(rs: &RootSystem, d: &Decomposition) -> liebranch_core::Result<Vec<Constituent>> {
        Ok(d.with_dimensions(rs)?
            .into_iter()
            .map(|(hw, dim, mult)| Constituent {
                hw: hw.to_string(),
                dim: number(&dim),
                mult: number(&mult),
            })
            .collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Aligned text table of constituents with a dimension-sum footer.
pub fn render_constituents(title: &str, total: &BigUint, parts: &[Constituent]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", title);
    let hw_w = parts.iter().map(|c| c.hw.len()).max().unwrap_or(2).max(2);
    let dim_w = parts.iter().map(|c| c.dim.to_string().len()).max().unwrap_or(3).max(3);
    let _ = writeln!(s, "  {:<hw_w$}  {:>dim_w$}  mult", "hw", "dim");
    for c in parts {
        let _ = writeln!(s, "  {:<hw_w$}  {:>dim_w$}  {}", c.hw, c.dim.to_string(), c.mult);
    }
    let terms: Vec<String> = parts
        .iter()
        .map(|c| {
            if c.mult.to_string() == "1" {
                c.dim.to_string()
            } else {
                format!("{}({})", c.mult, c.dim)
            }
        })
        .collect();
    let _ = writeln!(s, "  total: {} = {}", terms.join(" + "), total);
    s
}
