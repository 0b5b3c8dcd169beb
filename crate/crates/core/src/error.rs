use alloc::string::String;

use crate::weight::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported algebra {family}{rank}")]
    UnsupportedType { family: char, rank: usize },

    #[error("weight {weight} has {got} labels, expected {expected}")]
    RankMismatch {
        weight: Weight,
        expected: usize,
        got: usize,
    },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("projection matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ProjectionShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("projection is inconsistent with the weights of the defining module: {0}")]
    InconsistentProjection(String),

    #[error("negative multiplicity {mult} for weight {weight} during subtraction")]
    NegativeMultiplicity { weight: Weight, mult: String },

    #[error("module construction failed: {0}")]
    Construction(String),

    #[error("invariant form search failed: {0}")]
    InvariantForm(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
