use thiserror::Error;

/// Everything that can go wrong when building data structures or running the dynamic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dataset has no rows")]
    EmptyDataset,

    #[error("need at least two feature columns, got {0}")]
    TooFewColumns(usize),

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("expected {expected} {what}, got {got}")]
    WrongCount {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("entry {value} at row {row}, column {col} lies outside [0, 1]")]
    OutOfRange { row: usize, col: usize, value: f64 },

    #[error("negative entry {value} at row {row}, column {col}")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("column {col} has maximum 0, ratio normalization undefined")]
    ZeroColumn { col: usize },

    #[error("column mean {value} at column {col} lies outside [0, 1]")]
    MeanOutOfRange { col: usize, value: f64 },

    #[error("weight {value} at index {index} is negative")]
    NegativeWeight { index: usize, value: f64 },

    #[error("weight at index {index} is not finite")]
    NonFiniteWeight { index: usize },

    #[error("weights sum to {sum}, cannot renormalize")]
    ZeroWeightSum { sum: f64 },

    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("update factor 1 + delta is not positive for feature {feature}")]
    PositivityViolation { feature: usize },

    #[error("row {row} has zero weighted fitness, dependence undefined")]
    ZeroFitnessRow { row: usize },

    #[error("iteration config invalid: {0}")]
    BadConfig(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
