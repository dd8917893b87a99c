//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Minkowski exponent must satisfy p >= 1, got {p}")]
    InvalidMinkowskiExponent { p: f64 },

    #[error("cluster count k must be at least 2, got {k}")]
    KTooSmall { k: usize },

    #[error("cluster count k = {k} exceeds the number of points n = {n}")]
    KExceedsPoints { k: usize, n: usize },

    #[error("assignment label {label} is out of range for k = {k}")]
    LabelOutOfRange { label: usize, k: usize },

    #[error("dataset is empty")]
    EmptyData,

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("invalid k range: expected 2 <= k_min < k_max <= n - 1, got k_min = {k_min}, k_max = {k_max}, n = {n}")]
    InvalidKRange { k_min: usize, k_max: usize, n: usize },

    #[error("dataset has no ground-truth labels; required for {context}")]
    MissingLabels { context: &'static str },

    #[error("cannot parse cell at row {row}, column {col}: {value:?}")]
    BadCell { row: usize, col: usize, value: String },

    #[error("CSV file has no data rows: {path}")]
    EmptyCsv { path: String },

    #[error("invalid synthetic spec: {0}")]
    InvalidSynthSpec(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
