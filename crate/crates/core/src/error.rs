use thiserror::Error;

/// Errors produced by the clustering library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value: {0}")]
    NonFinite(f64),

    #[error("negative radius: {0}")]
    NegativeRadius(f64),

    #[error("base radius must be positive and finite, got {0}")]
    InvalidBaseRadius(f64),

    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed distance matrix: {0}")]
    MalformedMatrix(String),

    #[error("malformed dendrogram: {0}")]
    MalformedDendrogram(String),

    #[error(
        "no valid combination of {k} clusters found in the middle period (repetitions tried: {tried:?})"
    )]
    NoValidCombination {
        k: usize,
        tried: Vec<usize>,
        /// Number of extended clusters touching the middle period, per attempt.
        middle_clusters: Vec<usize>,
    },

    #[error("correlation is undefined: a cophenetic matrix has zero variance")]
    UndefinedCorrelation,

    #[error("line {line}: {message}")]
    Fasta { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
