use thiserror::Error;

/// Errors raised by the combinatorial, series and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid permutation {0:?}: must contain each of 1..=n exactly once")]
    InvalidPermutation(Vec<usize>),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("truncation mismatch: series truncated at degree {left} and {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("weight {weight} exceeds truncation degree {truncation}")]
    ExceedsTruncation { weight: usize, truncation: usize },

    #[error("constant term violation: {0}")]
    ConstantTerm(&'static str),

    #[error("non-integral value in {0}")]
    NonIntegral(String),

    #[error("routes disagree for {quantity}: {detail}")]
    RouteDisagreement { quantity: String, detail: String },

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
