use alloc::string::String;

use crate::record::Function;

/// Returned by the checked kernels for a zero-length input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("statistics of an empty buffer are undefined")]
pub struct EmptyBufferError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("unknown strategy `{0}` (expected in_situ or preconverted)")]
    Strategy(String),
    #[error("unknown function `{0}` (expected mean or stddev)")]
    Function(String),
    #[error("chunk exponent must be finite and non-negative, got {0}")]
    ChunkExponent(f64),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RegressionError {
    #[error("least-squares fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate design: every x value is identical")]
    DegenerateDesign,
    #[error("point {0} is not finite")]
    NonFinite(usize),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error(
        "no chunked aggregates for baseline `{adapter}` and function {function}; cannot compute the floor"
    )]
    MissingBaseline { adapter: String, function: Function },
    #[error("sample length must be at least 1")]
    EmptySample,
    #[error(transparent)]
    Regression(#[from] RegressionError),
}
