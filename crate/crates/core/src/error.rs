//! Error type shared by every engine.

/// Errors raised by the engines.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weights belong to different root data ({0} vs {1})")]
    DatumMismatch(String, String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not supported at this scale: {0}")]
    Capability(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
    #[error("truncation precision {0} too small")]
    Precision(usize),
    #[error("{0} is not a sum of minuscule coweights")]
    NoDecomposition(String),
    #[error("odd total side length {0}")]
    Parity(i64),
    #[error("side {index} of length {side} exceeds the sum {rest} of the others")]
    Triangle { index: usize, side: i64, rest: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
