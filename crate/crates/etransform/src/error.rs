use thiserror::Error;

use crate::cartan::GroupId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{what} is not supported for {group}")]
    Unsupported { group: GroupId, what: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("point {point:?} does not lie in the fundamental domain")]
    OutsideDomain { point: [i64; 2] },
    #[error("quadrature did not reach tolerance {requested:e} (achieved {achieved:e})")]
    Quadrature { requested: f64, achieved: f64 },
    #[error("data error: {0}")]
    Data(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
