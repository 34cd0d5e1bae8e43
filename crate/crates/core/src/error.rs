use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A truncated series does not carry enough terms for the requested result.
    #[error("insufficient precision: requested order {required}, available order {available}")]
    InsufficientPrecision { required: i64, available: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
