use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: cannot combine {left} with {right}")]
    RingMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("variable t{0} has no assigned value")]
    UnassignedVariable(u32),
    #[error("variable t{0} appears with a negative exponent but its value is not invertible")]
    NotInvertible(u32),
    #[error("coefficient {0} is not representable in the target ring")]
    NotRepresentable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension {n} exceeds the brute-force limit of {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
