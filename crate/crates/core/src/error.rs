use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HitError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("empty box: {0}")]
    EmptyBox(String),
    #[error("{0}")]
    ZeroPolynomial(String),
    #[error("degree cap exceeded: {0}")]
    DegreeCap(String),
    #[error("polynomial is reducible; factor: {factor}")]
    Reducible { factor: String },
    #[error("inseparable specialization: {0}")]
    Inseparable(String),
    #[error("unsupported characteristic for resolvent method: {0}")]
    UnsupportedCharacteristic(String),
    #[error("polynomial is not monic in Y")]
    NotMonic,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("input is not symmetric")]
    NotSymmetric,
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("missing parameter: {0}")]
    MissingParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl HitError {
    /// Validation errors are the caller's fault (CLI exit code 2); the rest are bugs.
    pub fn is_validation(&self) -> bool {
        !matches!(self, HitError::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, HitError>;
