use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("order p = {0} must be odd and at least 3")]
    InvalidOrder(u32),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("no numeric value assigned to parameter {0}")]
    MissingParameter(String),

    #[error("exponent {0} is not purely oscillatory")]
    NonOscillatory(String),

    #[error("element contains generators outside the delta subalgebra")]
    NotInDeltaSubalgebra,

    #[error("representation parameters (lambda+, lambda-) must not both vanish; use the weight representation")]
    ZeroLambda,

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
