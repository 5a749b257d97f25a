use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole value must be nonzero")]
    ZeroPole,
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("pole multiplicity must be positive, got {0}")]
    NonPositiveMultiplicity(i64),
    #[error("negative exponent z^{0} is not allowed in power mode")]
    NegativeExponent(i64),
    #[error("operands live in different modes ({0} vs {1})")]
    ModeMismatch(crate::series::Mode, crate::series::Mode),
    #[error("pole value {0} appears twice among the denominator factors")]
    DuplicatePole(Box<Scalar>),
    #[error("truncation windows differ: offset {0} len {1} vs offset {2} len {3}")]
    WindowMismatch(i64, usize, i64, usize),
    #[error("truncation length must be at least 1")]
    EmptyWindow,
    #[error("invalid scalar literal {0:?}")]
    BadScalar(String),
    #[error("invalid json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
