use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("double factorial out of domain: {0}!! is defined only for odd arguments >= -1")]
    DoubleFactorialDomain(i64),

    #[error("cannot differentiate order-0 series")]
    OrderZeroDerivative,

    #[error("inversion of zero")]
    InversionOfZero,

    #[error("element not regular at origin")]
    NotRegularAtOrigin,

    #[error("degree cap exceeded during {context}: degree {degree} > cap {cap}")]
    DegreeCapExceeded {
        context: String,
        degree: usize,
        cap: usize,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid bound: {0}")]
    InvalidBound(String),
}
