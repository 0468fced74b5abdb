use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at q = {0}")]
    Pole(String),
    #[error("constant term must be {expected} (found {found})")]
    ConstantTerm { expected: String, found: String },
    #[error("series have different variable counts ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size guard: {0}")]
    TooLarge(String),
    #[error("expected a non-negative integer, got {0}")]
    NotIntegral(String),
    #[error("identity violated: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
