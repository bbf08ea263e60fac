use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Unsupported or inconsistent parameters.
    #[error("configuration error: {0}")]
    Config(String),

    /// A stabilizer or CSS code that violates its defining constraints.
    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A randomized sampler ran out of retries.
    #[error("sampling error: {0}")]
    Sampling(String),

    /// An exhaustive enumeration that would exceed its size budget.
    #[error("refused: {0}")]
    Infeasible(String),

    /// A root finder could not bracket or converge.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
