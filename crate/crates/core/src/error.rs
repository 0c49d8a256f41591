use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in polynomial rings with different numbers of variables.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// An input lies outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// A valid request that this implementation does not handle.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Division by zero, a denominator that carries `lambda`, or an inexact
    /// polynomial division.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Localization produced different values at different torus weights.
    #[error("inconsistent localization: {0}")]
    Inconsistent(String),
    /// Random weight sampling kept hitting vanishing denominators.
    #[error("could not find a generic weight sample after {attempts} attempts")]
    Resample { attempts: usize },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistent(_) | Error::Resample { .. } | Error::Arithmetic(_) => 3,
            Error::Dimension(_) | Error::Domain(_) | Error::Unsupported(_) => 2,
        }
    }
}
