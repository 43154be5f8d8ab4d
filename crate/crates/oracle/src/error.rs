use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("polynomial is not alternating: {0}")]
    NotAlternating(String),

    #[error("polynomials live in different variable counts ({0} vs {1})")]
    VariableCount(usize, usize),

    #[error(transparent)]
    Core(#[from] qtdiag_core::Error),
}

pub type Result<T> = std::result::Result<T, OracleError>;
