use thiserror::Error;

pub type Result<T> = std::result::Result<T, LerchError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LerchError {
    /// An argument violates a precondition (non-finite value, `n = 0`, `α ≤ -1`, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Outside the domain of the integral representation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The a priori sizing asks for more nodes than the rule generator allows.
    #[error("sizing overflow: {required} nodes required, limit is {limit} (z too close to the cut [1, inf)?)")]
    SizingOverflow { required: f64, limit: usize },

    #[error("tridiagonal eigensolver did not converge for eigenvalue {index} after {iterations} iterations")]
    EigenNoConvergence { index: usize, iterations: usize },

    #[error("quadrature nodes are not strictly increasing at index {index}")]
    NonMonotonicNodes { index: usize },

    /// An oracle could not reach its tolerance within its budget.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

impl LerchError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        LerchError::InvalidParameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        LerchError::Domain(msg.into())
    }
}
