use thiserror::Error;

/// Errors raised by the numerical kernels and the model layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("{what} did not converge within {iterations} iterations (partial value {partial})")]
    Convergence {
        what: &'static str,
        iterations: usize,
        partial: f64,
    },

    #[error("series truncation failed: tail bound {tail_bound:e} after {terms} terms")]
    Truncation { terms: usize, tail_bound: f64 },

    #[error("quadrature did not reach tolerance: estimate {estimate}, error {error:e}")]
    Quadrature { estimate: f64, error: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
