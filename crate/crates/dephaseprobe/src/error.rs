//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the domain of an operation.
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },

    /// The adaptive quadrature exhausted its subdivision budget.
    #[error(
        "quadrature did not converge: value {value:.6e}, error estimate {error_estimate:.3e}, \
         requested {requested:.3e}"
    )]
    QuadratureNonConvergence {
        value: f64,
        error_estimate: f64,
        requested: f64,
    },

    /// A density matrix violated a probe-state invariant.
    #[error("invalid probe state: {0}")]
    InvalidState(String),

    /// A Bloch vector was not a unit vector.
    #[error("invalid measurement axis: {0}")]
    InvalidAxis(String),

    /// Matrix dimensions did not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A simulated experiment could not produce a usable result.
    #[error("experiment failed: {0}")]
    Experiment(String),

    /// No rate model with the requested name is registered.
    #[error("unknown rate model {name:?}; available: {available}")]
    UnknownRateModel { name: String, available: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            op,
            message: message.into(),
        }
    }
}
