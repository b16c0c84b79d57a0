use thiserror::Error;

use crate::quadrature::IntegralEstimate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid simplex point: {0}")]
    InvalidPoint(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("density is singular at coordinate {index} (zero coordinate with negative exponent)")]
    SingularDensity { index: usize },

    #[error("evaluation budget exhausted: best estimate {} with error bound {}", .estimate.value, .estimate.error_bound)]
    BudgetExhausted { estimate: IntegralEstimate },

    #[error("integrand is not finite at {point:?}")]
    NonFiniteIntegrand { point: Vec<f64> },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }
}
