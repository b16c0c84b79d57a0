//! Weighted Hermite-Hadamard inequalities on the standard simplex.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: log-gamma, Pochhammer symbol and its inverse root, multivariate beta.
//! - [`measures`]: weight vectors and the two simplex probability measures `ν_λ` and `μ_λ`,
//!   their Dirichlet decompositions and exact samplers.
//! - [`quadrature`]: nested deterministic and Monte Carlo integration against those measures,
//!   plus the α-power simplex volume formulas.
//! - [`means`]: standard weighted means, the integral means `𝓛_λ`, `𝕃_λ`, `𝓘_λ`, the bivariate
//!   closed forms and an axiom checker.
//! - [`hh`]: Hermite-Hadamard chain evaluation and a randomized audit.
//! - [`tables`]: the published reference tables and their recomputation.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]
pub mod error;
pub mod hh;
pub mod means;
pub mod measures;
pub mod quadrature;
pub mod specfun;
pub mod tables;

mod dirichlet;

pub use error::{Error, Result};
pub use measures::{MeasureSpec, SimplexPoint, WeightVector};
pub use quadrature::{IntegralEstimate, QuadratureConfig, QuadratureMethod};
