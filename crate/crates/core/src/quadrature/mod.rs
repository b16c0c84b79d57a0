//! Integration over the standard simplex against the measures of [`crate::measures`].
//!
//! Integrands receive the full barycentric point `(t_1, …, t_{n+1})`.
//!
//! The deterministic path decomposes the measure into Dirichlet components and integrates each
//! with the nested engine (see `nested`). The Monte Carlo path draws exact samples from the
//! measure and reports three standard errors as its bound.

mod jacobi;
mod kronrod;
mod monte_carlo;
mod nested;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{DirichletMixture, MeasureSpec};
use crate::specfun;

/// Largest simplex dimension accepted by [`integrate`].
pub const MAX_DIM: usize = 16;

/// Dimension up to which `Auto` picks the deterministic engine.
pub const AUTO_NESTED_MAX_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureMethod {
    Auto,
    NestedAdaptive,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub method: QuadratureMethod,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: u64,
    /// Only used by Monte Carlo.
    pub seed: u64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            method: QuadratureMethod::Auto,
            abs_tol: 1e-9,
            rel_tol: 1e-8,
            max_evals: 10_000_000,
            seed: 0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerances must be positive (abs_tol = {}, rel_tol = {})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_evals < 1000 {
            return Err(Error::InvalidConfig(format!("max_evals = {} must be at least 1000", self.max_evals)));
        }
        Ok(())
    }

    pub fn with_method(mut self, method: QuadratureMethod) -> Self {
        self.method = method;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_tolerances(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_evals(mut self, max_evals: u64) -> Self {
        self.max_evals = max_evals;
        self
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodUsed {
    NestedAdaptive,
    MonteCarlo,
}

/// Value, error bound and cost of an integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralEstimate {
    pub value: f64,
    /// Rule-difference estimate for the deterministic path, three standard errors for Monte Carlo.
    pub error_bound: f64,
    pub evals: u64,
    pub method_used: MethodUsed,
}

fn resolve(method: QuadratureMethod, n: usize) -> MethodUsed {
    match method {
        QuadratureMethod::NestedAdaptive => MethodUsed::NestedAdaptive,
        QuadratureMethod::MonteCarlo => MethodUsed::MonteCarlo,
        QuadratureMethod::Auto if n <= AUTO_NESTED_MAX_DIM => MethodUsed::NestedAdaptive,
        QuadratureMethod::Auto => MethodUsed::MonteCarlo,
    }
}

/// `∫_{E_n} f(t) dm(t)` for the probability measure `m` described by `spec`.
pub fn integrate(f: &dyn Fn(&[f64]) -> f64, spec: &MeasureSpec, cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    cfg.validate()?;
    let n = spec.dim();
    if n > MAX_DIM {
        return Err(Error::InvalidConfig(format!("dimension {n} exceeds the supported maximum {MAX_DIM}")));
    }
    match resolve(cfg.method, n) {
        MethodUsed::NestedAdaptive => integrate_mixture(f, &spec.mixture(), cfg),
        MethodUsed::MonteCarlo => monte_carlo::integrate(f, spec, cfg),
    }
}

/// `E[f(T)]` for `T ~ Dirichlet(alpha)` with the deterministic engine.
pub fn integrate_dirichlet(f: &dyn Fn(&[f64]) -> f64, alpha: &[f64], cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    let mix = DirichletMixture::new(vec![crate::measures::DirichletComponent {
        weight: 1.0,
        concentration: alpha.to_vec(),
    }])?;
    integrate_mixture(f, &mix, cfg)
}

/// Component-wise deterministic integration of a Dirichlet mixture.
pub fn integrate_mixture(f: &dyn Fn(&[f64]) -> f64, mix: &DirichletMixture, cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    cfg.validate()?;
    let mut parts = Vec::with_capacity(mix.components.len());
    let mut error = 0.0;
    let mut evals = 0u64;
    let mut exhausted = false;
    for comp in &mix.components {
        if comp.concentration.len() < 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: comp.concentration.len() });
        }
        let budget = cfg.max_evals.saturating_sub(evals);
        let outcome = nested::Nested::new(f, &comp.concentration, cfg.abs_tol, cfg.rel_tol, budget.max(1)).run()?;
        parts.push(comp.weight * outcome.value);
        error += comp.weight * outcome.error;
        evals += outcome.evals;
        exhausted |= outcome.exhausted;
    }
    let estimate = IntegralEstimate {
        value: kronrod::total(parts.into_iter()),
        error_bound: error,
        evals,
        method_used: MethodUsed::NestedAdaptive,
    };
    if exhausted && estimate.error_bound > cfg.target(estimate.value) {
        return Err(Error::BudgetExhausted { estimate });
    }
    Ok(estimate)
}

fn check_alpha(func: &'static str, alpha: &[f64]) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::domain(func, "need at least one exponent"));
    }
    if let Some(a) = alpha.iter().find(|a| !(**a > 0.0) || !a.is_finite()) {
        return Err(Error::domain(func, format!("exponent {a} must be positive")));
    }
    Ok(())
}

/// Lebesgue volume of the α-power simplex `F_n = { t ≥ 0 : Σ t_i^{α_i} ≤ 1 }`:
/// `B_n(1/α_1, …, 1/α_n) / (Π α_i · Σ 1/α_i)`.
pub fn power_simplex_volume(alpha: &[f64]) -> Result<f64> {
    check_alpha("power_simplex_volume", alpha)?;
    let inv: Vec<f64> = alpha.iter().map(|a| 1.0 / a).collect();
    let ln_b = specfun::log_beta_any(&inv)?;
    let ln_prod: f64 = alpha.iter().map(|a| a.ln()).sum();
    let ln_sum = inv.iter().sum::<f64>().ln();
    Ok((ln_b - ln_prod - ln_sum).exp())
}

/// `(1/|F_n|) ∫_{F_n} t_i^{α_i} dt = α_i^{−1} / (Σ α_j^{−1} + 1)` with 1-based `i`.
pub fn power_simplex_moment(alpha: &[f64], i: usize) -> Result<f64> {
    check_alpha("power_simplex_moment", alpha)?;
    if i == 0 || i > alpha.len() {
        return Err(Error::IndexOutOfRange { index: i, len: alpha.len() });
    }
    let inv_sum: f64 = alpha.iter().map(|a| 1.0 / a).sum();
    Ok((1.0 / alpha[i - 1]) / (inv_sum + 1.0))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::measures::{tilde_weights, WeightVector};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(cfg().validate().is_ok());
        assert!(cfg().with_tolerances(0.0, 1e-8).validate().is_err());
        assert!(cfg().with_max_evals(999).validate().is_err());
    }

    #[test]
    fn constant_integrates_to_one() {
        let w = WeightVector::new(&[0.1, 0.3, 0.2]).unwrap();
        for spec in [MeasureSpec::nu(&w).unwrap(), MeasureSpec::mu(&w).unwrap(), MeasureSpec::uniform(3).unwrap()] {
            let est = integrate(&|_| 1.0, &spec, &cfg()).unwrap();
            assert!((est.value - 1.0).abs() < 1e-12, "{:?}: {}", spec.kind(), est.value);
            assert_eq!(est.method_used, MethodUsed::NestedAdaptive);
        }
    }

    #[test]
    fn first_moments_examples() {
        let w = WeightVector::new(&[1.0 / 3.0, 1.0 / 6.0]).unwrap();
        let nu = MeasureSpec::nu(&w).unwrap();
        let mu = MeasureSpec::mu(&w).unwrap();
        let tilde = tilde_weights(&w).unwrap();
        for j in 0..3 {
            let m = integrate(&|t| t[j], &nu, &cfg()).unwrap();
            assert!((m.value - tilde[j]).abs() < 1e-10);
            let m = integrate(&|t| t[j], &mu, &cfg()).unwrap();
            assert!((m.value - w.full()[j]).abs() < 1e-10);
        }
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let spec = MeasureSpec::uniform(2).unwrap();
        let err = integrate(&|t| if t[0] > 0.5 { f64::NAN } else { 1.0 }, &spec, &cfg()).unwrap_err();
        match err {
            Error::NonFiniteIntegrand { point } => assert!(point[0] > 0.5 && point.len() == 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_carries_estimate() {
        // a kink defeats the polynomial rules, a tight tolerance with a tiny budget cannot be met
        let spec = MeasureSpec::uniform(3).unwrap();
        let c = cfg().with_tolerances(1e-14, 1e-14).with_max_evals(1000);
        match integrate(&|t| (t[0] - 0.3).abs(), &spec, &c) {
            Err(Error::BudgetExhausted { estimate }) => {
                assert!(estimate.value.is_finite() && estimate.error_bound > 0.0);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn kinked_integrand_falls_back_to_subdivision() {
        // E|T_1 − 1/2| for T_1 ~ Beta(1, 1) = 1/4
        let spec = MeasureSpec::uniform(1).unwrap();
        let est = integrate(&|t| (t[0] - 0.5).abs(), &spec, &cfg()).unwrap();
        assert!((est.value - 0.25).abs() < 1e-9, "{est:?}");
    }

    #[test]
    fn monte_carlo_is_used_above_threshold() {
        let spec = MeasureSpec::uniform(5).unwrap();
        let c = cfg().with_tolerances(1e-3, 1e-3).with_max_evals(200_000).with_seed(9);
        let est = integrate(&|t| t[0], &spec, &c).unwrap();
        assert_eq!(est.method_used, MethodUsed::MonteCarlo);
        assert!((est.value - 1.0 / 6.0).abs() <= est.error_bound.max(1e-3));
        let again = integrate(&|t| t[0], &spec, &c).unwrap();
        assert_eq!(est, again);
    }

    #[test]
    fn dimension_limit() {
        let spec = MeasureSpec::uniform(17).unwrap();
        assert!(integrate(&|_| 1.0, &spec, &cfg()).is_err());
    }

    #[test]
    fn power_simplex_volume_examples() {
        for n in 1..=6 {
            let v = power_simplex_volume(&vec![1.0; n]).unwrap();
            assert!((v - 1.0 / specfun::factorial(n as u32)).abs() < 1e-14);
        }
        assert!((power_simplex_volume(&[2.0, 2.0]).unwrap() - PI / 4.0).abs() < 1e-14);
        assert!((power_simplex_volume(&[3.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!(power_simplex_volume(&[1.0, 0.0]).is_err());
        assert!(power_simplex_volume(&[]).is_err());
    }

    #[test]
    fn power_simplex_moment_examples() {
        for n in 1..=5 {
            for i in 1..=n {
                let m = power_simplex_moment(&vec![1.0; n], i).unwrap();
                assert!((m - 1.0 / (n as f64 + 1.0)).abs() < 1e-15);
            }
        }
        let m = power_simplex_moment(&[1.5, 3.0], 1).unwrap();
        assert!((m - 1.0 / 3.0).abs() < 1e-15);
        assert!((power_simplex_moment(&[2.0, 2.0], 1).unwrap() - 0.25).abs() < 1e-15);
        assert!(matches!(power_simplex_moment(&[2.0, 2.0], 3), Err(Error::IndexOutOfRange { .. })));
        assert!(power_simplex_moment(&[2.0, 2.0], 0).is_err());
    }
}
