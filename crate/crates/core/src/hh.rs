//! Hermite-Hadamard chains on the simplex.
//!
//! For convex `f` and nodes `p_1, …, p_{n+1}`:
//!
//! - with `ν_λ`: `f(Σ λ̃_i p_i) ≤ ∫ f(Σ t_i p_i) dν_λ(t) ≤ Σ λ̃_i f(p_i)`
//! - with `μ_λ`: `f(Σ λ_i p_i) ≤ ∫ f(Σ t_i p_i) dμ_λ(t) ≤ Σ λ_i f(p_i)`
//!
//! and both chains reverse for concave `f`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::means::integrate_on_line;
use crate::measures::{tilde_weights, MeasureKind, MeasureSpec, WeightVector};
use crate::quadrature::{self, IntegralEstimate, QuadratureConfig};

/// Largest dimension of vector nodes.
pub const MAX_VECTOR_DIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convexity {
    Convex,
    Concave,
}

/// How `f` consumes the nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Arity {
    /// `f: ℝ → ℝ` applied to `Σ t_i a_i` with scalar nodes.
    Scalar,
    /// `f: ℝ^m → ℝ` with nodes in `ℝ^m`.
    Vector(usize),
}

impl Arity {
    pub fn dim(self) -> usize {
        match self {
            Arity::Scalar => 1,
            Arity::Vector(m) => m,
        }
    }
}

/// Where a built-in function is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Real,
    Positive,
}

type Evaluator = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Clone)]
pub struct TestFunction {
    pub name: String,
    pub arity: Arity,
    pub convexity: Convexity,
    pub domain: Domain,
    eval: Evaluator,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("convexity", &self.convexity)
            .field("domain", &self.domain)
            .finish()
    }
}

impl TestFunction {
    /// A user-supplied function. Its declared convexity is trusted; see [`spot_check_convexity`].
    pub fn new(
        name: impl Into<String>,
        arity: Arity,
        convexity: Convexity,
        domain: Domain,
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if let Arity::Vector(m) = arity {
            if m == 0 || m > MAX_VECTOR_DIM {
                return Err(Error::InvalidConfig(format!("vector dimension {m} outside 1..={MAX_VECTOR_DIM}")));
            }
        }
        Ok(TestFunction { name: name.into(), arity, convexity, domain, eval: Arc::new(eval) })
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    pub fn exp() -> Self {
        Self::scalar("exp", Convexity::Convex, Domain::Real, f64::exp)
    }

    pub fn square() -> Self {
        Self::scalar("square", Convexity::Convex, Domain::Real, |x| x * x)
    }

    /// `−ln x`
    pub fn neglog() -> Self {
        Self::scalar("neglog", Convexity::Convex, Domain::Positive, |x| -x.ln())
    }

    /// `ln x`, the concave representative.
    pub fn log() -> Self {
        Self::scalar("log", Convexity::Concave, Domain::Positive, f64::ln)
    }

    pub fn reciprocal() -> Self {
        Self::scalar("reciprocal", Convexity::Convex, Domain::Positive, |x| 1.0 / x)
    }

    /// `x ↦ x` (affine, so the chain collapses).
    pub fn identity() -> Self {
        Self::scalar("identity", Convexity::Convex, Domain::Real, |x| x)
    }

    /// `ln Σ exp(x_j)` on `ℝ^m`.
    pub fn logsumexp(m: usize) -> Result<Self> {
        Self::new("logsumexp", Arity::Vector(m), Convexity::Convex, Domain::Real, |x: &[f64]| {
            let top = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            top + x.iter().map(|v| (v - top).exp()).sum::<f64>().ln()
        })
    }

    /// `xᵀ Q x` for a symmetric positive semidefinite `Q` given row-major.
    pub fn quadform(q: Vec<f64>) -> Result<Self> {
        let m = (q.len() as f64).sqrt().round() as usize;
        if m * m != q.len() || m == 0 {
            return Err(Error::InvalidConfig(format!("quadratic form needs a square matrix, got {} entries", q.len())));
        }
        for i in 0..m {
            for j in 0..i {
                if (q[i * m + j] - q[j * m + i]).abs() > 1e-12 * (1.0 + q[i * m + j].abs()) {
                    return Err(Error::InvalidConfig("quadratic form matrix must be symmetric".into()));
                }
            }
        }
        let eig = nalgebra::DMatrix::from_row_slice(m, m, &q).symmetric_eigenvalues();
        let scale = eig.iter().fold(0.0f64, |s, v| s.max(v.abs()));
        if eig.iter().any(|&v| v < -1e-12 * scale.max(1.0)) {
            return Err(Error::InvalidConfig("quadratic form matrix must be positive semidefinite".into()));
        }
        Self::new("quadform", Arity::Vector(m), Convexity::Convex, Domain::Real, move |x: &[f64]| {
            let mut s = 0.0;
            for i in 0..m {
                let row: f64 = (0..m).map(|j| q[i * m + j] * x[j]).sum();
                s += x[i] * row;
            }
            s
        })
    }

    /// Scalar built-ins by name.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "exp" => Ok(Self::exp()),
            "square" | "x2" | "x^2" => Ok(Self::square()),
            "neglog" => Ok(Self::neglog()),
            "log" | "ln" => Ok(Self::log()),
            "reciprocal" | "inv" => Ok(Self::reciprocal()),
            "identity" | "x" => Ok(Self::identity()),
            _ => Err(Error::InvalidConfig(format!("unknown test function {name:?}"))),
        }
    }

    fn scalar(name: &str, convexity: Convexity, domain: Domain, g: fn(f64) -> f64) -> Self {
        TestFunction {
            name: name.into(),
            arity: Arity::Scalar,
            convexity,
            domain,
            eval: Arc::new(move |x: &[f64]| g(x[0])),
        }
    }
}

/// Scalar nodes as one-dimensional points.
pub fn scalar_nodes(a: &[f64]) -> Vec<Vec<f64>> {
    a.iter().map(|&x| vec![x]).collect()
}

/// Midpoint test `f((x+y)/2) ≤ (f(x)+f(y))/2` (reversed when concave) at random pairs from the
/// convex hull of `nodes`. Returns false on the first violation.
pub fn spot_check_convexity(f: &TestFunction, nodes: &[Vec<f64>], trials: usize, seed: u64) -> bool {
    let m = f.arity.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hull_point = |rng: &mut ChaCha8Rng| {
        let raw: Vec<f64> = nodes.iter().map(|_| -rng.random::<f64>().max(f64::MIN_POSITIVE).ln()).collect();
        let total: f64 = raw.iter().sum();
        let mut p = vec![0.0; m];
        for (wi, node) in raw.iter().zip(nodes) {
            for (pj, xj) in p.iter_mut().zip(node) {
                *pj += wi / total * xj;
            }
        }
        p
    };
    for _ in 0..trials {
        let x = hull_point(&mut rng);
        let y = hull_point(&mut rng);
        let mid: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
        let (fx, fy, fm) = (f.eval(&x), f.eval(&y), f.eval(&mid));
        let avg = 0.5 * (fx + fy);
        let tol = 1e-12 * (fx.abs() + fy.abs() + fm.abs() + 1.0);
        let ok = match f.convexity {
            Convexity::Convex => fm <= avg + tol,
            Convexity::Concave => fm >= avg - tol,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// One evaluated chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HHReport {
    pub function: String,
    pub measure: MeasureKind,
    pub convexity: Convexity,
    pub left: f64,
    pub middle: IntegralEstimate,
    pub right: f64,
    /// `(middle − left, right − middle)`
    pub slack: (f64, f64),
    /// Both gaps, oriented for the declared convexity, are at least `−tolerance`.
    pub chain_ok: bool,
    pub tolerance: f64,
}

impl HHReport {
    /// The gaps, signed so that both are nonnegative for a valid chain.
    pub fn oriented_slack(&self) -> (f64, f64) {
        match self.convexity {
            Convexity::Convex => self.slack,
            Convexity::Concave => (-self.slack.0, -self.slack.1),
        }
    }

    pub fn worst_slack(&self) -> f64 {
        let (a, b) = self.oriented_slack();
        a.min(b)
    }
}

fn check_nodes(f: &TestFunction, nodes: &[Vec<f64>], n: usize) -> Result<()> {
    if nodes.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: nodes.len() });
    }
    let m = f.arity.dim();
    for (i, p) in nodes.iter().enumerate() {
        if p.len() != m {
            return Err(Error::DimensionMismatch { expected: m, got: p.len() });
        }
        let inside = p.iter().all(|x| x.is_finite() && (f.domain == Domain::Real || *x > 0.0));
        if !inside || !f.eval(p).is_finite() {
            return Err(Error::domain("hh", format!("node {} = {p:?} is outside the domain of {}", i + 1, f.name)));
        }
    }
    Ok(())
}

fn middle(f: &TestFunction, nodes: &[Vec<f64>], spec: &MeasureSpec, cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    match f.arity {
        Arity::Scalar => {
            let x: Vec<f64> = nodes.iter().map(|p| p[0]).collect();
            let g = |s: f64| f.eval(&[s]);
            integrate_on_line(&g, &x, spec, cfg)
        }
        Arity::Vector(m) => {
            let integrand = |t: &[f64]| {
                let mut p = [0.0; MAX_VECTOR_DIM];
                for (ti, node) in t.iter().zip(nodes) {
                    for (pj, xj) in p.iter_mut().zip(node) {
                        *pj += ti * xj;
                    }
                }
                f.eval(&p[..m])
            };
            quadrature::integrate(&integrand, spec, cfg)
        }
    }
}

fn chain(f: &TestFunction, weights: &[f64], nodes: &[Vec<f64>], spec: &MeasureSpec, cfg: &QuadratureConfig) -> Result<HHReport> {
    let m = f.arity.dim();
    let mut bary = vec![0.0; m];
    for (wi, p) in weights.iter().zip(nodes) {
        for (bj, xj) in bary.iter_mut().zip(p) {
            *bj += wi * xj;
        }
    }
    let left = f.eval(&bary);
    let right: f64 = weights.iter().zip(nodes).map(|(wi, p)| wi * f.eval(p)).sum();
    let mid = middle(f, nodes, spec, cfg)?;
    // rule error plus roundoff in the three evaluations
    let tolerance = mid.error_bound + 1e-12 * (left.abs() + mid.value.abs() + right.abs());
    let slack = (mid.value - left, right - mid.value);
    let mut report = HHReport {
        function: f.name.clone(),
        measure: spec.kind(),
        convexity: f.convexity,
        left,
        middle: mid,
        right,
        slack,
        chain_ok: false,
        tolerance,
    };
    report.chain_ok = report.worst_slack() >= -tolerance;
    Ok(report)
}

/// Chain for `ν_λ` with the tilde weights.
pub fn hh_nu(f: &TestFunction, w: &WeightVector, nodes: &[Vec<f64>], cfg: &QuadratureConfig) -> Result<HHReport> {
    check_nodes(f, nodes, w.n())?;
    let tilde = tilde_weights(w)?;
    chain(f, &tilde, nodes, &MeasureSpec::nu(w)?, cfg)
}

/// Chain for `μ_λ`.
pub fn hh_mu(f: &TestFunction, w: &WeightVector, nodes: &[Vec<f64>], cfg: &QuadratureConfig) -> Result<HHReport> {
    check_nodes(f, nodes, w.n())?;
    chain(f, w.full(), nodes, &MeasureSpec::mu(w)?, cfg)
}

/// Unweighted chain with the normalized Lebesgue measure, `n! ∫_{E_n} f(Σ t_i p_i) dt`.
pub fn hh_uniform(f: &TestFunction, nodes: &[Vec<f64>], cfg: &QuadratureConfig) -> Result<HHReport> {
    if nodes.len() < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: nodes.len() });
    }
    let n = nodes.len() - 1;
    check_nodes(f, nodes, n)?;
    let e = vec![1.0 / (n as f64 + 1.0); n + 1];
    chain(f, &e, nodes, &MeasureSpec::uniform(n)?, cfg)
}

/// One audit trial: the same `(f, λ, nodes)` under both measures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditTrial {
    pub index: usize,
    pub n: usize,
    pub weights: Vec<f64>,
    pub function: String,
    pub nu: HHReport,
    pub mu: HHReport,
}

impl AuditTrial {
    pub fn passed(&self) -> bool {
        self.nu.chain_ok && self.mu.chain_ok
    }

    pub fn worst_slack(&self) -> f64 {
        self.nu.worst_slack().min(self.mu.worst_slack())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditSummary {
    pub seed: u64,
    pub trials: usize,
    pub passes: usize,
    pub failures: usize,
    /// Smallest oriented gap over every chain (nonnegative in exact arithmetic).
    pub worst_slack: f64,
    pub worst_trial: Option<usize>,
    /// Trials whose evaluation itself failed (budget, non-finite values).
    pub errors: Vec<String>,
    pub records: Vec<AuditTrial>,
}

/// Names of the functions drawn by [`randomized_audit`].
pub const AUDIT_FUNCTIONS: [&str; 6] = ["exp", "square", "neglog", "reciprocal", "logsumexp", "quadform"];

/// Lower bound for every full weight in audit draws.
const WEIGHT_FLOOR: f64 = 0.02;

fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn draw_trial(seed: u64, index: usize) -> Result<(TestFunction, WeightVector, Vec<Vec<f64>>)> {
    let mut rng = trial_rng(seed, index);
    let n = rng.random_range(1..=3usize);
    let raw: Vec<f64> = (0..=n).map(|_| -rng.random::<f64>().max(f64::MIN_POSITIVE).ln()).collect();
    let total: f64 = raw.iter().sum();
    let spare = 1.0 - WEIGHT_FLOOR * (n as f64 + 1.0);
    let mut full: Vec<f64> = raw.iter().map(|r| WEIGHT_FLOOR + spare * r / total).collect();
    // put any rounding into the last weight so the sum is exact enough for from_full
    let head: f64 = full[..n].iter().sum();
    full[n] = 1.0 - head;
    let w = WeightVector::from_full(&full)?;

    let pick = AUDIT_FUNCTIONS[rng.random_range(0..AUDIT_FUNCTIONS.len())];
    let (f, lo, hi) = match pick {
        "exp" => (TestFunction::exp(), -2.0, 2.0),
        "square" => (TestFunction::square(), -3.0, 3.0),
        "neglog" => (TestFunction::neglog(), 0.1, 5.0),
        "reciprocal" => (TestFunction::reciprocal(), 0.1, 5.0),
        "logsumexp" => (TestFunction::logsumexp(rng.random_range(2..=MAX_VECTOR_DIM))?, -2.0, 2.0),
        _ => {
            let m = rng.random_range(2..=MAX_VECTOR_DIM);
            let b: Vec<f64> = (0..m * m).map(|_| rng.random_range(-1.0..1.0)).collect();
            let mut q = vec![0.0; m * m];
            for i in 0..m {
                for j in 0..m {
                    q[i * m + j] = (0..m).map(|k| b[k * m + i] * b[k * m + j]).sum();
                }
            }
            (TestFunction::quadform(q)?, -2.0, 2.0)
        }
    };
    let dim = f.arity.dim();
    let nodes = (0..=n)
        .map(|_| (0..dim).map(|_| rng.random_range(lo..hi)).collect())
        .collect();
    Ok((f, w, nodes))
}

fn run_trial(seed: u64, index: usize, cfg: &QuadratureConfig) -> Result<AuditTrial> {
    let (f, w, nodes) = draw_trial(seed, index)?;
    let nu = hh_nu(&f, &w, &nodes, cfg)?;
    let mu = hh_mu(&f, &w, &nodes, cfg)?;
    Ok(AuditTrial {
        index,
        n: w.n(),
        weights: w.full().to_vec(),
        function: f.name.clone(),
        nu,
        mu,
    })
}

/// Random Hermite-Hadamard trials under both measures. Trials run in parallel with per-trial
/// streams of one seed, so the summary does not depend on scheduling.
pub fn randomized_audit(seed: u64, trials: usize, cfg: &QuadratureConfig) -> Result<AuditSummary> {
    cfg.validate()?;
    let outcomes: Vec<Result<AuditTrial>> = (0..trials).into_par_iter().map(|i| run_trial(seed, i, cfg)).collect();
    let mut summary = AuditSummary {
        seed,
        trials,
        passes: 0,
        failures: 0,
        worst_slack: f64::INFINITY,
        worst_trial: None,
        errors: Vec::new(),
        records: Vec::with_capacity(trials),
    };
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(trial) => {
                if trial.passed() {
                    summary.passes += 1;
                } else {
                    summary.failures += 1;
                }
                let s = trial.worst_slack();
                if s < summary.worst_slack {
                    summary.worst_slack = s;
                    summary.worst_trial = Some(i);
                }
                summary.records.push(trial);
            }
            Err(e) => {
                summary.failures += 1;
                summary.errors.push(format!("trial {i}: {e}"));
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::E;

    use super::*;
    use crate::means::{log_mean_cal, NodeVector};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn wv(l: &[f64]) -> WeightVector {
        WeightVector::new(l).unwrap()
    }

    #[test]
    fn affine_chain_collapses() {
        let w = wv(&[0.2, 0.5]);
        let nodes = scalar_nodes(&[-1.0, 2.0, 4.5]);
        for r in [hh_nu(&TestFunction::identity(), &w, &nodes, &cfg()).unwrap(), hh_mu(&TestFunction::identity(), &w, &nodes, &cfg()).unwrap()] {
            assert!((r.left - r.middle.value).abs() < 1e-10 && (r.right - r.middle.value).abs() < 1e-10, "{r:?}");
            assert!(r.chain_ok);
        }
    }

    #[test]
    fn classical_case() {
        let r = hh_nu(&TestFunction::exp(), &wv(&[0.5]), &scalar_nodes(&[0.0, 1.0]), &cfg()).unwrap();
        assert!((r.left - 0.5f64.exp()).abs() < 1e-12);
        assert!((r.middle.value - (E - 1.0)).abs() < 1e-9);
        assert!((r.right - (1.0 + E) / 2.0).abs() < 1e-12);
        assert!(r.chain_ok);
    }

    #[test]
    fn mu_square_second_moment() {
        // T_1 ~ Beta(c, 1), c = 3/7: E[T_1²] = c/(c+2) = 3/17 and E[T_2²] = 2/((c+1)(c+2)) = 98/170
        let w = wv(&[0.3]);
        let f = TestFunction::square();
        let r = hh_mu(&f, &w, &scalar_nodes(&[1.0, 0.0]), &cfg()).unwrap();
        assert!((r.left - 0.09).abs() < 1e-15 && (r.right - 0.3).abs() < 1e-15);
        assert!((r.middle.value - 3.0 / 17.0).abs() < 1e-10);
        let r = hh_mu(&f, &w, &scalar_nodes(&[0.0, 1.0]), &cfg()).unwrap();
        assert!((r.left - 0.49).abs() < 1e-15 && (r.right - 0.7).abs() < 1e-15);
        assert!((r.middle.value - 98.0 / 170.0).abs() < 1e-10);
        assert!(r.chain_ok);
    }

    #[test]
    fn concave_chain_is_reversed() {
        let r = hh_nu(&TestFunction::log(), &wv(&[0.3]), &scalar_nodes(&[1.0, 2.0]), &cfg()).unwrap();
        assert!(r.slack.0 < 0.0 && r.slack.1 < 0.0);
        assert!(r.chain_ok);
        let r = hh_nu(&TestFunction::neglog(), &wv(&[0.3]), &scalar_nodes(&[1.0, 2.0]), &cfg()).unwrap();
        assert!(r.slack.0 > 0.0 && r.slack.1 > 0.0 && r.chain_ok);
    }

    #[test]
    fn mislabelled_function_fails_the_chain() {
        let fake = TestFunction::new("fake", Arity::Scalar, Convexity::Concave, Domain::Real, |x| x[0].exp()).unwrap();
        let r = hh_mu(&fake, &wv(&[0.4]), &scalar_nodes(&[0.0, 2.0]), &cfg()).unwrap();
        assert!(!r.chain_ok);
        assert!(!spot_check_convexity(&fake, &scalar_nodes(&[0.0, 2.0]), 50, 1));
        assert!(spot_check_convexity(&TestFunction::exp(), &scalar_nodes(&[0.0, 2.0]), 50, 1));
    }

    #[test]
    fn exp_middle_equals_log_mean_cal() {
        let w = wv(&[1.0 / 3.0, 1.0 / 6.0]);
        let a = [0.5, 1.0, 2.0];
        let logs: Vec<f64> = a.iter().map(|x: &f64| x.ln()).collect();
        let r = hh_mu(&TestFunction::exp(), &w, &scalar_nodes(&logs), &cfg()).unwrap();
        let l = log_mean_cal(&w, &NodeVector::new(&a).unwrap(), &cfg()).unwrap();
        assert_eq!(r.middle.value, l.value);
    }

    #[test]
    fn uniform_weights_reduce_to_lebesgue() {
        let w = WeightVector::uniform(2).unwrap();
        let nodes = scalar_nodes(&[0.3, 1.1, 2.0]);
        let f = TestFunction::exp();
        let u = hh_uniform(&f, &nodes, &cfg()).unwrap();
        for r in [hh_nu(&f, &w, &nodes, &cfg()).unwrap(), hh_mu(&f, &w, &nodes, &cfg()).unwrap()] {
            assert!((r.middle.value - u.middle.value).abs() < 1e-10);
            assert!((r.left - u.left).abs() < 1e-12 && (r.right - u.right).abs() < 1e-12);
        }
    }

    #[test]
    fn vector_functions() {
        let w = wv(&[0.25, 0.25]);
        let nodes = vec![vec![0.0, 1.0], vec![1.0, -1.0], vec![2.0, 0.5]];
        let f = TestFunction::logsumexp(2).unwrap();
        assert!(hh_nu(&f, &w, &nodes, &cfg()).unwrap().chain_ok);
        let q = TestFunction::quadform(vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        assert!(hh_mu(&q, &w, &nodes, &cfg()).unwrap().chain_ok);
        assert!(TestFunction::quadform(vec![1.0, 2.0, 2.0, 1.0]).is_err());
        assert!(TestFunction::quadform(vec![1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn node_validation() {
        let w = wv(&[0.5]);
        assert!(hh_mu(&TestFunction::neglog(), &w, &scalar_nodes(&[0.0, 1.0]), &cfg()).is_err());
        assert!(hh_mu(&TestFunction::exp(), &w, &scalar_nodes(&[0.0, 1.0, 2.0]), &cfg()).is_err());
    }

    #[test]
    fn audit_is_deterministic() {
        let empty = randomized_audit(1, 0, &cfg()).unwrap();
        assert_eq!(empty.trials, 0);
        assert_eq!(empty.records.len(), 0);
        let a = randomized_audit(7, 12, &cfg()).unwrap();
        let b = randomized_audit(7, 12, &cfg()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.passes, 12, "{:?}", a.errors);
    }
}
