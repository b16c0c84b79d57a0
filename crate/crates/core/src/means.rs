//! Weighted multivariate means.
//!
//! Conventions: `λ_i` is the weight of `a_i`, and `μ_λ` has first moments `λ`. The bivariate
//! closed forms follow `a ∇_λ b = (1 − λ) a + λ b`, i.e. their `λ` is the weight of `b`. When a
//! bivariate kind is requested through [`mean`] with an `n = 1` weight vector `(λ_1)`, the closed
//! form is therefore evaluated at `λ_2 = 1 − λ_1`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{MeasureSpec, WeightVector};
use crate::quadrature::{self, IntegralEstimate, QuadratureConfig};

/// Relative gap below which the bivariate closed forms switch to their `a = b` limit.
pub const DEGENERATE_GAP: f64 = 1e-9;

/// Positive nodes `a = (a_1, …, a_{n+1})`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeVector(Vec<f64>);

impl NodeVector {
    pub fn new(a: &[f64]) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::domain("NodeVector", format!("need at least two nodes, got {}", a.len())));
        }
        if let Some((i, v)) = a.iter().enumerate().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(Error::domain("NodeVector", format!("a_{} = {v} must be positive", i + 1)));
        }
        Ok(NodeVector(a.to_vec()))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// `s · a` for `s > 0`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        NodeVector::new(&self.0.iter().map(|x| s * x).collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeanKind {
    Arithmetic,
    Harmonic,
    Geometric,
    /// `𝓛_λ(a) = ∫ ♯_t a dμ_λ(t)`
    LogCal,
    /// `𝕃_λ(a) = (∫ (∇_t a)^{−1} dμ_λ(t))^{−1}`
    LogBb,
    /// `𝓘_λ(a) = exp ∫ ln(∇_t a) dμ_λ(t)`
    Identric,
    BivariateL,
    BivariateI,
}

impl MeanKind {
    pub const ALL: [MeanKind; 8] = [
        MeanKind::Arithmetic,
        MeanKind::Harmonic,
        MeanKind::Geometric,
        MeanKind::LogCal,
        MeanKind::LogBb,
        MeanKind::Identric,
        MeanKind::BivariateL,
        MeanKind::BivariateI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeanKind::Arithmetic => "arithmetic",
            MeanKind::Harmonic => "harmonic",
            MeanKind::Geometric => "geometric",
            MeanKind::LogCal => "logcal",
            MeanKind::LogBb => "logbb",
            MeanKind::Identric => "identric",
            MeanKind::BivariateL => "bivariatel",
            MeanKind::BivariateI => "bivariatei",
        }
    }

    /// Defined through an integral against `μ_λ`.
    pub fn is_integral(self) -> bool {
        matches!(self, MeanKind::LogCal | MeanKind::LogBb | MeanKind::Identric)
    }

    pub fn is_bivariate(self) -> bool {
        matches!(self, MeanKind::BivariateL | MeanKind::BivariateI)
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-'], "");
        let kind = match key.as_str() {
            "arithmetic" | "a" => MeanKind::Arithmetic,
            "harmonic" | "h" => MeanKind::Harmonic,
            "geometric" | "g" => MeanKind::Geometric,
            "logcal" => MeanKind::LogCal,
            "logbb" => MeanKind::LogBb,
            "identric" => MeanKind::Identric,
            "bivariatel" | "bivl" | "l" => MeanKind::BivariateL,
            "bivariatei" | "bivi" | "i" => MeanKind::BivariateI,
            _ => return Err(Error::InvalidConfig(format!("unknown mean kind {s:?}"))),
        };
        Ok(kind)
    }
}

/// A mean value. `estimate` is the underlying integral (absent for closed forms) and
/// `error_bound` its error propagated to `value`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanResult {
    pub value: f64,
    pub error_bound: f64,
    pub estimate: Option<IntegralEstimate>,
}

impl MeanResult {
    fn exact(value: f64) -> Self {
        MeanResult { value, error_bound: 0.0, estimate: None }
    }
}

fn check_dims(w: &WeightVector, a: &NodeVector) -> Result<()> {
    if a.len() != w.n() + 1 {
        return Err(Error::DimensionMismatch { expected: w.n() + 1, got: a.len() });
    }
    Ok(())
}

/// `∇_λ a = Σ λ_i a_i`
pub fn arithmetic(w: &WeightVector, a: &NodeVector) -> Result<f64> {
    check_dims(w, a)?;
    Ok(w.full().iter().zip(a.values()).map(|(l, x)| l * x).sum())
}

/// `!_λ a = (Σ λ_i / a_i)^{−1}`
pub fn harmonic(w: &WeightVector, a: &NodeVector) -> Result<f64> {
    check_dims(w, a)?;
    Ok(1.0 / w.full().iter().zip(a.values()).map(|(l, x)| l / x).sum::<f64>())
}

/// `♯_λ a = Π a_i^{λ_i}`
pub fn geometric(w: &WeightVector, a: &NodeVector) -> Result<f64> {
    check_dims(w, a)?;
    Ok(w.full().iter().zip(a.values()).map(|(l, x)| l * x.ln()).sum::<f64>().exp())
}

/// `∫ g(Σ t_i x_i) dm(t)`. The Hermite-Hadamard middles go through here as well.
pub(crate) fn integrate_on_line(
    g: &(dyn Fn(f64) -> f64 + Sync),
    x: &[f64],
    spec: &MeasureSpec,
    cfg: &QuadratureConfig,
) -> Result<IntegralEstimate> {
    if x.len() != spec.dim() + 1 {
        return Err(Error::DimensionMismatch { expected: spec.dim() + 1, got: x.len() });
    }
    let f = |t: &[f64]| g(t.iter().zip(x).map(|(ti, xi)| ti * xi).sum());
    quadrature::integrate(&f, spec, cfg)
}

/// `𝓛_λ(a)`: the integrand `♯_t a = exp(Σ t_i ln a_i)` is `exp` on the log-nodes.
pub fn log_mean_cal(w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<MeanResult> {
    check_dims(w, a)?;
    let logs: Vec<f64> = a.values().iter().map(|x| x.ln()).collect();
    let est = integrate_on_line(&f64::exp, &logs, &MeasureSpec::mu(w)?, cfg)?;
    Ok(MeanResult { value: est.value, error_bound: est.error_bound, estimate: Some(est) })
}

fn reciprocal_result(est: IntegralEstimate) -> MeanResult {
    let j = est.value;
    let error_bound = if est.error_bound < j.abs() {
        est.error_bound / (j.abs() * (j.abs() - est.error_bound))
    } else {
        f64::INFINITY
    };
    MeanResult { value: 1.0 / j, error_bound, estimate: Some(est) }
}

/// `𝕃_λ(a)`
pub fn log_mean_bb(w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<MeanResult> {
    check_dims(w, a)?;
    let est = integrate_on_line(&|s| 1.0 / s, a.values(), &MeasureSpec::mu(w)?, cfg)?;
    Ok(reciprocal_result(est))
}

/// `𝓘_λ(a)`
pub fn identric_mean(w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<MeanResult> {
    check_dims(w, a)?;
    let est = integrate_on_line(&f64::ln, a.values(), &MeasureSpec::mu(w)?, cfg)?;
    let value = est.value.exp();
    Ok(MeanResult { value, error_bound: value * est.error_bound.exp_m1(), estimate: Some(est) })
}

/// `𝕃_λ^{−1}(a^{−1}) = ∫ !_t a dμ_λ(t)`
pub fn harmonic_integral_dual(w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<MeanResult> {
    check_dims(w, a)?;
    let inv: Vec<f64> = a.values().iter().map(|x| 1.0 / x).collect();
    let est = integrate_on_line(&|s| 1.0 / s, &inv, &MeasureSpec::mu(w)?, cfg)?;
    Ok(MeanResult { value: est.value, error_bound: est.error_bound, estimate: Some(est) })
}

fn check_bivariate(func: &'static str, lambda: f64, a: f64, b: f64) -> Result<()> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(func, format!("nodes ({a}, {b}) must be positive")));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::domain(func, format!("λ = {lambda} must lie in [0, 1]")));
    }
    Ok(())
}

/// Weighted logarithmic mean
/// `L_λ(a, b) = [((1−λ)/λ)(a − a^{1−λ}b^λ) + (λ/(1−λ))(a^{1−λ}b^λ − b)] / (ln a − ln b)`.
///
/// `L_0 = a`, `L_1 = b`; `a` when `|ln a − ln b|` is below [`DEGENERATE_GAP`].
pub fn bivariate_log_mean(lambda: f64, a: f64, b: f64) -> Result<f64> {
    check_bivariate("bivariate_log_mean", lambda, a, b)?;
    if lambda == 0.0 {
        return Ok(a);
    }
    if lambda == 1.0 {
        return Ok(b);
    }
    let d = a.ln() - b.ln();
    if d.abs() < DEGENERATE_GAP {
        return Ok(a);
    }
    // a − g = −a·expm1(−λd), g − b = b·expm1((1−λ)d) with g = a^{1−λ} b^λ
    let a_minus_g = -a * (-lambda * d).exp_m1();
    let g_minus_b = b * ((1.0 - lambda) * d).exp_m1();
    Ok(((1.0 - lambda) / lambda * a_minus_g + lambda / (1.0 - lambda) * g_minus_b) / d)
}

/// Weighted identric mean, with `m = (1−λ)a + λb`:
/// `ln I_λ(a, b) = −1 + ln m + [λb/(1−λ) · ln(b/m) − (1−λ)a/λ · ln(a/m)] / (b − a)`,
/// which is the usual closed form with the `ln m` terms collected.
///
/// `I_0 = a`, `I_1 = b`; `a` when `|a − b|` is below [`DEGENERATE_GAP`] relative.
pub fn bivariate_identric_mean(lambda: f64, a: f64, b: f64) -> Result<f64> {
    check_bivariate("bivariate_identric_mean", lambda, a, b)?;
    if lambda == 0.0 {
        return Ok(a);
    }
    if lambda == 1.0 {
        return Ok(b);
    }
    let diff = b - a;
    if diff.abs() < DEGENERATE_GAP * a.max(b) {
        return Ok(a);
    }
    let m = (1.0 - lambda) * a + lambda * b;
    let ln_b_m = ((1.0 - lambda) * diff / m).ln_1p();
    let ln_a_m = (-lambda * diff / m).ln_1p();
    let bracket = (lambda * b / (1.0 - lambda) * ln_b_m - (1.0 - lambda) * a / lambda * ln_a_m) / diff;
    Ok((m.ln() + (bracket - 1.0)).exp())
}

/// Unweighted logarithmic mean `(b − a)/(ln b − ln a)`.
pub fn log_mean(a: f64, b: f64) -> Result<f64> {
    bivariate_log_mean(0.5, a, b)
}

/// Unweighted identric mean `e^{−1} (b^b / a^a)^{1/(b−a)}`.
pub fn identric(a: f64, b: f64) -> Result<f64> {
    bivariate_identric_mean(0.5, a, b)
}

fn bivariate_args(kind: MeanKind, w: &WeightVector, a: &NodeVector) -> Result<(f64, f64, f64)> {
    if w.n() != 1 {
        return Err(Error::InvalidConfig(format!("{kind} needs n = 1, got n = {}", w.n())));
    }
    check_dims(w, a)?;
    Ok((w.full()[1], a.values()[0], a.values()[1]))
}

/// Evaluates any [`MeanKind`].
pub fn mean(kind: MeanKind, w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<MeanResult> {
    match kind {
        MeanKind::Arithmetic => arithmetic(w, a).map(MeanResult::exact),
        MeanKind::Harmonic => harmonic(w, a).map(MeanResult::exact),
        MeanKind::Geometric => geometric(w, a).map(MeanResult::exact),
        MeanKind::LogCal => log_mean_cal(w, a, cfg),
        MeanKind::LogBb => log_mean_bb(w, a, cfg),
        MeanKind::Identric => identric_mean(w, a, cfg),
        MeanKind::BivariateL => {
            let (l, x, y) = bivariate_args(kind, w, a)?;
            bivariate_log_mean(l, x, y).map(MeanResult::exact)
        }
        MeanKind::BivariateI => {
            let (l, x, y) = bivariate_args(kind, w, a)?;
            bivariate_identric_mean(l, x, y).map(MeanResult::exact)
        }
    }
}

/// Corner offset for axiom (ii).
pub const CORNER_EPS: f64 = 1e-3;
/// Step for the central differences of axiom (iv).
pub const FD_STEP: f64 = 1e-4;
/// Tolerance on the partial derivatives of axiom (iv).
pub const FD_TOL: f64 = 1e-4;
const PERMUTATIONS: usize = 10;

fn slack(r: &MeanResult) -> f64 {
    r.error_bound + 1e-12 * r.value.abs()
}

/// Outcome of the four weighted-mean conditions for one `(kind, λ, a)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub kind: MeanKind,
    pub value: f64,
    /// (i) `min a ≤ m ≤ max a`
    pub bounds: bool,
    /// (ii) at `λ = (1−ε)e_i + ε e`, `!_λ a ≤ m ≤ ∇_λ a` for every corner `i`
    pub corners: bool,
    pub corner_values: Vec<f64>,
    /// (iii) at `λ = e`, invariance under random permutations of `a`
    pub symmetry: bool,
    pub symmetry_spread: f64,
    /// (iv) `∂m/∂a_i (1, …, 1) = λ_i`
    pub partials_ok: bool,
    pub partials: Vec<f64>,
    pub max_partial_deviation: f64,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.bounds && self.corners && self.symmetry && self.partials_ok
    }
}

/// Numerically checks the weighted-mean conditions. The corner condition is checked as a limit
/// through the harmonic/arithmetic sandwich, since the integral means need interior weights.
pub fn check_mean_axioms(kind: MeanKind, w: &WeightVector, a: &NodeVector, cfg: &QuadratureConfig) -> Result<AxiomReport> {
    check_dims(w, a)?;
    let n = w.n();
    let m = n + 1;

    let base = mean(kind, w, a, cfg)?;
    let bounds = base.value >= a.min() - slack(&base) && base.value <= a.max() + slack(&base);

    let mut corners = true;
    let mut corner_values = Vec::with_capacity(m);
    for i in 0..m {
        let full: Vec<f64> = (0..m)
            .map(|j| CORNER_EPS / m as f64 + if j == i { 1.0 - CORNER_EPS } else { 0.0 })
            .collect();
        let wc = WeightVector::from_full(&full)?;
        let r = mean(kind, &wc, a, cfg)?;
        let lo = harmonic(&wc, a)?;
        let hi = arithmetic(&wc, a)?;
        corners &= r.value >= lo - slack(&r) && r.value <= hi + slack(&r);
        corner_values.push(r.value);
    }

    let e = WeightVector::uniform(n)?;
    let reference = mean(kind, &e, a, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut perm = a.values().to_vec();
    let mut spread: f64 = 0.0;
    let mut symmetry = true;
    for _ in 0..PERMUTATIONS {
        perm.shuffle(&mut rng);
        let r = mean(kind, &e, &NodeVector::new(&perm)?, cfg)?;
        let gap = (r.value - reference.value).abs();
        spread = spread.max(gap);
        symmetry &= gap <= slack(&r) + slack(&reference) + 1e-10 * reference.value.abs();
    }

    let mut partials = Vec::with_capacity(m);
    let mut deviation: f64 = 0.0;
    for i in 0..m {
        let mut up = vec![1.0; m];
        let mut down = vec![1.0; m];
        up[i] += FD_STEP;
        down[i] -= FD_STEP;
        let fu = mean(kind, w, &NodeVector::new(&up)?, cfg)?.value;
        let fd = mean(kind, w, &NodeVector::new(&down)?, cfg)?.value;
        let d = (fu - fd) / (2.0 * FD_STEP);
        deviation = deviation.max((d - w.full()[i]).abs());
        partials.push(d);
    }

    Ok(AxiomReport {
        kind,
        value: base.value,
        bounds,
        corners,
        corner_values,
        symmetry,
        symmetry_spread: spread,
        partials_ok: deviation <= FD_TOL,
        partials,
        max_partial_deviation: deviation,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::E;

    use super::*;

    fn wv(l: &[f64]) -> WeightVector {
        WeightVector::new(l).unwrap()
    }

    fn nv(a: &[f64]) -> NodeVector {
        NodeVector::new(a).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn standard_means_examples() {
        let e2 = WeightVector::uniform(2).unwrap();
        assert!((arithmetic(&e2, &nv(&[1.0, 2.0, 3.0])).unwrap() - 2.0).abs() < 1e-15);
        let w = wv(&[1.0 / 3.0, 1.0 / 6.0]);
        assert!((arithmetic(&w, &nv(&[0.5, 1.0, 2.0])).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        let half = wv(&[0.5]);
        assert!((harmonic(&half, &nv(&[1.0, 4.0])).unwrap() - 1.6).abs() < 1e-15);
        assert!((geometric(&half, &nv(&[1.0, 4.0])).unwrap() - 2.0).abs() < 1e-15);
        for f in [arithmetic, harmonic, geometric] {
            assert!((f(&w, &nv(&[2.5; 3])).unwrap() - 2.5).abs() < 1e-15);
        }
        assert!(arithmetic(&w, &nv(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn node_vector_validation() {
        assert!(NodeVector::new(&[1.0]).is_err());
        assert!(NodeVector::new(&[1.0, 0.0]).is_err());
        assert!(NodeVector::new(&[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn integral_means_published_values() {
        let w = wv(&[1.0 / 3.0, 1.0 / 6.0]);
        let a = nv(&[0.5, 1.0, 2.0]);
        assert!((log_mean_cal(&w, &a, &cfg()).unwrap().value - 1.193929).abs() < 2e-6);
        assert!((log_mean_bb(&w, &a, &cfg()).unwrap().value - 1.196129).abs() < 2e-6);
        assert!((identric_mean(&w, &a, &cfg()).unwrap().value - 1.267715).abs() < 2e-6);
        let w = wv(&[0.2, 0.25]);
        let a = nv(&[1.3, 1.5, 1.9]);
        assert!((log_mean_cal(&w, &a, &cfg()).unwrap().value - 1.667216).abs() < 2e-6);
        assert!((log_mean_bb(&w, &a, &cfg()).unwrap().value - 1.665996).abs() < 2e-6);
        let w = wv(&[0.05, 0.2]);
        let a = nv(&[19.0, 1.0, 1.0]);
        assert!((log_mean_cal(&w, &a, &cfg()).unwrap().value - 1.360403).abs() < 2e-6);
        assert!((identric_mean(&w, &a, &cfg()).unwrap().value - 1.352532).abs() < 2e-6);
    }

    #[test]
    fn constant_nodes_give_the_constant() {
        let w = wv(&[0.2, 0.3]);
        let a = nv(&[3.0; 3]);
        for kind in [MeanKind::LogCal, MeanKind::LogBb, MeanKind::Identric] {
            assert!((mean(kind, &w, &a, &cfg()).unwrap().value - 3.0).abs() < 1e-12, "{kind}");
        }
        assert!((harmonic_integral_dual(&w, &a, &cfg()).unwrap().value - 3.0).abs() < 1e-12);
    }

    #[test]
    fn bivariate_closed_forms() {
        assert!((bivariate_log_mean(1.0 / 3.0, 2.0, 1.0).unwrap() - 1.614229).abs() < 1e-6);
        assert!((bivariate_log_mean(0.9, 4.0, 3.0).unwrap() - 3.091624).abs() < 1e-6);
        assert!((log_mean(E, 1.0).unwrap() - (E - 1.0)).abs() < 1e-15);
        assert!((bivariate_identric_mean(0.75, 3.0, 1.0).unwrap() - 1.433668).abs() < 1e-6);
        assert!((bivariate_identric_mean(0.2, 6.5, 6.0).unwrap() - 6.398933).abs() < 1e-6);
        assert!((identric(1.0, E).unwrap() - 1.789_572_396_841_833_6).abs() < 1e-14);
    }

    #[test]
    fn bivariate_limits() {
        assert_eq!(bivariate_log_mean(0.0, 2.0, 5.0).unwrap(), 2.0);
        assert_eq!(bivariate_log_mean(1.0, 2.0, 5.0).unwrap(), 5.0);
        assert_eq!(bivariate_identric_mean(0.0, 2.0, 5.0).unwrap(), 2.0);
        assert_eq!(bivariate_identric_mean(1.0, 2.0, 5.0).unwrap(), 5.0);
        assert_eq!(bivariate_log_mean(0.3, 2.0, 2.0).unwrap(), 2.0);
        assert_eq!(bivariate_identric_mean(0.3, 2.0, 2.0).unwrap(), 2.0);
        // continuous through the cutoff
        let near = bivariate_log_mean(0.3, 2.0, 2.0 * (1.0 + 1e-8)).unwrap();
        assert!((near - 2.0).abs() < 1e-7);
        let near = bivariate_identric_mean(0.3, 2.0, 2.0 * (1.0 + 1e-8)).unwrap();
        assert!((near - 2.0).abs() < 1e-7);
        assert!(bivariate_log_mean(1.5, 1.0, 2.0).is_err());
        assert!(bivariate_identric_mean(0.5, -1.0, 2.0).is_err());
    }

    #[test]
    fn bivariate_kind_uses_weight_of_second_node() {
        let w = wv(&[1.0 / 3.0]);
        let a = nv(&[2.0, 1.0]);
        let r = mean(MeanKind::BivariateL, &w, &a, &cfg()).unwrap();
        assert!((r.value - bivariate_log_mean(2.0 / 3.0, 2.0, 1.0).unwrap()).abs() < 1e-15);
        assert!(mean(MeanKind::BivariateI, &wv(&[0.2, 0.3]), &nv(&[1.0, 2.0, 3.0]), &cfg()).is_err());
    }

    #[test]
    fn bivariate_collapse_at_half() {
        let w = wv(&[0.5]);
        let a = nv(&[1.5, 4.0]);
        let l = log_mean(1.5, 4.0).unwrap();
        assert!((log_mean_cal(&w, &a, &cfg()).unwrap().value - l).abs() < 1e-8);
        assert!((log_mean_bb(&w, &a, &cfg()).unwrap().value - l).abs() < 1e-8);
        assert!((identric_mean(&w, &a, &cfg()).unwrap().value - identric(1.5, 4.0).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn harmonic_dual_sandwich() {
        let w = wv(&[0.5]);
        let a = nv(&[1.0, 4.0]);
        let v = harmonic_integral_dual(&w, &a, &cfg()).unwrap().value;
        assert!((1.6..=2.0).contains(&v), "{v}");
        assert!(v <= log_mean_cal(&w, &a, &cfg()).unwrap().value);
    }

    #[test]
    fn kind_parsing() {
        for kind in MeanKind::ALL {
            assert_eq!(kind.name().parse::<MeanKind>().unwrap(), kind);
        }
        assert_eq!("LogCal".parse::<MeanKind>().unwrap(), MeanKind::LogCal);
        assert!("median".parse::<MeanKind>().is_err());
    }

    #[test]
    fn axioms_examples() {
        let w = wv(&[1.0 / 3.0, 1.0 / 6.0]);
        let a = nv(&[0.5, 1.0, 2.0]);
        for kind in [MeanKind::Geometric, MeanKind::LogCal, MeanKind::Identric] {
            let r = check_mean_axioms(kind, &w, &a, &cfg()).unwrap();
            assert!(r.all_pass(), "{r:?}");
        }
        let r = check_mean_axioms(MeanKind::BivariateL, &wv(&[0.3]), &nv(&[2.0, 5.0]), &cfg()).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}
