//! Probability measures on the standard simplex `E_n = { t ∈ ℝⁿ : t_i ≥ 0, Σ t_i ≤ 1 }`.
//!
//! Points are carried in full barycentric form `(t_1, …, t_n, t_{n+1})` with
//! `t_{n+1} = 1 − Σ t_i`, which keeps the last coordinate accurate when it is small.
//!
//! Two weighted measures are provided, both indexed by an interior weight vector `λ`:
//!
//! - `ν_λ` with density `n! Σ_{i=1}^{n+1} λ_i t_i^{λ_{i,n}}`, where
//!   `λ_{i,n} = [n! λ_i / λ_{i+1}]_{−n} − 1` and `λ_{n+2} = λ_1`. It is the mixture of the
//!   Dirichlet laws with concentration `λ_{i,n} + 1` on coordinate `i` (ones elsewhere) and
//!   mixture weight `λ_{i+1}`. Its first moments are the tilde weights.
//! - `μ_λ`, the Dirichlet law with concentrations `(λ_1/λ_{n+1}, …, λ_n/λ_{n+1}, 1)`; its first
//!   moments are `λ` itself.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dirichlet;
use crate::error::{Error, Result};
use crate::specfun::{self, PochhammerQuery};

/// Interior weight vector `λ = (λ_1, …, λ_n) ∈ int(E_n)` with derived `λ_{n+1} = 1 − Σ λ_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    /// All `n + 1` weights.
    full: Vec<f64>,
    /// `successor[i] = λ_{i+1}` with `λ_{n+2} = λ_1`.
    successor: Vec<f64>,
}

impl WeightVector {
    /// Builds `λ` from its `n` free coordinates. Boundary points of `E_n` are rejected.
    pub fn new(lam: &[f64]) -> Result<Self> {
        if lam.is_empty() {
            return Err(Error::InvalidWeights("need at least one weight (n ≥ 1)".into()));
        }
        if let Some((i, v)) = lam.iter().enumerate().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidWeights(format!(
                "λ_{} = {v} is not in (0, 1); weights must lie in int(E_n)",
                i + 1
            )));
        }
        let last = 1.0 - lam.iter().sum::<f64>();
        if !(last > 0.0) {
            return Err(Error::InvalidWeights(format!(
                "Σ λ_i = {} must be < 1 so that λ_{{n+1}} > 0; weights must lie in int(E_n)",
                1.0 - last
            )));
        }
        let mut full = lam.to_vec();
        full.push(last);
        Ok(Self::from_full_unchecked(full))
    }

    /// Builds `λ` from all `n + 1` weights, which must be positive and sum to one.
    pub fn from_full(full: &[f64]) -> Result<Self> {
        if full.len() < 2 {
            return Err(Error::InvalidWeights("need at least two full weights".into()));
        }
        let total: f64 = full.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidWeights(format!("full weights sum to {total}, not 1")));
        }
        if let Some((i, v)) = full.iter().enumerate().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidWeights(format!(
                "λ_{} = {v} is not in (0, 1); weights must lie in int(E_n)",
                i + 1
            )));
        }
        Ok(Self::from_full_unchecked(full.to_vec()))
    }

    /// `λ = e = (1/(n+1), …, 1/(n+1))`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWeights("n must be at least 1".into()));
        }
        let v = 1.0 / (n as f64 + 1.0);
        Ok(Self::from_full_unchecked(vec![v; n + 1]))
    }

    fn from_full_unchecked(full: Vec<f64>) -> Self {
        let m = full.len();
        let successor = (0..m).map(|i| full[(i + 1) % m]).collect();
        WeightVector { full, successor }
    }

    /// Dimension `n` of the simplex.
    pub fn n(&self) -> usize {
        self.full.len() - 1
    }

    /// `(λ_1, …, λ_{n+1})`.
    pub fn full(&self) -> &[f64] {
        &self.full
    }

    /// `(λ_1, …, λ_n)`.
    pub fn free(&self) -> &[f64] {
        &self.full[..self.n()]
    }

    /// `λ_{n+1}`.
    pub fn last(&self) -> f64 {
        self.full[self.n()]
    }

    /// `(λ_2, …, λ_{n+1}, λ_1)`.
    pub fn successors(&self) -> &[f64] {
        &self.successor
    }
}

/// A point of `E_n` in barycentric form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    /// From the `n` free coordinates; `t_{n+1}` is derived.
    pub fn new(t: &[f64]) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::InvalidPoint("need at least one coordinate".into()));
        }
        if let Some(v) = t.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(Error::InvalidPoint(format!("coordinate {v} is negative or not finite")));
        }
        let total: f64 = t.iter().sum();
        if total > 1.0 + 1e-12 {
            return Err(Error::InvalidPoint(format!("coordinates sum to {total} > 1")));
        }
        let mut coords = t.to_vec();
        coords.push((1.0 - total).max(0.0));
        Ok(SimplexPoint { coords })
    }

    /// From all `n + 1` barycentric coordinates.
    pub fn from_barycentric(coords: &[f64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint("need at least two barycentric coordinates".into()));
        }
        if let Some(v) = coords.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(Error::InvalidPoint(format!("coordinate {v} is negative or not finite")));
        }
        let total: f64 = coords.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPoint(format!("barycentric coordinates sum to {total}")));
        }
        Ok(SimplexPoint { coords: coords.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// `(t_1, …, t_n)`.
    pub fn t(&self) -> &[f64] {
        &self.coords[..self.dim()]
    }

    /// `(t_1, …, t_{n+1})`.
    pub fn barycentric(&self) -> &[f64] {
        &self.coords
    }
}

/// Exponents `(λ_{1,n}, …, λ_{n+1,n})` of the `ν_λ` density.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentVector(Vec<f64>);

impl ExponentVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `λ_{i,n} = [n! λ_i / λ_{i+1}]_{−n} − 1` for `i = 1, …, n+1`, cyclic in `i`.
pub fn lambda_exponents(w: &WeightVector) -> Result<ExponentVector> {
    let n = w.n() as u32;
    let n_fact = specfun::factorial(n);
    w.full()
        .iter()
        .zip(w.successors())
        .map(|(&li, &next)| {
            let root = specfun::inverse_pochhammer(PochhammerQuery::new(n_fact * li / next, n)?)?;
            Ok(root - 1.0)
        })
        .collect::<Result<Vec<_>>>()
        .map(ExponentVector)
}

fn tilde_from_exponents(w: &WeightVector, exps: &ExponentVector) -> Vec<f64> {
    let n1 = w.n() as f64 + 1.0;
    let e = exps.as_slice();
    let succ = w.successors();
    // off[j] = λ_{j+1} / (λ_{j,n} + n + 1)
    let off: Vec<f64> = (0..e.len()).map(|j| succ[j] / (e[j] + n1)).collect();
    let off_total: f64 = off.iter().sum();
    (0..e.len())
        .map(|i| off_total - off[i] + succ[i] * (e[i] + 1.0) / (e[i] + n1))
        .collect()
}

/// First moments `λ̃(i, n)` of `ν_λ`.
pub fn tilde_weights(w: &WeightVector) -> Result<Vec<f64>> {
    let exps = lambda_exponents(w)?;
    Ok(tilde_from_exponents(w, &exps))
}

/// One Dirichlet component of a mixture.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirichletComponent {
    pub weight: f64,
    pub concentration: Vec<f64>,
}

/// Finite mixture of Dirichlet laws on `E_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirichletMixture {
    pub components: Vec<DirichletComponent>,
}

impl DirichletMixture {
    pub fn new(components: Vec<DirichletComponent>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidConfig("mixture needs at least one component".into()));
        };
        let len = first.concentration.len();
        let mut total = 0.0;
        for comp in &components {
            if comp.concentration.len() != len {
                return Err(Error::DimensionMismatch { expected: len, got: comp.concentration.len() });
            }
            if !(comp.weight > 0.0) || comp.concentration.iter().any(|c| !(*c > 0.0) || !c.is_finite()) {
                return Err(Error::InvalidConfig(format!("bad mixture component {comp:?}")));
            }
            total += comp.weight;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidConfig(format!("mixture weights sum to {total}")));
        }
        Ok(DirichletMixture { components })
    }

    /// Mixture density with respect to `dt_1 … dt_n`.
    pub fn density(&self, t: &SimplexPoint) -> Result<f64> {
        let mut total = 0.0;
        for comp in &self.components {
            total += comp.weight * dirichlet_density(&comp.concentration, t)?;
        }
        Ok(total)
    }
}

/// Dirichlet density on `E_n` at `t` (barycentric length must match `alpha`).
pub fn dirichlet_density(alpha: &[f64], t: &SimplexPoint) -> Result<f64> {
    let x = t.barycentric();
    if x.len() != alpha.len() {
        return Err(Error::DimensionMismatch { expected: alpha.len(), got: x.len() });
    }
    let mut log = -specfun::log_multivariate_beta(alpha)?;
    for (i, (&a, &xi)) in alpha.iter().zip(x).enumerate() {
        if a == 1.0 {
            continue;
        }
        if xi == 0.0 {
            if a < 1.0 {
                return Err(Error::SingularDensity { index: i + 1 });
            }
            return Ok(0.0);
        }
        log += (a - 1.0) * xi.ln();
    }
    Ok(log.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Nu,
    Mu,
    Uniform,
}

/// A probability measure on `E_n` together with what is needed to integrate against it and
/// sample from it. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureSpec {
    Nu {
        weights: WeightVector,
        exponents: ExponentVector,
    },
    Mu {
        weights: WeightVector,
        /// `(λ_1/λ_{n+1}, …, λ_n/λ_{n+1}, 1)`
        concentrations: Vec<f64>,
        /// `ln(Σ c_i / B_n(c_1, …, c_n))`
        ln_norm: f64,
    },
    /// Normalized Lebesgue measure, density `n!`.
    Uniform { dim: usize },
}

impl MeasureSpec {
    pub fn nu(weights: &WeightVector) -> Result<Self> {
        let exponents = lambda_exponents(weights)?;
        Ok(MeasureSpec::Nu { weights: weights.clone(), exponents })
    }

    pub fn mu(weights: &WeightVector) -> Result<Self> {
        let concentrations = mu_as_dirichlet(weights);
        let free = &concentrations[..weights.n()];
        let total: f64 = free.iter().sum();
        let ln_norm = total.ln() - specfun::log_beta_any(free)?;
        Ok(MeasureSpec::Mu { weights: weights.clone(), concentrations, ln_norm })
    }

    pub fn uniform(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConfig("uniform measure needs n ≥ 1".into()));
        }
        Ok(MeasureSpec::Uniform { dim })
    }

    pub fn kind(&self) -> MeasureKind {
        match self {
            MeasureSpec::Nu { .. } => MeasureKind::Nu,
            MeasureSpec::Mu { .. } => MeasureKind::Mu,
            MeasureSpec::Uniform { .. } => MeasureKind::Uniform,
        }
    }

    /// Dimension `n` of the underlying simplex.
    pub fn dim(&self) -> usize {
        match self {
            MeasureSpec::Nu { weights, .. } | MeasureSpec::Mu { weights, .. } => weights.n(),
            MeasureSpec::Uniform { dim } => *dim,
        }
    }

    pub fn weights(&self) -> Option<&WeightVector> {
        match self {
            MeasureSpec::Nu { weights, .. } | MeasureSpec::Mu { weights, .. } => Some(weights),
            MeasureSpec::Uniform { .. } => None,
        }
    }

    /// Density with respect to `dt_1 … dt_n`. A zero coordinate under a negative power is an
    /// error rather than an infinity.
    pub fn density(&self, t: &SimplexPoint) -> Result<f64> {
        let n = self.dim();
        if t.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: t.dim() });
        }
        let x = t.barycentric();
        match self {
            MeasureSpec::Nu { weights, exponents } => {
                let mut total = 0.0;
                for (i, ((&li, &e), &xi)) in weights.full().iter().zip(exponents.as_slice()).zip(x).enumerate() {
                    if xi == 0.0 && e < 0.0 {
                        return Err(Error::SingularDensity { index: i + 1 });
                    }
                    total += li * xi.powf(e);
                }
                Ok(specfun::factorial(n as u32) * total)
            }
            MeasureSpec::Mu { concentrations, ln_norm, .. } => {
                let mut log = *ln_norm;
                for (i, (&c, &xi)) in concentrations[..n].iter().zip(x).enumerate() {
                    if c == 1.0 {
                        continue;
                    }
                    if xi == 0.0 {
                        if c < 1.0 {
                            return Err(Error::SingularDensity { index: i + 1 });
                        }
                        return Ok(0.0);
                    }
                    log += (c - 1.0) * xi.ln();
                }
                Ok(log.exp())
            }
            MeasureSpec::Uniform { .. } => Ok(specfun::factorial(n as u32)),
        }
    }

    /// The measure as a finite Dirichlet mixture.
    pub fn mixture(&self) -> DirichletMixture {
        match self {
            MeasureSpec::Nu { weights, exponents } => nu_mixture_from(weights, exponents),
            MeasureSpec::Mu { concentrations, .. } => DirichletMixture {
                components: vec![DirichletComponent { weight: 1.0, concentration: concentrations.clone() }],
            },
            MeasureSpec::Uniform { dim } => DirichletMixture {
                components: vec![DirichletComponent { weight: 1.0, concentration: vec![1.0; dim + 1] }],
            },
        }
    }

    /// `count` i.i.d. draws, deterministic in `seed`.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<SimplexPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sampler = Sampler::new(self);
        (0..count)
            .map(|_| SimplexPoint { coords: sampler.draw(&mut rng).to_vec() })
            .collect()
    }
}

/// Reusable exact sampler; draws are written into an internal buffer.
pub(crate) struct Sampler {
    kind: SamplerKind,
    buf: Vec<f64>,
}

enum SamplerKind {
    Uniform,
    Dirichlet(Vec<f64>),
    Mixture { cumulative: Vec<f64>, components: Vec<Vec<f64>> },
}

impl Sampler {
    pub(crate) fn new(spec: &MeasureSpec) -> Self {
        let buf = vec![0.0; spec.dim() + 1];
        let kind = match spec {
            MeasureSpec::Uniform { .. } => SamplerKind::Uniform,
            MeasureSpec::Mu { concentrations, .. } => SamplerKind::Dirichlet(concentrations.clone()),
            MeasureSpec::Nu { .. } => {
                let mix = spec.mixture();
                let mut acc = 0.0;
                let cumulative = mix
                    .components
                    .iter()
                    .map(|c| {
                        acc += c.weight;
                        acc
                    })
                    .collect();
                let components = mix.components.into_iter().map(|c| c.concentration).collect();
                SamplerKind::Mixture { cumulative, components }
            }
        };
        Sampler { kind, buf }
    }

    pub(crate) fn draw<R: Rng + ?Sized>(&mut self, rng: &mut R) -> &[f64] {
        match &self.kind {
            SamplerKind::Uniform => dirichlet::sample_uniform_into(rng, &mut self.buf),
            SamplerKind::Dirichlet(alpha) => dirichlet::sample_into(rng, alpha, &mut self.buf),
            SamplerKind::Mixture { cumulative, components } => {
                let u: f64 = rng.random::<f64>() * cumulative[cumulative.len() - 1];
                let k = cumulative.iter().position(|&c| u < c).unwrap_or(cumulative.len() - 1);
                dirichlet::sample_into(rng, &components[k], &mut self.buf);
            }
        }
        &self.buf
    }
}

fn nu_mixture_from(w: &WeightVector, exps: &ExponentVector) -> DirichletMixture {
    let m = w.n() + 1;
    let components = (0..m)
        .map(|i| {
            let mut concentration = vec![1.0; m];
            concentration[i] = exps.as_slice()[i] + 1.0;
            DirichletComponent { weight: w.successors()[i], concentration }
        })
        .collect();
    DirichletMixture { components }
}

/// Density of `ν_λ` at `t`.
pub fn nu_density(w: &WeightVector, t: &SimplexPoint) -> Result<f64> {
    MeasureSpec::nu(w)?.density(t)
}

/// Density of `μ_λ` at `t`.
pub fn mu_density(w: &WeightVector, t: &SimplexPoint) -> Result<f64> {
    MeasureSpec::mu(w)?.density(t)
}

/// `ν_λ` as `n + 1` Dirichlet components; component `i` has weight `λ_{i+1}`.
pub fn nu_as_mixture(w: &WeightVector) -> Result<DirichletMixture> {
    Ok(nu_mixture_from(w, &lambda_exponents(w)?))
}

/// Dirichlet concentrations `(λ_1/λ_{n+1}, …, λ_n/λ_{n+1}, 1)` of `μ_λ`.
pub fn mu_as_dirichlet(w: &WeightVector) -> Vec<f64> {
    let last = w.last();
    let mut c: Vec<f64> = w.free().iter().map(|&l| l / last).collect();
    c.push(1.0);
    c
}
