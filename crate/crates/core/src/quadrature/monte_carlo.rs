use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{IntegralEstimate, MethodUsed, QuadratureConfig};
use crate::error::{Error, Result};
use crate::measures::{MeasureSpec, Sampler};

const BATCH: u64 = 1000;

/// Plain Monte Carlo with exact draws from `spec` (importance weight one).
///
/// Draws in batches until three standard errors fall under the tolerance or the budget is spent.
/// Running out of budget is not an error here: the estimate is unbiased and its bound is reported.
pub(super) fn integrate(f: &dyn Fn(&[f64]) -> f64, spec: &MeasureSpec, cfg: &QuadratureConfig) -> Result<IntegralEstimate> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sampler = Sampler::new(spec);
    let (mut count, mut mean, mut m2) = (0u64, 0.0f64, 0.0f64);
    loop {
        for _ in 0..BATCH {
            let t = sampler.draw(&mut rng);
            let v = f(t);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { point: t.to_vec() });
            }
            count += 1;
            let delta = v - mean;
            mean += delta / count as f64;
            m2 += delta * (v - mean);
        }
        let var = if count > 1 { m2 / (count - 1) as f64 } else { 0.0 };
        let bound = 3.0 * (var / count as f64).sqrt();
        if bound <= cfg.target(mean) || count + BATCH > cfg.max_evals {
            return Ok(IntegralEstimate {
                value: mean,
                error_bound: bound,
                evals: count,
                method_used: MethodUsed::MonteCarlo,
            });
        }
    }
}
