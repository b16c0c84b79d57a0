//! Gamma-normalization Dirichlet sampler that stays finite for tiny concentrations.

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardUniform};

/// Draws `ln G` for `G ~ Gamma(shape, 1)`.
///
/// For `shape < 1` this uses `G = G' U^{1/shape}` with `G' ~ Gamma(shape + 1)`, evaluated in log
/// space so that very small shapes do not underflow to zero.
fn ln_gamma_variate<R: Rng + ?Sized>(rng: &mut R, shape: f64) -> f64 {
    if shape >= 1.0 {
        let g: f64 = Gamma::new(shape, 1.0).expect("positive shape").sample(rng);
        g.ln()
    } else {
        let g: f64 = Gamma::new(shape + 1.0, 1.0).expect("positive shape").sample(rng);
        // (0, 1] so ln never sees zero
        let u: f64 = 1.0 - rng.sample::<f64, _>(StandardUniform);
        g.ln() + u.ln() / shape
    }
}

/// One draw from `Dirichlet(alpha)` written into `out` (same length as `alpha`).
pub(crate) fn sample_into<R: Rng + ?Sized>(rng: &mut R, alpha: &[f64], out: &mut [f64]) {
    debug_assert_eq!(alpha.len(), out.len());
    let mut max = f64::NEG_INFINITY;
    for (o, &a) in out.iter_mut().zip(alpha) {
        *o = ln_gamma_variate(rng, a);
        max = max.max(*o);
    }
    let mut total = 0.0;
    for o in out.iter_mut() {
        *o = (*o - max).exp();
        total += *o;
    }
    for o in out.iter_mut() {
        *o /= total;
    }
}

/// Uniform draw on the simplex via normalized exponential spacings.
pub(crate) fn sample_uniform_into<R: Rng + ?Sized>(rng: &mut R, out: &mut [f64]) {
    let mut total = 0.0;
    for o in out.iter_mut() {
        let u: f64 = 1.0 - rng.sample::<f64, _>(StandardUniform);
        *o = -u.ln();
        total += *o;
    }
    for o in out.iter_mut() {
        *o /= total;
    }
}
