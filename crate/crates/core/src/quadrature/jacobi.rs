//! Gauss-Jacobi rules for Beta expectations on `[0, 1]`.
//!
//! The rule of order `N` integrates `g(v) v^{p−1} (1−v)^{q−1} / B(p, q)` exactly for polynomial
//! `g` of degree `< 2N`. The power-law factors are absorbed into the weights, so a smooth `g`
//! converges spectrally no matter how singular the Beta density is at the endpoints.

use nalgebra::{DMatrix, SymmetricEigen};

#[derive(Debug, Clone)]
pub(crate) struct BetaRule {
    /// `v_j`
    pub nodes: Vec<f64>,
    /// `1 − v_j`, computed without cancellation
    pub complements: Vec<f64>,
    /// probability weights, summing to one
    pub weights: Vec<f64>,
}

/// Golub-Welsch for the Jacobi weight `(1−x)^α (1+x)^β` with `α = q − 1`, `β = p − 1`, mapped to
/// `v = (1 + x)/2`.
pub(crate) fn beta_rule(p: f64, q: f64, order: usize) -> BetaRule {
    assert!(order >= 1 && p > 0.0 && q > 0.0);
    let alpha = q - 1.0;
    let beta = p - 1.0;
    let ab = alpha + beta;

    let mut jac = DMatrix::<f64>::zeros(order, order);
    jac[(0, 0)] = (beta - alpha) / (ab + 2.0);
    for k in 1..order {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        jac[(k, k)] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
        let b2 = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        let b = b2.sqrt();
        jac[(k, k - 1)] = b;
        jac[(k - 1, k)] = b;
    }

    let eig = SymmetricEigen::new(jac);
    let mut pairs: Vec<(f64, f64)> = (0..order)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: f64 = pairs.iter().map(|p| p.1).sum();

    let mut rule = BetaRule {
        nodes: Vec::with_capacity(order),
        complements: Vec::with_capacity(order),
        weights: Vec::with_capacity(order),
    };
    for (x, w) in pairs {
        let x = x.clamp(-1.0, 1.0);
        rule.nodes.push(0.5 * (1.0 + x));
        rule.complements.push(0.5 * (1.0 - x));
        rule.weights.push(w / total);
    }
    rule
}
