#![allow(dead_code)]

use hadamard::WeightVector;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Uniform point of int(E_n), each full weight at least `floor`.
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, floor: f64) -> WeightVector {
    let raw: Vec<f64> = (0..=n).map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let total: f64 = raw.iter().sum();
    let spare = 1.0 - floor * (n as f64 + 1.0);
    let free: Vec<f64> = raw[..n].iter().map(|r| floor + spare * r / total).collect();
    WeightVector::new(&free).unwrap()
}

/// `n + 1` nodes in `[lo, hi)` with pairwise gaps of at least `gap`.
pub fn spread_nodes(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64, gap: f64) -> Vec<f64> {
    loop {
        let a: Vec<f64> = (0..=n).map(|_| rng.random_range(lo..hi)).collect();
        let ok = (0..a.len()).all(|i| (0..i).all(|j| (a[i] - a[j]).abs() >= gap));
        if ok {
            return a;
        }
    }
}

/// Divided difference `F[x_0, …, x_n]` for distinct nodes.
pub fn divided_difference(f: impl Fn(f64) -> f64, x: &[f64]) -> f64 {
    let mut d: Vec<f64> = x.iter().map(|&v| f(v)).collect();
    for level in 1..x.len() {
        for i in (level..x.len()).rev() {
            d[i] = (d[i] - d[i - 1]) / (x[i] - x[i - level]);
        }
    }
    d[x.len() - 1]
}

pub fn harmonic_number(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
