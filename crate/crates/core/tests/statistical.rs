//! Checks against sampling. Seeds are fixed, so each outcome is reproducible.

mod common;

use hadamard::measures::MeasureSpec;
use hadamard::quadrature::{integrate, power_simplex_moment, power_simplex_volume, MethodUsed, QuadratureMethod};
use hadamard::{QuadratureConfig, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{factorial, random_weights};

#[test]
fn monte_carlo_agrees_with_nested() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut misses = 0;
    for case in 0..50u64 {
        let n = 1 + (case % 3) as usize;
        let w = random_weights(&mut rng, n, 0.02);
        let coef: Vec<f64> = (0..=n).map(|_| rng.random_range(-1.5..1.5)).collect();
        let f = |t: &[f64]| t.iter().zip(&coef).map(|(a, b)| a * b).sum::<f64>().exp();
        let spec = MeasureSpec::mu(&w).unwrap();
        let det = integrate(&f, &spec, &QuadratureConfig::default()).unwrap();
        let mc_cfg = QuadratureConfig::default()
            .with_method(QuadratureMethod::MonteCarlo)
            .with_tolerances(1e-4, 1e-4)
            .with_max_evals(400_000)
            .with_seed(case);
        let mc = integrate(&f, &spec, &mc_cfg).unwrap();
        assert_eq!(mc.method_used, MethodUsed::MonteCarlo);
        assert_eq!(det.method_used, MethodUsed::NestedAdaptive);
        if (det.value - mc.value).abs() > det.error_bound + mc.error_bound {
            misses += 1;
        }
    }
    // each comparison is a 3σ test; allow the handful of misses that chance produces
    assert!(misses <= 2, "{misses} of 50 outside combined bounds");
}

#[test]
fn samples_have_the_right_means() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=3 {
        let w = random_weights(&mut rng, n, 0.02);
        let tilde = hadamard::measures::tilde_weights(&w).unwrap();
        for (spec, target) in [(MeasureSpec::nu(&w).unwrap(), tilde), (MeasureSpec::mu(&w).unwrap(), w.full().to_vec())] {
            let draws = spec.sample(40_000, 3 + n as u64);
            for (j, want) in target.iter().enumerate() {
                let xs: Vec<f64> = draws.iter().map(|p| p.barycentric()[j]).collect();
                let mean = xs.iter().sum::<f64>() / xs.len() as f64;
                let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
                let se = (var / xs.len() as f64).sqrt();
                assert!((mean - want).abs() <= 3.5 * se, "{:?} n = {n} j = {j}: {mean} vs {want}", spec.kind());
            }
        }
    }
}

#[test]
fn sampling_is_reproducible() {
    let w = WeightVector::new(&[1.0 / 3.0, 1.0 / 6.0]).unwrap();
    let spec = MeasureSpec::nu(&w).unwrap();
    assert_eq!(spec.sample(500, 7), spec.sample(500, 7));
    assert_ne!(spec.sample(5, 7), spec.sample(5, 8));
}

#[test]
fn power_simplex_moment_matches_rejection_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10 {
        let n = rng.random_range(2..=3usize);
        let alpha: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..3.0)).collect();
        let mut acc = Vec::new();
        while acc.len() < 50_000 {
            let t: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            if t.iter().zip(&alpha).map(|(x, a)| x.powf(*a)).sum::<f64>() <= 1.0 {
                acc.push(t[0].powf(alpha[0]));
            }
        }
        let mean = acc.iter().sum::<f64>() / acc.len() as f64;
        let var = acc.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (acc.len() - 1) as f64;
        let se = (var / acc.len() as f64).sqrt();
        let want = power_simplex_moment(&alpha, 1).unwrap();
        assert!((mean - want).abs() <= 4.0 * se, "α = {alpha:?}: {mean} vs {want}");
        assert!(power_simplex_volume(&alpha).unwrap() > 0.0);
    }
}

fn midpoint_grid(f: impl Fn(&[f64]) -> f64, n: usize, cells: usize) -> f64 {
    // n! ∫_{E_n} f dt by the centroid rule on a uniform triangulation
    let h = 1.0 / cells as f64;
    let mut total = 0.0;
    match n {
        1 => {
            for i in 0..cells {
                let t = (i as f64 + 0.5) * h;
                total += f(&[t, 1.0 - t]) * h;
            }
        }
        2 => {
            // each grid square below the diagonal holds one or two triangles
            for i in 0..cells {
                for j in 0..cells - i {
                    let (x, y) = (i as f64 * h, j as f64 * h);
                    let c = [x + h / 3.0, y + h / 3.0];
                    total += f(&[c[0], c[1], 1.0 - c[0] - c[1]]) * h * h / 2.0;
                    if i + j + 1 < cells {
                        let c = [x + 2.0 * h / 3.0, y + 2.0 * h / 3.0];
                        total += f(&[c[0], c[1], 1.0 - c[0] - c[1]]) * h * h / 2.0;
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    factorial(n) * total
}

#[test]
fn uniform_measure_matches_grid_oracle() {
    let x = [0.4, -0.7, 1.2];
    for n in 1..=2 {
        let f = |t: &[f64]| (t.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>()).exp() + t[0] * t[0];
        let q = integrate(&f, &MeasureSpec::uniform(n).unwrap(), &QuadratureConfig::default()).unwrap();
        let grid = midpoint_grid(f, n, 400);
        assert!((q.value - grid).abs() < 1e-4, "n = {n}: {} vs {grid}", q.value);
    }
}
