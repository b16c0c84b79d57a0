//! Iterated integration of `E[f(T)]`, `T ~ Dirichlet(c_1, …, c_{n+1})`.
//!
//! Stick-breaking writes `T` through independent `V_k ~ Beta(c_k, c_{k+1} + … + c_{n+1})`:
//! `T_k = R_k V_k`, `R_{k+1} = R_k (1 − V_k)`, `T_{n+1} = R_{n+1}`. Each axis is one Beta
//! expectation, so the Dirichlet power laws become Beta weights on the axes. An axis is first
//! tried with Gauss-Jacobi rules of increasing order (error = difference between successive
//! orders plus propagated inner error); when that does not settle, the axis falls back to
//! adaptive Gauss-Kronrod with the endpoint power substitution.

use std::cell::{Cell, OnceCell};

use super::jacobi::{beta_rule, BetaRule};
use super::kronrod;
use crate::error::{Error, Result};

const ORDERS: [usize; 5] = [12, 24, 48, 96, 192];

struct Axis {
    p: f64,
    q: f64,
    rules: [OnceCell<BetaRule>; ORDERS.len()],
}

impl Axis {
    fn rule(&self, i: usize) -> &BetaRule {
        self.rules[i].get_or_init(|| beta_rule(self.p, self.q, ORDERS[i]))
    }
}

pub(crate) struct NestedOutcome {
    pub value: f64,
    pub error: f64,
    pub evals: u64,
    pub exhausted: bool,
}

pub(crate) struct Nested<'a> {
    f: &'a dyn Fn(&[f64]) -> f64,
    axes: Vec<Axis>,
    abs_tol: f64,
    rel_tol: f64,
    max_evals: u64,
    evals: Cell<u64>,
    exhausted: Cell<bool>,
}

impl<'a> Nested<'a> {
    pub(crate) fn new(f: &'a dyn Fn(&[f64]) -> f64, concentration: &[f64], abs_tol: f64, rel_tol: f64, max_evals: u64) -> Self {
        let n = concentration.len() - 1;
        let axes = (0..n)
            .map(|k| Axis {
                p: concentration[k],
                q: concentration[k + 1..].iter().sum(),
                rules: Default::default(),
            })
            .collect();
        Nested {
            f,
            axes,
            abs_tol,
            rel_tol,
            max_evals,
            evals: Cell::new(0),
            exhausted: Cell::new(false),
        }
    }

    pub(crate) fn run(&self) -> Result<NestedOutcome> {
        let mut coords = vec![0.0; self.axes.len() + 1];
        let (value, error) = self.expect(0, 1.0, &mut coords)?;
        Ok(NestedOutcome {
            value,
            error,
            evals: self.evals.get(),
            exhausted: self.exhausted.get(),
        })
    }

    fn budget_left(&self) -> bool {
        if self.evals.get() >= self.max_evals {
            self.exhausted.set(true);
            false
        } else {
            true
        }
    }

    fn tol(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs()) / self.axes.len() as f64
    }

    fn expect(&self, k: usize, remaining: f64, coords: &mut [f64]) -> Result<(f64, f64)> {
        if k == self.axes.len() {
            coords[k] = remaining;
            let v = (self.f)(coords);
            self.evals.set(self.evals.get() + 1);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { point: coords.to_vec() });
            }
            return Ok((v, 0.0));
        }
        let axis = &self.axes[k];
        let apply = |i: usize, coords: &mut [f64]| -> Result<(f64, f64)> {
            let rule = axis.rule(i);
            let mut vals = Vec::with_capacity(rule.nodes.len());
            let mut inner = 0.0;
            for ((&v, &c), &w) in rule.nodes.iter().zip(&rule.complements).zip(&rule.weights) {
                coords[k] = remaining * v;
                let (val, err) = self.expect(k + 1, remaining * c, coords)?;
                vals.push(w * val);
                inner += w * err;
            }
            Ok((kronrod::total(vals.into_iter()), inner))
        };

        let (mut prev, _) = apply(0, coords)?;
        let mut best = (prev, f64::INFINITY);
        for i in 1..ORDERS.len() {
            let (cur, inner) = apply(i, coords)?;
            let err = (cur - prev).abs() + inner;
            best = (cur, err);
            if err <= self.tol(cur) || !self.budget_left() {
                return Ok(best);
            }
            prev = cur;
        }

        // Jacobi did not settle: subdivide with the substituted Gauss-Kronrod rule
        let tol = self.tol(best.0);
        let fallback = kronrod::beta_expectation(
            |v, c| {
                coords[k] = remaining * v;
                self.expect(k + 1, remaining * c, coords)
            },
            axis.p,
            axis.q,
            tol,
            0.0,
            || self.budget_left(),
        )?;
        if fallback.error < best.1 {
            Ok((fallback.value, fallback.error))
        } else {
            Ok(best)
        }
    }
}
