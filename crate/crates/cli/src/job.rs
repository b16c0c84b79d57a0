//! Job description shared by flags and `--job` files. Flags win over the file.

use std::path::PathBuf;

use hadamard::quadrature::QuadratureMethod;
use hadamard::QuadratureConfig;
use serde::{Deserialize, Serialize};

use crate::fail::Failure;

/// A list given either as one comma-separated string or as a JSON array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ListSpec {
    Text(String),
    Items(Vec<serde_json::Value>),
}

impl ListSpec {
    pub fn text(&self) -> String {
        match self {
            ListSpec::Text(s) => s.clone(),
            ListSpec::Items(items) => items
                .iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Mean,
    Measure,
    Hh,
    Tables,
    Audit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Auto,
    Adaptive,
    Mc,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Option<Command>,
    pub weights: Option<ListSpec>,
    /// Scalar nodes `a,b,c`, or vector nodes `x1,x2;y1,y2;…`.
    pub nodes: Option<ListSpec>,
    pub kinds: Option<ListSpec>,
    /// Measure for `measure` and `hh`: nu, mu or uniform.
    pub measure: Option<String>,
    /// Dimension for the uniform measure.
    pub dim: Option<usize>,
    pub f: Option<String>,
    /// Row-major matrix for `--f quadform`, rows separated by `;`.
    pub matrix: Option<String>,
    pub tilde: Option<bool>,
    pub normcheck: Option<bool>,
    /// Points `t1,…,tn;…` at which to evaluate the density.
    pub density: Option<String>,
    pub sample: Option<usize>,
    pub trials: Option<usize>,
    pub tol: Option<f64>,
    pub max_evals: Option<u64>,
    pub method: Option<Method>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

macro_rules! overlay {
    ($base:ident, $top:ident, $($field:ident),*) => {
        $( if $top.$field.is_some() { $base.$field = $top.$field; } )*
    };
}

impl JobSpec {
    pub fn from_file(path: &PathBuf) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::validation(format!("job: cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Failure::validation(format!("job: {}: {e}", path.display())))
    }

    /// Fields set in `top` replace those in `self`.
    pub fn overlay(mut self, top: JobSpec) -> Self {
        overlay!(
            self, top, command, weights, nodes, kinds, measure, dim, f, matrix, tilde, normcheck, density, sample,
            trials, tol, max_evals, method, seed, format, out
        );
        self
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or(Format::Csv)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn config(&self) -> Result<QuadratureConfig, Failure> {
        let mut cfg = QuadratureConfig::default().with_seed(self.seed());
        if let Some(tol) = self.tol {
            cfg = cfg.with_tolerances(tol, tol);
        }
        if let Some(m) = self.max_evals {
            cfg = cfg.with_max_evals(m);
        }
        cfg.method = match self.method.unwrap_or(Method::Auto) {
            Method::Auto => QuadratureMethod::Auto,
            Method::Adaptive => QuadratureMethod::NestedAdaptive,
            Method::Mc => QuadratureMethod::MonteCarlo,
        };
        cfg.validate().map_err(|e| Failure::validation(format!("tol/max-evals: {e}")))?;
        Ok(cfg)
    }

    pub fn weights(&self) -> Result<Vec<f64>, Failure> {
        let spec = self.weights.as_ref().ok_or_else(|| Failure::validation("weights: missing (use --weights)"))?;
        parse_list(&spec.text()).map_err(|e| Failure::validation(format!("weights: {e}")))
    }

    pub fn scalar_nodes(&self) -> Result<Vec<f64>, Failure> {
        let spec = self.nodes.as_ref().ok_or_else(|| Failure::validation("nodes: missing (use --nodes)"))?;
        parse_list(&spec.text()).map_err(|e| Failure::validation(format!("nodes: {e}")))
    }

    pub fn vector_nodes(&self) -> Result<Vec<Vec<f64>>, Failure> {
        let spec = self.nodes.as_ref().ok_or_else(|| Failure::validation("nodes: missing (use --nodes)"))?;
        parse_rows(&spec.text()).map_err(|e| Failure::validation(format!("nodes: {e}")))
    }
}

/// `"p/q"` as the nearest double to the rational, or a plain decimal.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.trim(), q.trim());
            let value = match (p.parse::<i64>(), q.parse::<i64>()) {
                // both exactly representable, so the quotient is correctly rounded
                (Ok(p), Ok(q)) if p.unsigned_abs() < (1 << 53) && q.unsigned_abs() < (1 << 53) => {
                    if q == 0 {
                        return Err(format!("{s:?} has a zero denominator"));
                    }
                    p as f64 / q as f64
                }
                _ => {
                    let p: f64 = p.parse().map_err(|_| format!("{s:?} is not a number or fraction"))?;
                    let q: f64 = q.parse().map_err(|_| format!("{s:?} is not a number or fraction"))?;
                    p / q
                }
            };
            value
        }
        None => s.parse::<f64>().map_err(|_| format!("{s:?} is not a number or fraction"))?,
    };
    if !value.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    Ok(value)
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Err("empty list".into());
    }
    s.split(',').map(parse_number).collect()
}

/// `;`-separated rows of `,`-separated numbers.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<f64>>, String> {
    s.split(';').map(parse_list).collect()
}
