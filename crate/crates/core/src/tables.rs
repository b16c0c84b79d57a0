//! Published reference values for the integral means and their recomputation.
//!
//! The `n = 1` rows list `λ_1` in the bivariate convention, where it weights the second node.
//! They are recomputed with the weight vector `(1 − λ_1)`, which makes `λ_1` the weight of `b`
//! as the closed forms expect; the closed-form columns use the row's `λ_1` directly.

use serde::Serialize;

use crate::error::Result;
use crate::means::{self, MeanKind, MeanResult, NodeVector};
use crate::measures::WeightVector;
use crate::quadrature::QuadratureConfig;

/// Largest accepted `|reference − computed|`.
pub const TABLE_TOLERANCE: f64 = 5e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    /// Input cells as printed, aligned with [`Table::input_columns`].
    pub inputs: Vec<String>,
    pub quantity: String,
    pub paper_value: f64,
    pub computed_value: f64,
    pub abs_diff: f64,
    pub error_bound: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub name: &'static str,
    pub input_columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn header(&self) -> Vec<String> {
        let mut h: Vec<String> = self.input_columns.iter().map(|s| s.to_string()).collect();
        h.extend(["quantity", "paper_value", "computed_value", "abs_diff", "error_bound", "ok"].map(String::from));
        h
    }

    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn failing(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(|r| !r.ok)
    }
}

/// `(printed, value)`
type Frac = (&'static str, f64);

const THIRD: Frac = ("1/3", 1.0 / 3.0);
const SIXTH: Frac = ("1/6", 1.0 / 6.0);

fn row(inputs: Vec<String>, quantity: &str, reference: f64, computed: MeanResult) -> TableRow {
    let abs_diff = (reference - computed.value).abs();
    TableRow {
        inputs,
        quantity: quantity.to_string(),
        paper_value: reference,
        computed_value: computed.value,
        abs_diff,
        error_bound: computed.error_bound,
        ok: abs_diff <= TABLE_TOLERANCE,
    }
}

fn fmt_nodes(a: &[f64]) -> String {
    let cells: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", cells.join(","))
}

/// `n = 2` rows of `𝓛` and `𝕃`.
pub fn example45_multivariate(cfg: &QuadratureConfig) -> Result<Table> {
    let cases: [(Frac, Frac, [f64; 3], f64, f64); 2] = [
        (THIRD, SIXTH, [0.5, 1.0, 2.0], 1.19393, 1.19612),
        (("0.2", 0.2), ("0.25", 0.25), [1.3, 1.5, 1.9], 1.66722, 1.66599),
    ];
    let mut rows = Vec::new();
    for (l1, l2, a, logcal, logbb) in cases {
        let w = WeightVector::new(&[l1.1, l2.1])?;
        let nodes = NodeVector::new(&a)?;
        let inputs = vec![l1.0.to_string(), l2.0.to_string(), fmt_nodes(&a)];
        rows.push(row(inputs.clone(), "logcal", logcal, means::log_mean_cal(&w, &nodes, cfg)?));
        rows.push(row(inputs, "logbb", logbb, means::log_mean_bb(&w, &nodes, cfg)?));
    }
    Ok(Table { name: "example45_multivariate", input_columns: vec!["lambda1", "lambda2", "a"], rows })
}

fn mapped(l1: Frac) -> Result<WeightVector> {
    WeightVector::new(&[1.0 - l1.1])
}

/// `n = 1` rows of `𝓛`, `𝕃` and the closed form `L_λ`.
pub fn example45_bivariate(cfg: &QuadratureConfig) -> Result<Table> {
    let cases: [(Frac, [f64; 2], [f64; 3]); 2] = [
        (THIRD, [2.0, 1.0], [1.60804, 1.62944, 1.61423]),
        (("0.9", 0.9), [4.0, 3.0], [3.09329, 3.08815, 3.09162]),
    ];
    let mut rows = Vec::new();
    for (l1, a, reference) in cases {
        let w = mapped(l1)?;
        let nodes = NodeVector::new(&a)?;
        let inputs = vec![l1.0.to_string(), fmt_nodes(&a), format!("{}", w.full()[0])];
        rows.push(row(inputs.clone(), "logcal", reference[0], means::log_mean_cal(&w, &nodes, cfg)?));
        rows.push(row(inputs.clone(), "logbb", reference[1], means::log_mean_bb(&w, &nodes, cfg)?));
        let closed = means::bivariate_log_mean(l1.1, a[0], a[1])?;
        rows.push(row(inputs, "bivariate_l", reference[2], MeanResult { value: closed, error_bound: 0.0, estimate: None }));
    }
    Ok(Table { name: "example45_bivariate", input_columns: vec!["lambda1", "a", "weight_of_a1"], rows })
}

/// `n = 1` rows of `𝓘` and the closed form `I_λ`.
pub fn identric_bivariate(cfg: &QuadratureConfig) -> Result<Table> {
    let cases: [(Frac, [f64; 2], [f64; 2]); 2] = [
        (("3/4", 0.75), [3.0, 1.0], [1.40952, 1.43367]),
        (("0.2", 0.2), [6.5, 6.0], [6.39950, 6.39893]),
    ];
    let mut rows = Vec::new();
    for (l1, a, reference) in cases {
        let w = mapped(l1)?;
        let nodes = NodeVector::new(&a)?;
        let inputs = vec![l1.0.to_string(), fmt_nodes(&a), format!("{}", w.full()[0])];
        rows.push(row(inputs.clone(), "identric", reference[0], means::identric_mean(&w, &nodes, cfg)?));
        let closed = means::bivariate_identric_mean(l1.1, a[0], a[1])?;
        rows.push(row(inputs, "bivariate_i", reference[1], MeanResult { value: closed, error_bound: 0.0, estimate: None }));
    }
    Ok(Table { name: "identric_bivariate", input_columns: vec!["lambda1", "a", "weight_of_a1"], rows })
}

/// Weights, nodes, the two compared kinds and their reference values.
type MultiCase = (Frac, Frac, [f64; 3], MeanKind, MeanKind, (f64, f64));

/// Signed differences behind the non-comparability claims. A row passes when it is within
/// tolerance of the published difference, has the same strict sign, and its magnitude exceeds
/// the combined error bound.
pub fn noncomparability(cfg: &QuadratureConfig) -> Result<Table> {
    let mut rows = Vec::new();
    let mut push = |inputs: Vec<String>, quantity: &str, reference: (f64, f64), x: MeanResult, y: MeanResult| {
        let ref_diff = reference.0 - reference.1;
        let computed = MeanResult {
            value: x.value - y.value,
            error_bound: x.error_bound + y.error_bound,
            estimate: None,
        };
        let mut r = row(inputs, quantity, ref_diff, computed);
        r.ok &= computed.value.signum() == ref_diff.signum() && computed.value.abs() > computed.error_bound;
        rows.push(r);
    };

    let multi: [MultiCase; 4] = [
        (THIRD, SIXTH, [0.5, 1.0, 2.0], MeanKind::LogCal, MeanKind::LogBb, (1.19393, 1.19612)),
        (("0.2", 0.2), ("0.25", 0.25), [1.3, 1.5, 1.9], MeanKind::LogCal, MeanKind::LogBb, (1.66722, 1.66599)),
        (THIRD, SIXTH, [0.5, 1.0, 2.0], MeanKind::LogCal, MeanKind::Identric, (1.19393, 1.26771)),
        (("0.05", 0.05), ("0.2", 0.2), [19.0, 1.0, 1.0], MeanKind::LogCal, MeanKind::Identric, (1.36040, 1.35253)),
    ];
    for (l1, l2, a, k1, k2, reference) in multi {
        let w = WeightVector::new(&[l1.1, l2.1])?;
        let nodes = NodeVector::new(&a)?;
        let inputs = vec![format!("({},{})", l1.0, l2.0), fmt_nodes(&a)];
        let x = means::mean(k1, &w, &nodes, cfg)?;
        let y = means::mean(k2, &w, &nodes, cfg)?;
        push(inputs, &format!("{k1}-{k2}"), reference, x, y);
    }

    let bivariate: [(Frac, [f64; 2], (f64, f64)); 2] = [
        (("3/4", 0.75), [3.0, 1.0], (1.40952, 1.43367)),
        (("0.2", 0.2), [6.5, 6.0], (6.39950, 6.39893)),
    ];
    for (l1, a, reference) in bivariate {
        let w = mapped(l1)?;
        let nodes = NodeVector::new(&a)?;
        let x = means::identric_mean(&w, &nodes, cfg)?;
        let y = MeanResult { value: means::bivariate_identric_mean(l1.1, a[0], a[1])?, error_bound: 0.0, estimate: None };
        push(vec![l1.0.to_string(), fmt_nodes(&a)], "identric-bivariate_i", reference, x, y);
    }
    Ok(Table { name: "noncomparability", input_columns: vec!["lambda", "a"], rows })
}

/// All four tables in a fixed order.
pub fn all_tables(cfg: &QuadratureConfig) -> Result<Vec<Table>> {
    Ok(vec![
        example45_multivariate(cfg)?,
        example45_bivariate(cfg)?,
        identric_bivariate(cfg)?,
        noncomparability(cfg)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_reproduces() {
        let tables = all_tables(&QuadratureConfig::default()).unwrap();
        assert_eq!(tables.len(), 4);
        for t in &tables {
            for r in &t.rows {
                assert_eq!(r.inputs.len(), t.input_columns.len());
                assert!(r.ok, "{}: {r:?}", t.name);
            }
        }
        assert_eq!(tables[3].rows.len(), 6);
    }

    #[test]
    fn header_layout() {
        let t = identric_bivariate(&QuadratureConfig::default()).unwrap();
        assert_eq!(t.header()[..3], ["lambda1", "a", "weight_of_a1"]);
        assert_eq!(t.header().len(), 9);
    }
}
