use std::path::PathBuf;

use hadamard::hh::{self, Arity, Convexity, HHReport, TestFunction};
use hadamard::means::{self, MeanKind, NodeVector};
use hadamard::measures::{tilde_weights, MeasureSpec, SimplexPoint};
use hadamard::quadrature::{integrate, MethodUsed};
use hadamard::tables::{self, TABLE_TOLERANCE};
use hadamard::{QuadratureConfig, WeightVector};
use serde::Serialize;

use crate::fail::{Context, Failure, EXIT_CHAIN, EXIT_TABLES};
use crate::job::{parse_rows, Command, Format, JobSpec};
use crate::output::{emit, Cell, Report};

/// Environment variable naming the default directory for `tables`.
pub const OUT_DIR_ENV: &str = "HADAMARD_OUT_DIR";

#[derive(Debug, Serialize)]
struct Meta<'a> {
    tool: &'static str,
    version: &'static str,
    command: Command,
    config: &'a QuadratureConfig,
    seed: u64,
}

/// Runs a job and returns the exit status.
pub fn run(job: &JobSpec) -> Result<i32, Failure> {
    let command = job
        .command
        .ok_or_else(|| Failure::validation("command: missing (give a subcommand or \"command\" in the job file)"))?;
    let cfg = job.config()?;
    let meta = Meta { tool: "hadamard", version: env!("CARGO_PKG_VERSION"), command, config: &cfg, seed: job.seed() };
    let (report, status) = match command {
        Command::Mean => (mean(job, &cfg)?, 0),
        Command::Measure => (measure(job, &cfg)?, 0),
        Command::Hh => hh(job, &cfg)?,
        Command::Audit => audit(job, &cfg)?,
        Command::Tables => return tables(job, &cfg, &meta),
    };
    emit(&report.render(job.format(), &meta)?, job.out.as_deref())?;
    Ok(status)
}

fn weights(job: &JobSpec) -> Result<WeightVector, Failure> {
    WeightVector::new(&job.weights()?).field("weights")
}

fn method_name(m: MethodUsed) -> &'static str {
    match m {
        MethodUsed::NestedAdaptive => "adaptive",
        MethodUsed::MonteCarlo => "mc",
    }
}

fn mean(job: &JobSpec, cfg: &QuadratureConfig) -> Result<Report, Failure> {
    let w = weights(job)?;
    let a = NodeVector::new(&job.scalar_nodes()?).field("nodes")?;
    if a.len() != w.n() + 1 {
        return Err(Failure::validation(format!(
            "nodes: expected {} nodes for {} weights, got {}",
            w.n() + 1,
            w.n(),
            a.len()
        )));
    }
    let kinds: Vec<MeanKind> = match &job.kinds {
        Some(list) => list
            .text()
            .split(',')
            .map(|k| k.parse::<MeanKind>().field("kinds"))
            .collect::<Result<_, _>>()?,
        None => MeanKind::ALL.into_iter().filter(|k| !k.is_bivariate() || w.n() == 1).collect(),
    };
    let mut report = Report::new(&["kind", "value", "error_bound", "evals", "method"]);
    for kind in kinds {
        let r = means::mean(kind, &w, &a, cfg).field(kind.name())?;
        let (evals, method) = match r.estimate {
            Some(e) => (e.evals, method_name(e.method_used)),
            None => (0, "closed_form"),
        };
        report.push(vec![kind.name().into(), r.value.into(), r.error_bound.into(), evals.into(), method.into()]);
    }
    Ok(report)
}

fn measure_spec(job: &JobSpec) -> Result<MeasureSpec, Failure> {
    match job.measure.as_deref().unwrap_or("nu") {
        "nu" => MeasureSpec::nu(&weights(job)?).field("weights"),
        "mu" => MeasureSpec::mu(&weights(job)?).field("weights"),
        "uniform" => {
            let n = match (job.dim, &job.weights) {
                (Some(n), _) => n,
                (None, Some(_)) => job.weights()?.len(),
                (None, None) => return Err(Failure::validation("dim: the uniform measure needs --dim or --weights")),
            };
            MeasureSpec::uniform(n).field("dim")
        }
        other => Err(Failure::validation(format!("measure: unknown measure {other:?} (nu, mu or uniform)"))),
    }
}

fn measure(job: &JobSpec, cfg: &QuadratureConfig) -> Result<Report, Failure> {
    let spec = measure_spec(job)?;
    let n = spec.dim();
    let actions = [job.tilde == Some(true), job.normcheck == Some(true), job.density.is_some(), job.sample.is_some()];
    if actions.iter().filter(|a| **a).count() != 1 {
        return Err(Failure::validation("measure: choose exactly one of --tilde, --normcheck, --density, --sample"));
    }
    if job.tilde == Some(true) {
        let moments = match (&spec, spec.weights()) {
            (MeasureSpec::Nu { .. }, Some(w)) => tilde_weights(w).field("weights")?,
            (_, Some(w)) => w.full().to_vec(),
            (_, None) => vec![1.0 / (n as f64 + 1.0); n + 1],
        };
        let mut report = Report::new(&["index", "first_moment"]);
        for (i, m) in moments.into_iter().enumerate() {
            report.push(vec![(i + 1).into(), m.into()]);
        }
        return Ok(report);
    }
    if job.normcheck == Some(true) {
        let est = integrate(&|_| 1.0, &spec, cfg).field("normcheck")?;
        let mut report = Report::new(&["measure", "mass", "abs_deviation", "error_bound", "evals"]);
        report.push(vec![
            format!("{:?}", spec.kind()).to_lowercase().into(),
            est.value.into(),
            (1.0 - est.value).abs().into(),
            est.error_bound.into(),
            est.evals.into(),
        ]);
        return Ok(report);
    }
    if let Some(points) = &job.density {
        let rows = parse_rows(points).map_err(|e| Failure::validation(format!("density: {e}")))?;
        let mut report = Report::new(&["point", "density"]);
        for t in rows {
            let p = SimplexPoint::new(&t).field("density")?;
            let d = spec.density(&p).field("density")?;
            let text: Vec<String> = t.iter().map(|x| format!("{x:?}")).collect();
            report.push(vec![text.join(",").into(), d.into()]);
        }
        return Ok(report);
    }
    let count = job.sample.unwrap_or(0);
    let names: Vec<String> = (1..=n + 1).map(|i| format!("t{i}")).collect();
    let mut report = Report { columns: names, rows: Vec::with_capacity(count) };
    for p in spec.sample(count, job.seed()) {
        report.push(p.barycentric().iter().map(|&x| Cell::Num(x)).collect());
    }
    Ok(report)
}

fn test_function(job: &JobSpec, nodes: &[Vec<f64>]) -> Result<TestFunction, Failure> {
    let name = job.f.as_deref().unwrap_or("exp");
    let m = nodes.first().map_or(1, Vec::len);
    match name {
        "logsumexp" => TestFunction::logsumexp(m).field("f"),
        "quadform" => {
            let text = job.matrix.as_deref().ok_or_else(|| Failure::validation("matrix: --f quadform needs --matrix"))?;
            let rows = parse_rows(text).map_err(|e| Failure::validation(format!("matrix: {e}")))?;
            TestFunction::quadform(rows.concat()).field("matrix")
        }
        _ => TestFunction::builtin(name).field("f"),
    }
}

fn hh_row(report: &mut Report, r: &HHReport, spot_ok: bool) {
    let verdict = match (r.chain_ok, r.convexity) {
        (true, Convexity::Convex) => "ordered",
        (true, Convexity::Concave) => "reversed (concave-ok)",
        (false, _) => "violated",
    };
    report.push(vec![
        r.function.clone().into(),
        format!("{:?}", r.measure).to_lowercase().into(),
        format!("{:?}", r.convexity).to_lowercase().into(),
        r.left.into(),
        r.middle.value.into(),
        r.middle.error_bound.into(),
        r.right.into(),
        r.slack.0.into(),
        r.slack.1.into(),
        r.chain_ok.into(),
        verdict.into(),
        spot_ok.into(),
    ]);
}

fn hh(job: &JobSpec, cfg: &QuadratureConfig) -> Result<(Report, i32), Failure> {
    let nodes = job.vector_nodes()?;
    let f = test_function(job, &nodes)?;
    // scalar nodes arrive as one row; split them into points
    let nodes = match (f.arity, nodes.len()) {
        (Arity::Scalar, 1) => hh::scalar_nodes(&nodes[0]),
        (Arity::Scalar, _) if nodes.iter().any(|p| p.len() != 1) => {
            return Err(Failure::validation(format!("nodes: {} takes scalar nodes separated by ','", f.name)));
        }
        _ => nodes,
    };
    let r = match job.measure.as_deref().unwrap_or("mu") {
        "nu" => hh::hh_nu(&f, &weights(job)?, &nodes, cfg),
        "mu" => hh::hh_mu(&f, &weights(job)?, &nodes, cfg),
        "uniform" => hh::hh_uniform(&f, &nodes, cfg),
        other => return Err(Failure::validation(format!("measure: unknown measure {other:?} (nu, mu or uniform)"))),
    }
    .field("hh")?;
    let spot_ok = hh::spot_check_convexity(&f, &nodes, 200, job.seed());
    let mut report = Report::new(&[
        "function",
        "measure",
        "convexity",
        "left",
        "middle",
        "middle_error",
        "right",
        "slack_left",
        "slack_right",
        "chain_ok",
        "verdict",
        "convexity_spot_check",
    ]);
    hh_row(&mut report, &r, spot_ok);
    let status = if r.chain_ok { 0 } else { EXIT_CHAIN };
    Ok((report, status))
}

fn audit(job: &JobSpec, cfg: &QuadratureConfig) -> Result<(Report, i32), Failure> {
    let trials = job.trials.unwrap_or(100);
    let s = hh::randomized_audit(job.seed(), trials, cfg).field("audit")?;
    for e in &s.errors {
        eprintln!("audit: {e}");
    }
    for t in s.records.iter().filter(|t| !t.passed()) {
        eprintln!("audit: trial {} ({}, n = {}) violates the chain, worst slack {:e}", t.index, t.function, t.n, t.worst_slack());
    }
    let mut report = Report::new(&["seed", "trials", "passes", "failures", "worst_slack", "summary"]);
    let worst = if s.worst_slack.is_finite() { Cell::Num(s.worst_slack) } else { Cell::Text(String::new()) };
    report.push(vec![
        s.seed.into(),
        s.trials.into(),
        s.passes.into(),
        s.failures.into(),
        worst,
        format!("{}/{} pass", s.passes, s.trials).into(),
    ]);
    let status = if s.failures == 0 { 0 } else { EXIT_CHAIN };
    Ok((report, status))
}

fn tables(job: &JobSpec, cfg: &QuadratureConfig, meta: &Meta) -> Result<i32, Failure> {
    let dir = match &job.out {
        Some(p) => p.clone(),
        None => std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".")),
    };
    std::fs::create_dir_all(&dir).map_err(|e| Failure::other(format!("out: cannot create {}: {e}", dir.display())))?;
    let all = tables::all_tables(cfg).field("tables")?;
    let mut summary = Report::new(&["table", "rows", "failing", "max_abs_diff", "file"]);
    let mut failing = 0;
    for t in &all {
        let mut report = Report { columns: t.header(), rows: Vec::new() };
        for r in &t.rows {
            let mut row: Vec<Cell> = r.inputs.iter().map(|s| Cell::Text(s.clone())).collect();
            row.extend([
                Cell::Text(r.quantity.clone()),
                Cell::Num(r.paper_value),
                Cell::Num(r.computed_value),
                Cell::Num(r.abs_diff),
                Cell::Num(r.error_bound),
                Cell::Bool(r.ok),
            ]);
            report.push(row);
        }
        let ext = match job.format() {
            Format::Csv => "csv",
            Format::Json => "json",
        };
        let path = dir.join(format!("{}.{ext}", t.name));
        emit(&report.render(job.format(), meta)?, Some(&path))?;
        for r in t.failing() {
            eprintln!(
                "tables: {} row {:?} {} differs by {:e} (tolerance {TABLE_TOLERANCE})",
                t.name, r.inputs, r.quantity, r.abs_diff
            );
        }
        let bad = t.failing().count();
        failing += bad;
        let worst = t.rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
        summary.push(vec![t.name.into(), t.rows.len().into(), bad.into(), worst.into(), path.display().to_string().into()]);
    }
    emit(&summary.to_csv()?, None)?;
    Ok(if failing == 0 { 0 } else { EXIT_TABLES })
}
