mod commands;
mod fail;
mod job;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use job::{Command, Format, JobSpec, ListSpec, Method};

#[derive(Debug, Parser)]
#[command(name = "hadamard", version, about = "Weighted means and Hermite-Hadamard chains on the simplex")]
struct Cli {
    #[command(subcommand)]
    command: Option<Sub>,
    /// JSON job file; flags given on the command line take precedence
    #[arg(long, global = true)]
    job: Option<PathBuf>,
    /// Absolute and relative tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    max_evals: Option<u64>,
    #[arg(long, global = true, value_enum)]
    method: Option<Method>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output file (a directory for `tables`)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Evaluate weighted means
    Mean(MeanArgs),
    /// Inspect the measures nu, mu and uniform
    Measure(MeasureArgs),
    /// Evaluate a Hermite-Hadamard chain
    Hh(HhArgs),
    /// Regenerate the reference tables
    Tables,
    /// Randomized audit of the chains
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
struct MeanArgs {
    /// Free weights, e.g. 1/3,1/6
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    nodes: Option<String>,
    /// Comma-separated mean kinds
    #[arg(long)]
    kinds: Option<String>,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    /// nu, mu or uniform
    #[arg(long, visible_alias = "kind")]
    measure: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    /// Print the first moments
    #[arg(long)]
    tilde: bool,
    /// Integrate 1 against the measure
    #[arg(long)]
    normcheck: bool,
    /// Points t1,...,tn separated by ';'
    #[arg(long, allow_hyphen_values = true)]
    density: Option<String>,
    /// Draw this many samples
    #[arg(long)]
    sample: Option<usize>,
}

#[derive(Debug, Args)]
struct HhArgs {
    /// nu, mu or uniform
    #[arg(long)]
    measure: Option<String>,
    /// Test function name
    #[arg(long)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// Scalar nodes a,b,c or vector nodes x1,x2;y1,y2;...
    #[arg(long, allow_hyphen_values = true)]
    nodes: Option<String>,
    /// Matrix rows separated by ';' for quadform
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[arg(long)]
    trials: Option<usize>,
}

fn flag(b: bool) -> Option<bool> {
    b.then_some(true)
}

impl Cli {
    fn into_job(self) -> Result<JobSpec, fail::Failure> {
        let base = match &self.job {
            Some(path) => JobSpec::from_file(path)?,
            None => JobSpec::default(),
        };
        let mut top = JobSpec {
            tol: self.tol,
            max_evals: self.max_evals,
            method: self.method,
            seed: self.seed,
            format: self.format,
            out: self.out,
            ..Default::default()
        };
        match self.command {
            None => {}
            Some(Sub::Mean(a)) => {
                top.command = Some(Command::Mean);
                top.weights = a.weights.map(ListSpec::Text);
                top.nodes = a.nodes.map(ListSpec::Text);
                top.kinds = a.kinds.map(ListSpec::Text);
            }
            Some(Sub::Measure(a)) => {
                top.command = Some(Command::Measure);
                top.measure = a.measure;
                top.weights = a.weights.map(ListSpec::Text);
                top.dim = a.dim;
                top.tilde = flag(a.tilde);
                top.normcheck = flag(a.normcheck);
                top.density = a.density;
                top.sample = a.sample;
            }
            Some(Sub::Hh(a)) => {
                top.command = Some(Command::Hh);
                top.measure = a.measure;
                top.f = a.f;
                top.weights = a.weights.map(ListSpec::Text);
                top.nodes = a.nodes.map(ListSpec::Text);
                top.matrix = a.matrix;
            }
            Some(Sub::Tables) => top.command = Some(Command::Tables),
            Some(Sub::Audit(a)) => {
                top.command = Some(Command::Audit);
                top.trials = a.trials;
            }
        }
        Ok(base.overlay(top))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.into_job().and_then(|job| commands::run(&job)) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
