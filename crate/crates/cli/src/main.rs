//! Batch front end for the warped-end spectral toolkit: closed-form
//! classification, symbolic reduction, numerical solves, and
//! classifier-vs-solver cross-validation.

mod classify;
mod output;
mod params;
mod reduce;
mod solve;
mod verify;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

use params::Params;

#[derive(Parser)]
#[command(
    name = "wspec",
    version,
    about = "Essential spectra of the Laplacian on differential forms over warped ends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form essential spectrum per degree
    Classify(CommonArgs),
    /// Print the reduced 1-D operator symbolically (and as CSV series)
    Reduce(CommonArgs),
    /// Numerical bottom-of-spectrum and discreteness for one operator
    Solve(CommonArgs),
    /// Cross-validate classifier against the numerical solver
    Verify(CommonArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// key=value config file; command-line flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// warp exponent of the radial factor f = e^{-2(a+1)t} (a ≤ -1)
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// warp exponent of the cross-section factor g = e^{-2bt}
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// manifold dimension
    #[arg(long)]
    n: Option<u32>,
    /// form degree, or "all"
    #[arg(long)]
    p: Option<String>,
    /// cross-section eigenvalue(s), comma-separated
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// round-sphere cross-section (supplies Betti numbers and eigenvalues)
    #[arg(long)]
    sphere: bool,
    /// cross-section Betti numbers b_0,...,b_{n-1}
    #[arg(long)]
    betti: Option<String>,
    /// reduced component: 1, 2 or 3
    #[arg(long = "type")]
    ty: Option<String>,
    /// sample points for CSV series
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// largest right endpoint of the truncation sweep
    #[arg(long = "L-max")]
    l_max: Option<f64>,
    /// verification tolerance on ray starts (absolute)
    #[arg(long)]
    tol: Option<f64>,
    /// parallel verification rows
    #[arg(long)]
    jobs: Option<usize>,
    /// output path (JSON report or CSV series)
    #[arg(long)]
    out: Option<PathBuf>,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// left endpoint c of the end in the t coordinate
    #[arg(long)]
    c: Option<f64>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };

    let (args, run): (&CommonArgs, fn(&Params) -> Result<output::Outcome, String>) =
        match &cli.command {
            Command::Classify(a) => (a, classify::run),
            Command::Reduce(a) => (a, reduce::run),
            Command::Solve(a) => (a, solve::run),
            Command::Verify(a) => (a, verify::run),
        };

    let params = match Params::merge(args) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    };

    match run(&params) {
        Ok(outcome) => std::process::exit(outcome.code()),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
