//! `cohstate`: coherent-state verification suites, wavefunction profiles,
//! autocorrelation traces, revival reports and Gauss-sum factor scans.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cohstate::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "cohstate", version, about = "Coherent states over polynomial ladders")]
struct Cli {
    /// Write the result here (atomically) instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the su(1,1) relations and [K-, K~+] = 1 exactly on x^0..x^max.
    VerifyAlgebra(VerifyAlgebraArgs),
    /// Sample a normalised coherent-state wavefunction on a grid.
    CsEval(CsEvalArgs),
    /// Compare the truncated series against its Bessel closed form.
    ClosedFormCheck(ClosedFormArgs),
    /// Autocorrelation trace of a Pöschl–Teller state.
    Autocorr(AutocorrArgs),
    /// Full and fractional revivals of a trace, computed or read from CSV.
    Revivals(RevivalsArgs),
    /// Truncated Gauss-sum divisor scan.
    Factor(FactorArgs),
}

#[derive(Debug, Args)]
pub struct VerifyAlgebraArgs {
    #[arg(long, default_value_t = 30)]
    pub max_degree: usize,
    /// Laguerre parameter, as p/q or decimal.
    #[arg(long, default_value = "0")]
    pub lambda: String,
    /// Hypergeometric parameter b; checked together with --c.
    #[arg(long, requires = "c")]
    pub b: Option<String>,
    #[arg(long, requires = "b")]
    pub c: Option<String>,
    /// Replace K3 by the lambda+1 generator.
    #[arg(long, hide = true)]
    pub tamper_k3: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Laguerre,
    Pt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct FamilyParams {
    #[arg(long, value_enum, default_value_t = FamilyArg::Laguerre)]
    pub family: FamilyArg,
    /// Laguerre parameter (default 2).
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Eigenvalue of the Laguerre-class state (default 3).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Pöschl–Teller parameter (default 2).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Eigenvalue of the Pöschl–Teller-class state (default 5).
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Grid start (x, or theta for the pt family).
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CsEvalArgs {
    #[command(flatten)]
    pub params: FamilyParams,
    /// Imaginary part of the eigenvalue.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub imag: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Fixed truncation order; otherwise chosen from --tail-tol.
    #[arg(long)]
    pub truncation: Option<usize>,
    #[arg(long, default_value_t = cohstate::cstates::DEFAULT_TAIL_TOL)]
    pub tail_tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ClosedFormArgs {
    #[command(flatten)]
    pub params: FamilyParams,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Series order (default 80 for laguerre, 200 for pt).
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Largest acceptable relative error.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long, default_value_t = 2.0)]
    pub rho: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub q: f64,
    #[arg(long, default_value_t = cohstate::cstates::DEFAULT_TAIL_TOL)]
    pub tail_tol: f64,
    /// Energy coefficients `a,b,c`; defaults to (n + rho)^2.
    #[arg(long)]
    pub spectrum: Option<String>,
    /// End of the time grid (default 2 T_rev).
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long, default_value_t = 4097)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct AutocorrArgs {
    #[command(flatten)]
    pub trace: TraceArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RevivalsArgs {
    /// Trace CSV with columns t,re,im,abs2 (as written by `autocorr`).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub trace: TraceArgs,
    /// Revival time; defaults to 2 pi / a of the spectrum.
    #[arg(long)]
    pub t_rev: Option<f64>,
    #[arg(long, default_value_t = cohstate::dynamics::DEFAULT_FULL_THRESHOLD)]
    pub full_threshold: f64,
    #[arg(long, default_value_t = cohstate::dynamics::DEFAULT_FRAC_THRESHOLD)]
    pub frac_threshold: f64,
    #[arg(long, default_value_t = cohstate::dynamics::DEFAULT_Q_MAX)]
    pub q_max: u32,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(long)]
    pub n: u64,
    /// Truncation length; default ceil(sqrt(n)).
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, default_value_t = cohstate::gaussfactor::DEFAULT_THRESHOLD)]
    pub threshold: f64,
}

/// Result bytes plus whether the command's check passed.
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub pass: bool,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::VerifyAlgebra(a) => commands::verify_algebra(&a),
        Command::CsEval(a) => commands::cs_eval(&a),
        Command::ClosedFormCheck(a) => commands::closed_form_check(&a),
        Command::Autocorr(a) => commands::autocorr(&a),
        Command::Revivals(a) => commands::revivals(&a),
        Command::Factor(a) => commands::factor(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let path = cli.output.clone();
    let outcome = run(cli).and_then(|o| output::emit(&o.bytes, path.as_deref()).map(|()| o.pass));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("cohstate: {e}");
            ExitCode::from(2)
        }
    }
}
