mod commands;
mod config;
mod error;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::parse_real;
use crate::error::{CliError, Result};
use crate::format::{DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION};

/// Classify, decompose and iterate unimodular 2x2 transfer matrices.
#[derive(Parser, Debug)]
#[command(name = "abcd", version)]
struct Cli {
    /// Significant digits in reports and CSV
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
    precision: usize,

    /// Half-width of the parabolic band around |trace| = 2 (overrides ABCD_TOL)
    #[arg(long, global = true, value_parser = parse_tol)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trace class, equi-diagonal form and rotation angle of a matrix
    Classify(MatrixArgs),
    /// Wigner, Bargmann or near-boundary (alpha/beta) parameters
    Decompose {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum, default_value_t = Form::Wigner)]
        form: Form,
    },
    /// One cycle of a two-medium periodic stack and its N-period transfer
    Stack(StackArgs),
    /// Sample the family crossing the parabolic boundary
    TransitionCurve {
        #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
        eta: f64,
        /// `lo,hi`, must straddle zero
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        eps_range: [f64; 2],
        #[arg(long)]
        steps: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Little-group element of a momentum along z
    LittleGroup(LittleGroupArgs),
}

#[derive(Args, Debug)]
struct MatrixArgs {
    /// Entries a b c d of [[a, b], [c, d]]
    #[arg(num_args = 4, value_names = ["A", "B", "C", "D"], value_parser = parse_real,
          allow_negative_numbers = true, required = true)]
    entries: Vec<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Form {
    Wigner,
    Bargmann,
    Transition,
}

#[derive(Args, Debug)]
pub struct StackArgs {
    /// key=value stack file (phi1, phi2, eta, periods)
    #[arg(conflicts_with_all = ["phi1", "phi2", "eta"])]
    pub config: Option<PathBuf>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires_all = ["phi2", "eta"])]
    pub phi1: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires_all = ["phi1", "eta"])]
    pub phi2: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, requires_all = ["phi1", "phi2"])]
    pub eta: Option<f64>,
    /// Number of periods (overrides the file)
    #[arg(long)]
    pub periods: Option<u64>,
    /// Write matrix entries for n = 0..=N here
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Massive,
    Spacelike,
    Massless,
}

#[derive(Args, Debug)]
pub struct LittleGroupArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long, value_parser = parse_real)]
    pub mass: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub momentum: f64,
    #[arg(long, value_parser = parse_real)]
    pub energy: Option<f64>,
    /// phi (massive), chi (spacelike) or gamma (massless)
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub param: f64,
}

fn parse_precision(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if (MIN_PRECISION..=MAX_PRECISION).contains(&p) => Ok(p),
        _ => Err(format!(
            "expected an integer in {MIN_PRECISION}..={MAX_PRECISION}"
        )),
    }
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    match parse_real(s)? {
        t if t > 0.0 => Ok(t),
        _ => Err(format!("tolerance must be positive: {s}")),
    }
}

fn parse_range(s: &str) -> std::result::Result<[f64; 2], String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected lo,hi: {s}"))?;
    Ok([parse_real(lo)?, parse_real(hi)?])
}

fn class_tolerance(flag: Option<f64>) -> Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("ABCD_TOL") {
        Ok(v) => parse_tol(&v).map_err(|e| CliError::Input(format!("ABCD_TOL: {e}"))),
        Err(std::env::VarError::NotPresent) => Ok(abcd_core::DEFAULT_CLASS_TOL),
        Err(e) => Err(CliError::Input(format!("ABCD_TOL: {e}"))),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let ctx = commands::Context {
        digits: cli.precision,
        tol: class_tolerance(cli.tol)?,
    };
    match cli.command {
        Command::Classify(m) => commands::classify(&ctx, &m.entries, out),
        Command::Decompose { matrix, form } => {
            commands::decompose(&ctx, &matrix.entries, form, out)
        }
        Command::Stack(args) => commands::stack(&ctx, &args, out),
        Command::TransitionCurve {
            eta,
            eps_range,
            steps,
            csv,
        } => commands::transition_curve(&ctx, eta, eps_range, steps, csv.as_deref(), out),
        Command::LittleGroup(args) => commands::little_group(&ctx, &args, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| {
        out.flush().map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
