//! `pantsqc`: solve Y-piece hexagons, evaluate the embedding, run the
//! verification suite and draw figures.
//!
//! Exit codes: 0 success, 1 a claim failed, 2 usage or domain error,
//! 3 I/O error.

mod commands;
mod figure;
mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pantsqc_core::YPieceParams;

const DEFAULT_SEED: u64 = 20_140_801;

#[derive(Parser, Debug)]
#[command(
    name = "pantsqc",
    version,
    about = "Quasiconformal embedding of a Y-piece into the cusped Y-piece"
)]
struct Cli {
    /// Seed for random sampling.
    #[arg(long, global = true, env = "PANTS_QC_SEED")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the right-angled hexagon and print it as JSON.
    Solve {
        #[command(flatten)]
        shape: Shape,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Map CSV points through φ (or φ⁻¹ with --inverse).
    Map {
        #[command(flatten)]
        shape: Shape,
        /// CSV with header `sheet,t,r` (Fermi coordinates of c) or
        /// `sheet,x,y`. Reads stdin when absent.
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        inverse: bool,
    },
    /// Run the verification suite and print an aggregate JSON report.
    Check(CheckArgs),
    /// Write an SVG figure.
    Figure {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum)]
        which: figure::Which,
        /// Lines per direction of the mapped grid.
        #[arg(long, default_value_t = figure::DEFAULT_DENSITY, value_parser = density)]
        density: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Shape {
    #[arg(long, allow_negative_numbers = true)]
    l1: f64,
    #[arg(long, allow_negative_numbers = true)]
    l2: f64,
    #[arg(long, allow_negative_numbers = true)]
    eps: f64,
}

impl Shape {
    fn params(&self) -> Result<YPieceParams, Failure> {
        YPieceParams::new(self.l1, self.l2, self.eps).map_err(Failure::usage)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum GridName {
    Default,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, allow_negative_numbers = true, required_unless_present = "grid")]
    l1: Option<f64>,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "grid")]
    l2: Option<f64>,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "grid")]
    eps: Option<f64>,
    /// Run the l ∈ {0.3,1,3,6}², ε ∈ {0.05,0.1,0.25,0.5} grid instead.
    #[arg(long, value_enum, conflicts_with_all = ["l1", "l2", "eps"])]
    grid: Option<GridName>,
    /// Also check φ_ε̄⁻¹ ∘ φ_ε against this ε̄.
    #[arg(long)]
    epsbar: Option<f64>,
    /// Interior points for the dilatation claim.
    #[arg(long, default_value_t = 10_000, value_parser = density)]
    points: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, hide = true)]
    corrupt_bound: bool,
}

fn density(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 16 {
        return Err(format!("density must be at least 16, got {n}"));
    }
    Ok(n)
}

/// A command failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

/// Writes `bytes` to `path`, or stdout.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match cli.command {
        Command::Solve { shape, output } => commands::solve(&shape.params()?, output.as_deref()),
        Command::Map {
            shape,
            input,
            output,
            inverse,
        } => commands::map(
            &shape.params()?,
            input.as_deref(),
            output.as_deref(),
            inverse,
        ),
        Command::Check(args) => commands::check(&args, seed),
        Command::Figure {
            shape,
            which,
            density,
            output,
        } => {
            let svg = figure::render(&shape.params()?, which, density)?;
            emit(output.as_deref(), svg.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
