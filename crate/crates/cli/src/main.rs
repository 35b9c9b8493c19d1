//! `vcoupling`: couplings, star spectra, S-matrices and lattice band diagrams.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vertex_coupling::{CouplingParams, EnergyWindow, Error, LatticeFamily, LatticeParams};

use commands::{DiagramConfig, Report};

#[derive(Parser)]
#[command(name = "vcoupling", version, about = "Circulant vertex couplings on quantum graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct VertexArgs {
    /// Vertex degree.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// δ coupling strength.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Interpolation parameter in [0, 1].
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    t: f64,
}

#[derive(Args)]
struct LatticeArgs {
    /// δ coupling strength.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Lattice edge length.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    ell: f64,
    #[arg(long, default_value_t = -30.0, allow_negative_numbers = true)]
    e_min: f64,
    #[arg(long, default_value_t = 90.0, allow_negative_numbers = true)]
    e_max: f64,
    /// Grid step in k and κ [default: 1e-3·π/ell].
    #[arg(long, allow_negative_numbers = true)]
    resolution: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Generator, eigenvalues and symmetries of U(t).
    Coupling(VertexArgs),
    /// Negative eigenvalues of the star graph.
    Star(VertexArgs),
    /// On-shell S-matrix generators.
    Smatrix {
        #[command(flatten)]
        vertex: VertexArgs,
        /// Momentum (repeatable).
        #[arg(long = "k", allow_negative_numbers = true)]
        k: Vec<f64>,
        /// Also print the high-energy limit.
        #[arg(long)]
        limit: bool,
    },
    /// Lattice spectral intervals at one t.
    Bands {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        t: f64,
    },
    /// Lattice spectral intervals over a grid of t.
    Sweep {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 201)]
        t_steps: usize,
    },
}

fn diagram_config(l: &LatticeArgs, t_min: f64, t_max: f64, t_steps: usize) -> vertex_coupling::Result<DiagramConfig> {
    Ok(DiagramConfig {
        family: LatticeFamily::new(l.ell, l.alpha)?,
        window: EnergyWindow::new(l.e_min, l.e_max)?,
        resolution: l.resolution,
        t_min,
        t_max,
        t_steps,
    })
}

fn run(command: &Command) -> vertex_coupling::Result<Report> {
    let vertex = |v: &VertexArgs| CouplingParams::new(v.n, v.alpha, v.t);
    match command {
        Command::Coupling(v) => commands::coupling(&vertex(v)?),
        Command::Star(v) => commands::star(&vertex(v)?),
        Command::Smatrix { vertex: v, k, limit } => {
            let ks = if k.is_empty() && !limit { vec![1.0] } else { k.clone() };
            commands::smatrix(&vertex(v)?, &ks, *limit)
        }
        Command::Bands { lattice, t } => {
            LatticeParams::new(lattice.ell, lattice.alpha, *t)?;
            commands::diagram(&diagram_config(lattice, *t, *t, 1)?)
        }
        Command::Sweep {
            lattice,
            t_min,
            t_max,
            t_steps,
        } => commands::diagram(&diagram_config(lattice, *t_min, *t_max, *t_steps)?),
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_invalid_input() {
        2
    } else {
        3
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = match cli.format {
        Format::Csv => match report.table.to_csv() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        },
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
