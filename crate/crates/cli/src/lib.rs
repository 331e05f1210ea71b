//! Argument handling for the `necklace` binary.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use necklace_core::rep::DimensionVector;
use necklace_core::verify::{self, Report};
use necklace_core::{parse_quiver, QuiverRef, Weight};

#[derive(Debug, Parser)]
#[command(name = "necklace", version, about = "Necklace brackets, moment checks and trace Poisson brackets")]
pub struct Cli {
    /// Quiver file, or the quiver text itself
    #[arg(long, global = true)]
    pub quiver: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket of the classes of two closed paths
    Bracket { p: String, q: String },
    /// Check d_p(w − λ) = 0 for every necklace up to a length
    MomentCheck {
        /// Comma separated rationals, one per vertex (default: zero)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Compare {tr p, tr q} with tr⟨p, q⟩ on sampled necklace pairs
    TraceCompat {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        sample: usize,
    },
    /// Cyclic Jacobi sums on random necklace triples
    JacobiTest {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Block layout and coordinates of the representation space
    RepInfo {
        #[arg(long)]
        alpha: String,
    },
}

fn load_quiver(source: Option<&str>) -> Result<QuiverRef, String> {
    let source = source.ok_or("--quiver is required")?;
    let text = if Path::new(source).is_file() {
        fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?
    } else {
        source.to_string()
    };
    parse_quiver(&text).map_err(|e| e.to_string())
}

/// Runs a parsed command line. `Err` means the input was unusable.
pub fn execute(cli: &Cli) -> Result<Report, String> {
    let quiver = load_quiver(cli.quiver.as_deref())?;
    let seed = cli.seed;
    let err = |e: necklace_core::Error| e.to_string();
    match &cli.command {
        Command::Bracket { p, q } => verify::bracket(&quiver, p, q, seed).map_err(err),
        Command::MomentCheck { lambda, max_len } => {
            let lambda = match lambda {
                Some(text) => Weight::parse(text).map_err(err)?,
                None => Weight::zero(quiver.vertex_count()),
            };
            verify::moment_check(&quiver, &lambda, *max_len, seed).map_err(err)
        }
        Command::TraceCompat { alpha, max_len, sample } => {
            let alpha = DimensionVector::parse(alpha).map_err(err)?;
            verify::trace_compat(&quiver, &alpha, *max_len, *sample, seed).map_err(err)
        }
        Command::JacobiTest { max_len, trials } => Ok(verify::jacobi_test(&quiver, *max_len, *trials, seed)),
        Command::RepInfo { alpha } => {
            let alpha = DimensionVector::parse(alpha).map_err(err)?;
            verify::rep_info(&quiver, &alpha, seed).map_err(err)
        }
    }
}

/// Exit status: 0 all pass, 1 some check failed, 2 bad input.
pub fn run(cli: &Cli) -> ExitCode {
    match execute(cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
