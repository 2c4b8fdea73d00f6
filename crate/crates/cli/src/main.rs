use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hosvd3::qubit3::ClassifyOptions;
use hosvd3_cli::commands;
use hosvd3_cli::{CliError, CliResult, StateFile};

#[derive(Parser)]
#[command(name = "hosvd3", version, about = "HOSVD and three-qubit LU classification")]
struct Cli {
    /// Arithmetic tolerance.
    #[arg(long, global = true, env = "HOSVD3_TOL", default_value_t = hosvd3::DEFAULT_TOL)]
    tol: f64,

    /// Tolerance for equality of squared singular values.
    #[arg(long, global = true, default_value_t = hosvd3::DEFAULT_SIGMA_TOL)]
    sigma_tol: f64,

    /// Output file (stdout when omitted).
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// HOSVD of a state file of any shape.
    Decompose { input: PathBuf },
    /// Separability, case and special-state tag of a three-qubit state file.
    Classify { input: PathBuf },
    /// Classify Haar-random three-qubit states and write a CSV.
    Sample {
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Plot data for the polytope of one-body spectra.
    Mesh {
        #[arg(long, default_value_t = 11)]
        resolution: usize,
    },
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    for (name, v) in [("--tol", cli.tol), ("--sigma-tol", cli.sigma_tol)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(CliError::Input(format!("{name} must be positive, got {v}")));
        }
    }
    let opts = ClassifyOptions {
        tol: cli.tol,
        sigma_tol: cli.sigma_tol,
    };
    let out = cli.output.as_deref();
    match cli.command {
        Command::Decompose { input } => write_output(out, &commands::decompose(&StateFile::read(&input)?, cli.tol)?),
        Command::Classify { input } => write_output(out, &commands::classify(&StateFile::read(&input)?, opts)?),
        Command::Sample { count, seed } => {
            let (records, summary) = commands::sample_records(count, seed, opts)?;
            write_output(out, &commands::samples_csv(&records))?;
            let summary = commands::summary_json(&summary);
            // keep stdout pure CSV when the samples go there
            if out.is_some() {
                print!("{summary}");
            } else {
                eprint!("{summary}");
            }
            Ok(())
        }
        Command::Mesh { resolution } => write_output(out, &commands::mesh_csv(&commands::mesh_rows(resolution)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hosvd3: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
