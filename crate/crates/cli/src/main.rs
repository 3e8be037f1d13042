mod compute;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "hodge",
    version,
    about = "Exact Hodge polynomials of moduli of triples and rank-3 bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Hodge polynomial, or list criticals/chambers.
    Compute(compute::ComputeArgs),
    /// Run an invariant or cross-path suite; exits 1 on any hard failure.
    Verify(verify::VerifyArgs),
    /// Emit Betti-number tables over a parameter grid.
    Table(table::TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Latex,
}

/// A usage error: printed to stderr, exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<hodge_core::HodgeError> for UsageError {
    fn from(e: hodge_core::HodgeError) -> Self {
        UsageError(e.to_string())
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("HODGE_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("warning: ignoring HODGE_THREADS={value:?}; expected a positive integer")
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Compute(args) => compute::run(&args),
        Command::Table(args) => table::run(&args),
        Command::Verify(args) => return verify::run(&args),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
