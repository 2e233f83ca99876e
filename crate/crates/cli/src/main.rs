//! Command-line front end: graph invariants, double covers, and component
//! group orders from Brandt matrix data.

mod commands;
mod failure;
mod reproduce;
mod selftest;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{batch, Field, Outcome};

#[derive(Parser)]
#[command(name = "compgroup", version, about = "Exact component-group orders and weighted-graph invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant, component group, mass and Laplacian spectrum of a graph.
    GraphInvariants {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit the bipartite double cover and check its characteristic polynomial.
    GraphDoubleCover {
        file: PathBuf,
        /// Write the cover here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exit 0 iff D(G) equals its Laplacian-spectrum expression exactly.
    GraphVerify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Component group order over F_q(T).
    PhiFf {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Component group order over Q.
    PhiQ {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Recompute the fixed regression values and print a pass/fail table.
    ReproducePaper,
    /// Randomized consistency checks at reduced size.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

fn emit(text: &str, status: &Outcome) -> u8 {
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
    match status {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

/// Prints each result in input order; the exit status is that of the first
/// failing input.
fn run_batch(files: &[PathBuf], jobs: usize, task: impl Fn(&std::path::Path, &mut String) -> Outcome + Sync) -> u8 {
    let results = batch(files, jobs, task);
    let mut code = 0;
    for (path, (text, status)) in files.iter().zip(&results) {
        if files.len() > 1 {
            println!("== {} ==", path.display());
        }
        let c = emit(text, status);
        if code == 0 {
            code = c;
        }
    }
    code
}

fn single(f: impl FnOnce(&mut String) -> Outcome) -> u8 {
    let mut out = String::new();
    let status = f(&mut out);
    emit(&out, &status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::GraphInvariants { files, jobs } => run_batch(&files, jobs, commands::graph_invariants),
        Command::GraphVerify { files, jobs } => run_batch(&files, jobs, commands::graph_verify),
        Command::GraphDoubleCover { file, out } => {
            single(|o| commands::graph_double_cover(&file, out.as_deref(), o))
        }
        Command::PhiFf { files, jobs } => run_batch(&files, jobs, |p, o| commands::phi(p, Field::FunctionField, o)),
        Command::PhiQ { files, jobs } => run_batch(&files, jobs, |p, o| commands::phi(p, Field::Rational, o)),
        Command::ReproducePaper => single(reproduce::reproduce),
        Command::Selftest { seed, cases } => single(|o| selftest::selftest(seed, cases, o)),
    };
    ExitCode::from(code)
}
