//! `lecycle`: exact Le-number and mu-constancy computations on corpus
//! entry files, with deterministic JSON reports.
//!
//! Exit codes: 0 success; 1 input/parse error; 2 infinite local length;
//! 3 no admissible frame; 4 inconsistent criteria; 5 expectation mismatch.

use lecycles_cli::{corpus, run};

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use lecycles::Error;

#[derive(Parser)]
#[command(name = "lecycle", version, about = "Le numbers and mu-constant family checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor number (or slice Milnor number for families) at a point.
    Milnor {
        /// Corpus entry file.
        file: PathBuf,
        /// Point as comma-separated rationals (default: origin).
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full Le profile and intersection identity at a point.
    LeNumbers {
        file: PathBuf,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the mu-constancy criteria (and the main-theorem scenario
    /// when a Y ideal is declared) against pinned expectations.
    Check {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every *.corpus entry in a directory; write per-entry reports
    /// and a summary.
    Corpus {
        dir: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Report directory (default: <dir>/reports).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute an entry's pinned quantities via the independent length
    /// oracle and print expect.* lines.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn effective_seed(seed: Option<u64>) -> Option<u64> {
    seed.or_else(|| {
        std::env::var("LECYCLE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InfiniteLength(_) => 2,
        Error::NoAdmissibleFrame(_) => 3,
        Error::InconsistentCriteria(_) => 4,
        _ => 1,
    }
}

fn dispatch(cli: Cli) -> lecycles::Result<i32> {
    match cli.command {
        Command::Milnor {
            file,
            point,
            seed,
            output,
        } => {
            let entry = corpus::load_entry(&file)?;
            run::cmd_milnor(
                &entry,
                point.as_deref(),
                effective_seed(seed),
                output.as_deref(),
            )
        }
        Command::LeNumbers {
            file,
            point,
            seed,
            output,
        } => {
            let entry = corpus::load_entry(&file)?;
            run::cmd_le_numbers(
                &entry,
                point.as_deref(),
                effective_seed(seed),
                output.as_deref(),
            )
        }
        Command::Check { file, seed, output } => {
            let entry = corpus::load_entry(&file)?;
            run::cmd_check(&entry, effective_seed(seed), output.as_deref())
        }
        Command::Corpus {
            dir,
            jobs,
            seed,
            output,
        } => run::cmd_corpus(&dir, jobs, effective_seed(seed), output.as_deref()),
        Command::Oracle { file, seed, output } => {
            let entry = corpus::load_entry(&file)?;
            run::cmd_oracle(&entry, effective_seed(seed), output.as_deref())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    std::process::exit(code);
}
