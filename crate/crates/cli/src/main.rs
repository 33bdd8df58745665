use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use toric_cy4_cli::{
    batch_exit_code, check_expectations, check_reference, render, run_batch, BatchOptions, EmitFormat,
    ReferenceTable,
};

#[derive(Parser)]
#[command(
    name = "toric-cy4",
    version,
    about = "Calabi-Yau fourfolds from smooth toric Fano fourfolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the doubling report of each fan file.
    Compute {
        files: Vec<PathBuf>,
        /// Output format: text, json or csv.
        #[arg(long, default_value = "text")]
        emit: EmitFormat,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Reference CSV to compare (chi, tau) against.
        #[arg(long)]
        check: Option<PathBuf>,
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let Command::Compute {
        files,
        emit,
        jobs,
        check,
        verbose,
    } = Cli::parse().command;

    let seed_cone = match BatchOptions::seed_cone_from_env() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = BatchOptions { jobs, seed_cone };
    let results = run_batch(&files, &opts);

    print!("{}", render(&results, emit));
    let _ = std::io::stdout().flush();

    let mut code = batch_exit_code(&results);
    for r in &results {
        match &r.outcome {
            Err(e) => {
                if emit == EmitFormat::Csv {
                    eprintln!("error: {e}");
                }
            }
            Ok(rep) if rep.a_hat != 2 => {
                eprintln!("warning: {}: A-hat = {} (expected 2)", r.origin, rep.a_hat);
            }
            Ok(_) => {}
        }
    }

    let own = check_expectations(&results);
    if verbose && !own.entries.is_empty() {
        eprint!("{}", own.render());
    } else {
        for line in own.render().lines().filter(|l| l.starts_with("MISMATCH")) {
            eprintln!("{line}");
        }
    }
    if own.exit_code() != 0 {
        code = code.max(2);
    }

    if let Some(path) = check {
        let outcome = ReferenceTable::load(&path).and_then(|t| check_reference(&results, &t));
        match outcome {
            Ok(summary) => {
                if verbose {
                    eprint!("{}", summary.render());
                } else {
                    for line in summary.render().lines().filter(|l| l.starts_with("MISMATCH")) {
                        eprintln!("{line}");
                    }
                    eprintln!("{} matched, {} mismatched", summary.matched, summary.mismatched);
                }
                code = code.max(summary.exit_code());
            }
            Err(e) => {
                eprintln!("error: {e}");
                code = code.max(e.exit_code());
            }
        }
    }
    ExitCode::from(code as u8)
}
