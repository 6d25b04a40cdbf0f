use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use bellbasis_cli::config::Cli;
use bellbasis_cli::{exit_code, run, EXIT_FAILURE};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (cfg, outcome) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout().lock().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(EXIT_FAILURE);
    }
    eprint!("{}", outcome.diagnostics);
    eprintln!("elapsed {:.2} s", start.elapsed().as_secs_f64());
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
