//! Command-line front end: argument and config-file handling, the
//! `generate`, `measure`, `compare-braid` and `verify` commands, and their
//! json/csv/markdown renderings.

use std::fmt;

pub mod commands;
pub mod config;
pub mod format;
pub mod verify;

use config::{Cli, Command, RunConfig};

/// Bad flags, config keys or spec combinations. Maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// What a command produced. `output` is deterministic and goes to stdout or
/// `--out`; `diagnostics` (timings) goes to stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
    pub diagnostics: String,
}

impl Outcome {
    pub fn success(output: String) -> Self {
        Self {
            output,
            success: true,
            diagnostics: String::new(),
        }
    }
}

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Exit code for an error returned by [`run`].
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        EXIT_USAGE
    } else {
        EXIT_FAILURE
    }
}

pub fn resolve(cli: &Cli) -> anyhow::Result<RunConfig> {
    match &cli.command {
        Command::Generate(a) => config::resolve_generate(a),
        Command::Measure(a) => config::resolve_measure(a),
        Command::CompareBraid(a) => config::resolve_compare(a),
        Command::Verify(a) => config::resolve_verify(a),
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<(RunConfig, Outcome)> {
    let cfg = resolve(cli)?;
    let outcome = match &cli.command {
        Command::Generate(_) => commands::cmd_generate(&cfg)?,
        Command::Measure(_) => commands::cmd_measure(&cfg)?,
        Command::CompareBraid(_) => commands::cmd_compare_braid(&cfg)?,
        Command::Verify(_) => verify::cmd_verify(&cfg)?,
    };
    Ok((cfg, outcome))
}
