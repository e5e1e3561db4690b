//! Command-line front end for `apostol-kit`.
//!
//! Exit codes: 0 when every check passes, 1 when an identity fails, 2 on
//! invalid input.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;

pub mod args;
mod commands;
pub mod latex;
pub mod record;

pub use commands::summary_json;
pub use record::OutputRecord;

use args::{Cli, Command};

pub const THREADS_ENV: &str = "APOSTOL_KIT_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Violation,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] apostol_kit::Error),
    #[error("{THREADS_ENV} must be a positive integer, got {0:?}")]
    Threads(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

fn configure_threads() -> Result<(), CliError> {
    let Some(raw) = std::env::var_os(THREADS_ENV) else {
        return Ok(());
    };
    let raw = raw.to_string_lossy().into_owned();
    let threads = raw
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Threads(raw.clone()))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|_| CliError::Threads(raw))
}

fn dispatch(cli: &Cli, out: &mut impl Write) -> Result<Outcome, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Gen(a) => commands::gen(a, out),
        Command::Pade(a) => commands::pade(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Bench(a) => commands::bench(a, out),
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = dispatch(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(Outcome::Success) if flushed.is_ok() => 0,
        Ok(Outcome::Violation) => 1,
        Ok(Outcome::Success) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
