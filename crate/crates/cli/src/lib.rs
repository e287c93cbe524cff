//! Command-line front end: argument parsing, dispatch and output formats.
//!
//! Exit codes: 0 success, 1 usage error, 2 degenerate input (unreachable
//! target, vanishing denominator, ...), 3 verification discrepancy.

pub mod args;
pub mod commands;
pub mod record;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{EXIT_DEGENERATE, EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE};
pub use record::OutputRecord;

/// Sizes the global rayon pool from `CAYHT_THREADS` (0 or unset = automatic).
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("CAYHT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("CAYHT_THREADS must be a non-negative integer, got {raw:?}"))?;
    // A second call in the same process finds the pool already built; that is fine.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses `args`, runs the command, writes its output, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    match commands::dispatch(cli.command) {
        Ok(outcome) => {
            if out.write_all(outcome.stdout.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
