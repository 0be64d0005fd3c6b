//! Command-line front end for the xi-harmonic verification suites.
//!
//! Exit codes: 0 when every report passes, 1 when any report fails or a
//! computation errors, 2 on a usage error.

pub mod args;
pub mod commands;
pub mod output;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Format};
use commands::{execute, Failure, Outcome};

pub const THREADS_ENV: &str = "XI_HARMONIC_THREADS";

fn configure_threads() -> Result<(), String> {
    let n = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| format!("{THREADS_ENV} must be a non-negative integer, got {v:?}"))?,
        Err(_) => 0,
    };
    // a second call in the same process (tests) keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return 2;
    }
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return 2;
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            return 1;
        }
    };
    let (text, common, pass) = match outcome {
        Outcome::Text(t, c) => (t, c, true),
        Outcome::Reports(reports, c) => {
            let text = match c.format {
                Format::Json => output::reports_json(&reports),
                Format::Csv => match output::reports_csv(&reports) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 1;
                    }
                },
            };
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                eprintln!("{failed} of {} reports failed", reports.len());
            }
            (text, c, failed == 0)
        }
    };
    if let Err(e) = output::write_output(&text, common.out.as_deref()) {
        eprintln!("error: writing output: {e}");
        return 1;
    }
    if pass { 0 } else { 1 }
}
