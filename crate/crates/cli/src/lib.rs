//! Command-line campaigns over the `hrlab` core: `verify-hr`, `family` and
//! `gamma-scan`. Each writes one JSON report; per-task randomness comes from
//! `(seed, task index)` so reports do not depend on the worker count.

pub mod args;
pub mod campaign;
pub mod error;
pub mod family;
pub mod gamma;
pub mod report;
pub mod verify;

use std::time::Instant;

pub use args::Cli;
use args::Command;
pub use error::CliError;
pub use report::Status;

/// Runs one command and writes its report. `Ok(false)` means an assertion failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()?;
    let start = Instant::now();
    let out = cli.out.as_deref();
    pool.install(|| match &cli.command {
        Command::VerifyHr(a) => verify::run(a, start, out),
        Command::Family(a) => family::run(a, start, out),
        Command::GammaScan(a) => gamma::run(a, start, out),
    })
}
