//! `hookcontent`: exact verification of hook-content identities for strict
//! partitions.
//!
//! Subcommands:
//!
//! - `verify --identity <name> [overrides]` runs one registered identity
//!   check and reports every row exactly.
//! - `suite [--config <path>]` runs a batch of checks (the default suite
//!   without a config file); checks run in parallel, reports stay in config
//!   order.
//! - `show --lambda <parts> --what hooks|contents|corners|q` prints shifted
//!   hook / content tables, the corner profile, or corner power sums.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! or config errors. Stdout is deterministic; timings go to stderr.

mod config;
mod identity;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hookcontent_core::display;
use hookcontent_core::partition::StrictPartition;

use crate::identity::{IdentityCheck, IdentityKind};
use crate::report::{emit, print_timing, Format};

#[derive(Parser)]
#[command(name = "hookcontent", version, about = "Exact hook-content identity checker for strict partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a single named identity over a size range.
    Verify(VerifyArgs),
    /// Run a batch of checks from a config file, or the default suite.
    Suite(SuiteArgs),
    /// Print tables for one strict partition.
    Show(ShowArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Name of a registered identity, e.g. `normalization` or `k1-skew`.
    #[arg(long)]
    identity: String,
    /// Base strict partition, e.g. `4,2,1` (`-` for the empty partition).
    #[arg(long)]
    mu: Option<String>,
    /// Content-binomial exponent (for `content-binomial`).
    #[arg(long)]
    k: Option<u32>,
    /// Power-sum exponent tuple, e.g. `1,1` (for `poly-detect`).
    #[arg(long)]
    exponents: Option<String>,
    /// Corner power-sum index partition, e.g. `2` (for `poly-detect`).
    #[arg(long)]
    nu: Option<String>,
    /// Inclusive size range `lo..hi`, or a bare upper bound meaning `0..hi`.
    #[arg(long)]
    n: Option<String>,
    /// RNG seed (for `pf-reconstruction`).
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random evaluation points (for `pf-reconstruction`).
    #[arg(long)]
    count: Option<usize>,
    /// Largest number of outer nodes per random point.
    #[arg(long = "m-max")]
    m_max: Option<usize>,
    /// Largest moment order (for `pf-reconstruction`).
    #[arg(long = "k-max")]
    k_max: Option<u32>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SuiteArgs {
    /// Path to a suite configuration file; omit to run the default suite.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ShowArgs {
    /// Strict partition, e.g. `7,5,4,1`.
    #[arg(long)]
    lambda: String,
    /// Which table to print.
    #[arg(long, value_enum)]
    what: What,
    /// Largest power-sum index for `--what q`.
    #[arg(long = "k-max", default_value_t = 5)]
    k_max: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Hooks,
    Contents,
    Corners,
    Q,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Suite(args) => run_suite(args),
        Command::Show(args) => run_show(args),
    }
}

fn run_verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let kind = IdentityKind::from_name(&args.identity).ok_or_else(|| {
        anyhow::anyhow!(
            "unknown identity `{}` (registered: {})",
            args.identity,
            IdentityKind::registered_names()
        )
    })?;
    let mut check = IdentityCheck::new(kind);
    set_override(&mut check, "mu", args.mu.as_deref())?;
    set_override(&mut check, "exponents", args.exponents.as_deref())?;
    set_override(&mut check, "nu", args.nu.as_deref())?;
    set_override(&mut check, "n", args.n.as_deref())?;
    if let Some(k) = args.k {
        check.k = k;
    }
    if let Some(seed) = args.seed {
        check.seed = seed;
    }
    if let Some(count) = args.count {
        check.count = count;
    }
    if let Some(m_max) = args.m_max {
        check.m_max = m_max;
    }
    if let Some(k_max) = args.k_max {
        check.k_max = k_max;
    }

    let report = identity::run_check(&check);
    print_timing(&report);
    let pass = report.pass;
    emit(&mut std::io::stdout().lock(), &[report], args.format)?;
    Ok(pass)
}

fn set_override(
    check: &mut IdentityCheck,
    key: &str,
    value: Option<&str>,
) -> anyhow::Result<()> {
    if let Some(value) = value {
        check
            .set(key, value)
            .map_err(|message| anyhow::anyhow!("--{key}: {message}"))?;
    }
    Ok(())
}

fn run_suite(args: SuiteArgs) -> anyhow::Result<bool> {
    let checks = match &args.config {
        Some(path) => config::load(path)?,
        None => identity::default_suite(),
    };
    // Checks run in parallel; `collect` keeps them in config order.
    let reports: Vec<_> = checks.par_iter().map(identity::run_check).collect();
    for report in &reports {
        print_timing(report);
    }
    let pass = reports.iter().all(|report| report.pass);
    emit(&mut std::io::stdout().lock(), &reports, args.format)?;
    Ok(pass)
}

fn run_show(args: ShowArgs) -> anyhow::Result<bool> {
    let lambda: StrictPartition = args.lambda.parse()?;
    let table = match args.what {
        What::Hooks => display::hook_table(&lambda),
        What::Contents => display::content_table(&lambda),
        What::Corners => display::corner_table(&lambda),
        What::Q => display::power_sum_table(&lambda, args.k_max),
    };
    print!("{table}");
    Ok(true)
}
