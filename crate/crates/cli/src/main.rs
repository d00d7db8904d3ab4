//! Command-line driver: analyze single numerical semigroups, sweep
//! enumerated corpora, reproduce the fixed verification computations, and
//! scan shifted families.
//!
//! Exit codes are a stable contract: 0 when every requested check passes,
//! 1 for usage or input errors, 2 when a verification fails.

mod output;
mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use monocurve::linalg::FieldConfig;
use output::Format;
use report::CliError;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact invariants of numerical semigroup rings: Apéry sets, Betti
/// numbers, tangent cones, and verification sweeps for the Betti bounds.
#[derive(Parser)]
#[command(name = "monocurve", version)]
struct Cli {
    /// Coefficient field: `q` for the rationals or `gf:p` for a prime `p`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldConfig,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for sweeps; defaults to the available cores.  The
    /// report bytes do not depend on this.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one semigroup.
    Analyze {
        /// Comma-separated generators, e.g. `--gens 4,5,6,7`.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// One row per semigroup of a fixed width over a multiplicity range,
    /// with per-bound pass flags and an extremal summary.
    Sweep {
        /// Width shared by every enumerated semigroup.
        #[arg(long)]
        width: u64,
        /// Inclusive multiplicity range, e.g. `--mult 4..12`.
        #[arg(long, value_parser = parse_mult)]
        mult: MultRange,
    },
    /// Re-run one of the fixed verification computations.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Betti numbers of the shifted family, one row per shift.
    ShiftScan {
        /// Comma-separated generators of the base semigroup.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Largest shift to sample; must be at least twice the width.
        #[arg(long)]
        j_max: u64,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Certify the width-range estimate against `(3e)^sqrt(2w)` for every
    /// width in range, plus spot checks of the asymptotic branch.
    Prop43 {
        #[arg(long, default_value_t = 3)]
        w_min: u64,
        #[arg(long, default_value_t = 111)]
        w_max: u64,
        /// Sample widths (each at least 112) for the asymptotic branch.
        #[arg(long, value_delimiter = ',', default_values_t = [112u64, 500, 10000])]
        samples: Vec<u64>,
    },
    /// Sweep the (width, alpha, beta) parameter space, expecting no
    /// exceptions, plus spot checks of the closed-form branch.
    Thm51 {
        #[arg(long, default_value_t = 40)]
        w_min: u64,
        #[arg(long, default_value_t = 99)]
        w_max: u64,
        /// Sample widths (each at least 100) for the closed-form branch.
        #[arg(long, value_delimiter = ',', default_values_t = [100u64, 500, 10000])]
        samples: Vec<u64>,
    },
    /// Record the exceptional parameters over the small widths.
    Remark {
        #[arg(long, default_value_t = 4)]
        w_min: u64,
        #[arg(long, default_value_t = 39)]
        w_max: u64,
    },
    /// Compare scanned interval tangent cones against the closed form for
    /// all multiplicities up to `m_max`.
    Jtilde {
        #[arg(long, default_value_t = 25)]
        m_max: u64,
    },
}

/// Inclusive multiplicity range; accepts `a..b` and `a..=b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct MultRange {
    lo: u64,
    hi: u64,
}

fn parse_mult(s: &str) -> Result<MultRange, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected an inclusive range like `4..12`, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("invalid lower bound in `{s}`"))?;
    let hi: u64 = b
        .trim()
        .parse()
        .map_err(|_| format!("invalid upper bound in `{s}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(MultRange { lo, hi })
}

fn parse_field(s: &str) -> Result<FieldConfig, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldConfig::Rationals);
    }
    if let Some(p) = s.strip_prefix("gf:") {
        let p: u32 = p
            .parse()
            .map_err(|_| format!("invalid characteristic in `{s}`"))?;
        return FieldConfig::prime_field(p).map_err(|e| e.to_string());
    }
    Err(format!("field must be `q` or `gf:p`, got `{s}`"))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Input("--jobs must be at least 1".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| {
                CliError::Input(format!("could not configure {jobs} worker threads: {e}"))
            })?;
    }
    let report = match &cli.command {
        Command::Analyze { gens } => report::cmd_analyze(gens, cli.field)?,
        Command::Sweep { width, mult } => {
            report::cmd_sweep(*width, mult.lo, mult.hi, cli.field)?
        }
        Command::Verify { target } => match target {
            VerifyTarget::Prop43 {
                w_min,
                w_max,
                samples,
            } => report::cmd_verify_prop43(*w_min, *w_max, samples, cli.field)?,
            VerifyTarget::Thm51 {
                w_min,
                w_max,
                samples,
            } => report::cmd_verify_thm51(*w_min, *w_max, samples, cli.field)?,
            VerifyTarget::Remark { w_min, w_max } => {
                report::cmd_verify_remark(*w_min, *w_max, cli.field)?
            }
            VerifyTarget::Jtilde { m_max } => report::cmd_verify_jtilde(*m_max, cli.field)?,
        },
        Command::ShiftScan { gens, j_max } => report::cmd_shift_scan(gens, *j_max, cli.field)?,
    };
    let rendered = output::render(&report, cli.format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(report.summary.pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mult_ranges_parse_inclusively() {
        assert_eq!(parse_mult("4..12").unwrap(), MultRange { lo: 4, hi: 12 });
        assert_eq!(parse_mult("2..=10").unwrap(), MultRange { lo: 2, hi: 10 });
        assert!(parse_mult("12..4").is_err());
        assert!(parse_mult("4").is_err());
        assert!(parse_mult("a..b").is_err());
    }

    #[test]
    fn fields_parse_and_validate() {
        assert_eq!(parse_field("q").unwrap(), FieldConfig::Rationals);
        assert_eq!(
            parse_field("gf:32003").unwrap(),
            FieldConfig::PrimeField(32003)
        );
        assert!(parse_field("gf:32004").is_err());
        assert!(parse_field("gf:").is_err());
        assert!(parse_field("r").is_err());
    }

    #[test]
    fn cli_declares_a_consistent_interface() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
