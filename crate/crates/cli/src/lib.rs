//! Command-line front end for `catalan-ode`.
//!
//! Exit codes: 0 when every requested check passes, 1 on a verification
//! failure (including a symbolic degree-cap overflow), 2 on usage or input
//! errors.

pub mod bfile;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use catalan_ode::catalan::{catalan_prefix, HigherCatalanTable};
use catalan_ode::coeffs::{a_table_recurrence, b_table_recurrence, CoeffTable, Family};
use catalan_ode::field::DEFAULT_DEGREE_CAP;
use catalan_ode::verify::suite::{run_suite, SuiteConfig};
use catalan_ode::verify::IdentityId;
use catalan_ode::Error;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::bfile::parse_bfile;
use crate::report::{emit_report, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Overrides the worker count when `--threads` is absent.
pub const THREADS_ENV: &str = "CATALAN_ODE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "catalan-ode",
    version,
    about = "Catalan numbers, coefficient families and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C_0..C_max.
    Catalan {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Print C_0^(r)..C_max^(r), the coefficients of C(t)^r.
    Higher {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Print the a or b coefficient table for N = 1..=max-N.
    Coeffs {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "max-N")]
        max_big_n: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Compare a b-file of Catalan numbers against computed values.
    Crosscheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        max: usize,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id, comma-separated ids, or `all`.
    #[arg(long, value_delimiter = ',', required = true)]
    id: Vec<String>,
    #[arg(long = "max-N")]
    max_big_n: Option<usize>,
    /// Series truncation order K.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long = "max-n")]
    max_small_n: Option<usize>,
    #[arg(long)]
    terms_eq59: Option<usize>,
    #[arg(long)]
    terms_eq62: Option<usize>,
    /// Largest n for the two convolution recurrences.
    #[arg(long)]
    max_rec_n: Option<usize>,
    #[arg(long)]
    asymptotic_n: Option<u64>,
    /// Largest polynomial degree allowed in symbolic mode.
    #[arg(long)]
    degree_cap: Option<usize>,
    /// Worker threads, 0 for one per core.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Settings for a `verify` run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_big_n: usize,
    pub series_order: usize,
    pub max_small_n: usize,
    pub terms_eq59: usize,
    pub terms_eq62: usize,
    pub recurrence_nmax: usize,
    pub asymptotic_n: u64,
    pub degree_cap: usize,
    pub format: Format,
    pub parallelism: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let s = SuiteConfig::default();
        RunConfig {
            max_big_n: s.max_big_n,
            series_order: s.series_order,
            max_small_n: s.max_small_n,
            terms_eq59: s.terms_eq59,
            terms_eq62: s.terms_eq62,
            recurrence_nmax: s.recurrence_nmax,
            asymptotic_n: s.asymptotic_n,
            degree_cap: DEFAULT_DEGREE_CAP,
            format: Format::Human,
            parallelism: 0,
        }
    }
}

impl RunConfig {
    pub fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            max_big_n: self.max_big_n,
            series_order: self.series_order,
            max_small_n: self.max_small_n,
            terms_eq59: self.terms_eq59,
            terms_eq62: self.terms_eq62,
            recurrence_nmax: self.recurrence_nmax,
            asymptotic_n: self.asymptotic_n,
            degree_cap: self.degree_cap,
            parallelism: self.parallelism,
        }
    }

    fn from_args(args: &VerifyArgs, env_threads: Option<&str>) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        if let (None, Some(v)) = (args.threads, env_threads) {
            cfg.parallelism = v
                .trim()
                .parse()
                .map_err(|_| format!("{THREADS_ENV} must be a non-negative integer, got {v:?}"))?;
        }
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut cfg.max_big_n, args.max_big_n);
        set(&mut cfg.series_order, args.order);
        set(&mut cfg.max_small_n, args.max_small_n);
        set(&mut cfg.terms_eq59, args.terms_eq59);
        set(&mut cfg.terms_eq62, args.terms_eq62);
        set(&mut cfg.recurrence_nmax, args.max_rec_n);
        set(&mut cfg.degree_cap, args.degree_cap);
        set(&mut cfg.parallelism, args.threads);
        if let Some(n) = args.asymptotic_n {
            cfg.asymptotic_n = n;
        }
        cfg.format = args.format;
        cfg.suite_config().validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

fn parse_ids(raw: &[String]) -> Result<Vec<IdentityId>, String> {
    let mut ids = Vec::new();
    for s in raw {
        if s == "all" {
            ids.extend(IdentityId::ALL);
        } else {
            ids.push(s.parse::<IdentityId>().map_err(|e| e.to_string())?);
        }
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

/// Failure of a subcommand, mapped onto an exit code.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidBound(_) | Error::IndexOutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(format!("write failed: {e}"))
    }
}

/// Runs the CLI on `args` (including the program name), reading the
/// thread override from the process environment.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(THREADS_ENV).ok();
    run_cli_with_env(args, env.as_deref(), out, err)
}

/// As [`run_cli`], with the value of `CATALAN_ODE_THREADS` passed in.
pub fn run_cli_with_env<I, T>(
    args: I,
    env_threads: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, env_threads, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(
    command: Command,
    env_threads: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Catalan { max, format } => {
            write_sequence(out, &catalan_prefix(max), format)?;
            Ok(EXIT_OK)
        }
        Command::Higher { r, max, format } => {
            if r == 0 {
                return Err(Failure::Usage("--r must be at least 1".into()));
            }
            let table = HigherCatalanTable::new(r, max);
            let values: Vec<BigInt> = (0..=max)
                .map(|n| table.get(r, n).expect("in table").clone())
                .collect();
            write_sequence(out, &values, format)?;
            Ok(EXIT_OK)
        }
        Command::Coeffs {
            family,
            max_big_n,
            format,
        } => {
            let table = match family {
                Family::A => a_table_recurrence(max_big_n)?,
                Family::B => b_table_recurrence(max_big_n)?,
            };
            write_table(out, &table, format)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let ids = parse_ids(&args.id).map_err(Failure::Usage)?;
            let cfg = RunConfig::from_args(&args, env_threads).map_err(Failure::Usage)?;
            let reports = run_suite(&ids, &cfg.suite_config())?;
            let text = emit_report(&reports, cfg.format);
            write!(out, "{text}")?;
            if cfg.format == Format::Json {
                writeln!(out)?;
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Crosscheck { bfile, max } => crosscheck(&bfile, max, out),
    }
}

fn write_sequence(out: &mut dyn Write, values: &[BigInt], format: Format) -> std::io::Result<()> {
    let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
    match format {
        Format::Human => writeln!(out, "{}", strings.join(",")),
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&strings).expect("strings serialize")
        ),
    }
}

fn write_table(out: &mut dyn Write, table: &CoeffTable, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", table.to_json()),
        Format::Human => {
            for (n, row) in table.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "N={n}: {}", cells.join(" "))?;
            }
            Ok(())
        }
    }
}

fn crosscheck(path: &std::path::Path, max: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let entries =
        parse_bfile(&content).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let computed = catalan_prefix(max);
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    for entry in entries.iter().filter(|e| e.index <= max as i64) {
        if entry.index < 0 {
            return Err(Failure::Usage(format!(
                "negative index {} in b-file",
                entry.index
            )));
        }
        checked += 1;
        let expected = &computed[entry.index as usize];
        if *expected != entry.value {
            mismatches += 1;
            writeln!(
                out,
                "mismatch at n={}: b-file {}, computed {expected}",
                entry.index, entry.value
            )?;
        }
    }
    writeln!(out, "checked {checked} entries, {mismatches} mismatches")?;
    Ok(if mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}
