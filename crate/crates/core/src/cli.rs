//! Command implementations behind the `pretzel` binary.
//!
//! Every command writes to a caller-supplied sink so the same code serves
//! the binary, the examples and the tests. Exit statuses:
//!
//! | status | meaning |
//! |-------:|---------|
//! | 0 | success |
//! | 1 | argument or domain error |
//! | 2 | verification mismatch |
//! | 3 | oracle resource ceiling |
//! | 4 | I/O failure |

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::count::{count_row, p1_count, p2_count, p3_count, CountRow};
use crate::error::{Error, Result};
use crate::fit::{fit_growth, FitResult};
use crate::tcode::{LinkType, Oracle};
use crate::Count;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Io(_) | Error::Json(_) => EXIT_IO,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Lines,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeSelector {
    One(LinkType),
    All,
}

impl std::str::FromStr for TypeSelector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(TypeSelector::All),
            _ => s
                .parse::<u8>()
                .ok()
                .and_then(LinkType::from_index)
                .map(TypeSelector::One)
                .ok_or_else(|| format!("expected 1, 2, 3 or all, got {s:?}")),
        }
    }
}

fn parse_link_type(s: &str) -> std::result::Result<LinkType, String> {
    match s.parse::<TypeSelector>()? {
        TypeSelector::One(t) => Ok(t),
        TypeSelector::All => Err("expected 1, 2 or 3".to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "pretzel", version, about = "Count alternating oriented pretzel links by crossing number")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the count table for a range of crossing numbers.
    Table {
        #[arg(long, default_value_t = 6)]
        min: u64,
        #[arg(long, default_value_t = 50)]
        max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the closed-form count for one crossing number.
    Count {
        #[arg(short = 'c')]
        c: u64,
        /// 1, 2, 3 or all.
        #[arg(long = "type", default_value = "all")]
        link_type: TypeSelector,
    },
    /// List canonical t-codes, one per equivalence class.
    List {
        #[arg(short = 'c')]
        c: u64,
        /// 1, 2 or 3.
        #[arg(long = "type", value_parser = parse_link_type)]
        link_type: LinkType,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
        /// Oracle ceiling on the crossing number (default 22, or PRETZEL_ORACLE_MAX_C).
        #[arg(long)]
        max_oracle_c: Option<u64>,
    },
    /// Compare the closed formulas with exhaustive enumeration.
    Verify {
        #[arg(long, default_value_t = 16)]
        max: u64,
        /// Oracle ceiling on the crossing number (default 22, or PRETZEL_ORACLE_MAX_C).
        #[arg(long)]
        max_oracle_c: Option<u64>,
    },
    /// Fit P(c) ≈ a·e^(b·c) by least squares on ln P(c).
    Fit {
        #[arg(long, default_value_t = 6)]
        min: u64,
        #[arg(long, default_value_t = 50)]
        max: u64,
    },
}

fn check_range(min_c: u64, max_c: u64) -> Result<()> {
    if min_c < 1 || min_c > max_c {
        return Err(Error::domain(format!("need 1 <= min <= max, got min={min_c} max={max_c}")));
    }
    Ok(())
}

pub fn table_rows(min_c: u64, max_c: u64) -> Result<Vec<CountRow>> {
    check_range(min_c, max_c)?;
    Ok((min_c..=max_c).map(count_row).collect())
}

/// Renders the table. CSV uses LF line endings with a `c,p1,p2,p3,p,total`
/// header; JSON is an array of objects with counts as decimal strings.
pub fn render_table(rows: &[CountRow], format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Csv => {
            let mut s = String::from(CountRow::CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&r.to_csv_line());
                s.push('\n');
            }
            Ok(s)
        }
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows)?;
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn cmd_table(min_c: u64, max_c: u64, format: TableFormat, out: &mut dyn Write) -> Result<()> {
    let rows = table_rows(min_c, max_c)?;
    out.write_all(render_table(&rows, format)?.as_bytes())?;
    Ok(())
}

pub fn counts_for(c: u64, selector: TypeSelector) -> Vec<Count> {
    let single = |t: LinkType| match t {
        LinkType::Type1 => p1_count(c),
        LinkType::Type2 => p2_count(c),
        LinkType::Type3 => p3_count(c),
    };
    match selector {
        TypeSelector::One(t) => vec![single(t)],
        TypeSelector::All => LinkType::ALL.iter().map(|&t| single(t)).collect(),
    }
}

pub fn cmd_count(c: u64, selector: TypeSelector, out: &mut dyn Write) -> Result<()> {
    if c < 1 {
        return Err(Error::domain("crossing number must be at least 1"));
    }
    let line: Vec<String> = counts_for(c, selector).iter().map(|v| v.to_string()).collect();
    writeln!(out, "{}", line.join(" "))?;
    Ok(())
}

pub fn cmd_list(
    c: u64,
    link_type: LinkType,
    format: ListFormat,
    oracle: &Oracle,
    out: &mut dyn Write,
) -> Result<()> {
    let classes = oracle.enumerate_classes(c, link_type)?;
    match format {
        ListFormat::Lines => {
            for code in &classes {
                writeln!(out, "{code}")?;
            }
        }
        ListFormat::Json => {
            let rendered: Vec<String> = classes.iter().map(|t| t.to_string()).collect();
            writeln!(out, "{}", serde_json::to_string(&rendered)?)?;
        }
    }
    Ok(())
}

/// One formula-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCheck {
    pub c: u64,
    pub link_type: LinkType,
    pub formula: Count,
    pub oracle: Count,
}

impl VerifyCheck {
    pub fn passed(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Compares every closed-form counter with the oracle for `1 <= c <= max_c`
/// and prints a PASS/FAIL table. Returns all checks in `(c, type)` order.
pub fn cmd_verify(max_c: u64, oracle: &Oracle, out: &mut dyn Write) -> Result<Vec<VerifyCheck>> {
    if max_c > oracle.max_c {
        return Err(Error::Resource {
            what: "verify --max",
            value: max_c,
            ceiling: oracle.max_c,
            hint: "--max-oracle-c or PRETZEL_ORACLE_MAX_C",
        });
    }
    writeln!(out, "{:>3}  {:<5}  {:>10}  {:>10}  status", "c", "type", "formula", "oracle")?;
    let mut checks = Vec::new();
    for c in 1..=max_c {
        for (&t, formula) in LinkType::ALL.iter().zip(counts_for(c, TypeSelector::All)) {
            let found = Count::from(oracle.enumerate_classes(c, t)?.len());
            let check = VerifyCheck { c, link_type: t, formula, oracle: found };
            writeln!(
                out,
                "{:>3}  {:<5}  {:>10}  {:>10}  {}",
                c,
                t,
                check.formula,
                check.oracle,
                if check.passed() { "PASS" } else { "FAIL" }
            )?;
            checks.push(check);
        }
    }
    let failed: Vec<&VerifyCheck> = checks.iter().filter(|v| !v.passed()).collect();
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", checks.len())?;
    } else {
        for f in &failed {
            writeln!(
                out,
                "MISMATCH c={} type={} formula={} oracle={}",
                f.c, f.link_type, f.formula, f.oracle
            )?;
        }
    }
    Ok(checks)
}

pub fn cmd_fit(min_c: u64, max_c: u64, out: &mut dyn Write) -> Result<FitResult> {
    if min_c >= max_c {
        return Err(Error::domain(format!("fit needs min < max, got min={min_c} max={max_c}")));
    }
    let rows = table_rows(min_c, max_c)?;
    let fit = fit_growth(&rows)?;
    writeln!(out, "range: c = {}..={} ({} points with P(c) > 0)", fit.c_min, fit.c_max, fit.points)?;
    writeln!(out, "a: {:.6}", fit.a)?;
    writeln!(out, "b: {:.6}", fit.b)?;
    writeln!(out, "r2: {:.6}", fit.r2)?;
    writeln!(out, "2a: {:.6}", fit.total_prefactor())?;
    writeln!(out, "P(c) ~ {:.4} e^({:.4} c); 2P(c) ~ {:.4} e^({:.4} c)", fit.a, fit.b, fit.total_prefactor(), fit.b)?;
    Ok(fit)
}

fn oracle_with(max_oracle_c: Option<u64>) -> Result<Oracle> {
    let oracle = Oracle::from_env()?;
    Ok(match max_oracle_c {
        Some(m) => oracle.with_max_c(m),
        None => oracle,
    })
}

/// Runs a parsed command, returning its exit status.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Table { min, max, format, out } => match out {
            None => cmd_table(min, max, format, stdout)?,
            Some(path) => {
                let rows = table_rows(min, max)?;
                fs::write(path, render_table(&rows, format)?)?;
            }
        },
        Command::Count { c, link_type } => cmd_count(c, link_type, stdout)?,
        Command::List { c, link_type, format, max_oracle_c } => {
            cmd_list(c, link_type, format, &oracle_with(max_oracle_c)?, stdout)?
        }
        Command::Verify { max, max_oracle_c } => {
            let checks = cmd_verify(max, &oracle_with(max_oracle_c)?, stdout)?;
            if !checks.iter().all(VerifyCheck::passed) {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Fit { min, max } => {
            cmd_fit(min, max, stdout)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` and runs the command against the process's stdout/stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let status = match run(cli, &mut lock) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    let _ = lock.flush();
    status
}
