//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests drive it with in-memory streams.
//!
//! Exit codes: 0 when every verdict is `HOLDS_STRICT`, `EQUALITY_N1` or
//! `NEAR_EQUALITY`; 1 when any verdict is `VIOLATED`; 2 on input or usage
//! errors.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::campaign::{run_campaign, standard_grid, CampaignConfig, DEFAULT_CASES, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::experiments::{doubling_grid, example_family_table, sharpness_table, FamilyVariant};
use crate::exponent::Exponent;
use crate::functionals::{holder_functional, lhs_quotient};
use crate::inequality::{check_main_inequality_with, gap_curve, InequalityReport, Verdict, DEFAULT_TOLERANCE};
use crate::rearrangement::extremal_ratio_sums;
use crate::streaming::{RatioStreamAccumulator, StreamCheck};
use crate::tuple::{PairedTuples, PositiveTuple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "holderq", version, about = "Hölder functional quotients versus ratio sums")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Near-equality band, relative to the right-hand side.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hölder functional of --a, or the quotient ‖a‖_p/‖b‖_p when --b is given.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Check the quotient inequality at one exponent.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Check the inequality over a grid of exponents.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Comma-separated exponents; defaults to the 15-point standard grid.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Extremal pairings of the ratio sum.
    Rearrange {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Prefix checks over "a,b" pairs from a file or standard input.
    Stream {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// CSV file; standard input when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit every prefix, not just the summary.
        #[arg(long)]
        every: bool,
    },
    /// Sharpness family a = (1/p, …, 1/p, 1), b = (1, …, 1).
    Sharpness {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated ascending positive exponents; defaults to 2^0..2^max-k.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 16)]
        max_k: u32,
    },
    /// The K-parameterized example families.
    Examples {
        #[arg(long)]
        variant: FamilyVariant,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Inclusive range "lo..hi" or a single K.
        #[arg(long = "K", default_value = "1..8")]
        k: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        p: String,
    },
    /// Seeded random property campaign.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
}

impl ValueEnum for FamilyVariant {
    fn value_variants<'a>() -> &'a [Self] {
        &[FamilyVariant::Convergent, FamilyVariant::Divergent]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            FamilyVariant::Convergent => "convergent",
            FamilyVariant::Divergent => "divergent",
        }))
    }
}

/// Comma-separated decimals; scientific notation accepted.
pub fn parse_values(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .map_err(|_| Error::Parse(format!("not a number: {t:?}")))
        })
        .collect()
}

pub fn parse_tuple(s: &str) -> Result<PositiveTuple> {
    PositiveTuple::new(parse_values(s)?)
}

pub fn parse_exponents(s: &str) -> Result<Vec<Exponent>> {
    s.split(',').map(str::parse).collect()
}

/// `"lo..hi"` (inclusive), `"lo..=hi"`, or a single integer.
pub fn parse_k_range(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::Parse(format!("invalid K range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(num(lo)?..=num(hi)?)
        }
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}

/// Reads `a,b` pairs. A header line is allowed only as the first non-blank
/// line; blank lines and `#` comments are skipped. Fields may be separated
/// by a comma or whitespace.
pub fn read_pairs<R: BufRead>(reader: R) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut seen_row = false;
    for (i, line) in reader.lines().enumerate() {
        let row = i + 1;
        let line = line.map_err(|e| Error::Parse(format!("row {row}: {e}")))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = if line.contains(',') {
            line.split(',').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        let parsed: Option<Vec<f64>> = fields.iter().map(|f| f.parse().ok()).collect();
        let first = !seen_row;
        seen_row = true;
        match parsed {
            Some(v) if v.len() == 2 => {
                for value in &v {
                    if !(value.is_finite() && *value > 0.0) {
                        return Err(Error::Parse(format!(
                            "row {row}: value {value} is not strictly positive and finite"
                        )));
                    }
                }
                out.push((v[0], v[1]));
            }
            None if first && fields.len() == 2 => {} // header
            _ => return Err(Error::Parse(format!("row {row}: expected two numeric columns"))),
        }
    }
    Ok(out)
}

fn exit_for(verdicts: impl IntoIterator<Item = Verdict>) -> i32 {
    if verdicts.into_iter().any(Verdict::is_violation) {
        EXIT_VIOLATED
    } else {
        EXIT_OK
    }
}

fn json<T: Serialize + ?Sized>(out: &mut dyn Write, v: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

/// Left-aligned header, right-aligned cells.
fn table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line: Vec<String> = header
        .iter()
        .zip(&widths)
        .map(|(h, w)| format!("{h:>w$}"))
        .collect();
    writeln!(out, "{}", line.join("  ")).map_err(io_err)?;
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", line.join("  ")).map_err(io_err)?;
    }
    Ok(())
}

fn report_cells(r: &InequalityReport) -> Vec<String> {
    vec![
        r.p.to_string(),
        r.n.to_string(),
        format!("{:.15e}", r.lhs),
        format!("{:.15e}", r.rhs),
        format!("{:.6e}", r.gap),
        r.verdict.to_string(),
    ]
}

const REPORT_HEADER: [&str; 6] = ["p", "n", "lhs", "rhs", "gap", "verdict"];

fn emit_reports(out: &mut dyn Write, format: Format, reports: &[InequalityReport], single: bool) -> Result<()> {
    match format {
        Format::Json if single => json(out, &reports[0]),
        Format::Json => json(out, reports),
        Format::Table => {
            let rows: Vec<_> = reports.iter().map(report_cells).collect();
            table(out, &REPORT_HEADER, &rows)
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    p: Exponent,
    n: usize,
    kind: &'static str,
    value: f64,
}

#[derive(Serialize)]
struct RearrangeOutput {
    n: usize,
    min_sum: f64,
    max_sum: f64,
    /// 1-based: position k of `a` is paired with `b[min_perm[k]]`.
    min_perm: Vec<usize>,
    max_perm: Vec<usize>,
}

#[derive(Serialize)]
struct StreamOutput {
    p: Exponent,
    prefixes: usize,
    holds_strict: usize,
    near_equality: usize,
    equality_n1: usize,
    violated: usize,
    first_violation: Option<usize>,
    #[serde(rename = "final")]
    last: StreamCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    every: Option<Vec<StreamCheck>>,
}

fn pair_from(a: &str, b: &str) -> Result<PairedTuples> {
    PairedTuples::new(parse_tuple(a)?, parse_tuple(b)?)
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let tol = cli.tolerance;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be finite and >= 0, got {tol}")));
    }
    let fmt = cli.format;
    match cli.command {
        Command::Eval { a, b, p } => {
            let p: Exponent = p.parse()?;
            let a = parse_tuple(&a)?;
            let (kind, value, n) = match b {
                Some(b) => {
                    let pair = PairedTuples::new(a, parse_tuple(&b)?)?;
                    ("quotient", lhs_quotient(&pair, p)?, pair.len())
                }
                None => ("holder", holder_functional(&a, p)?, a.len()),
            };
            let o = EvalOutput { p, n, kind, value };
            match fmt {
                Format::Json => json(out, &o)?,
                Format::Table => table(
                    out,
                    &["p", "n", "kind", "value"],
                    &[vec![p.to_string(), n.to_string(), kind.into(), format!("{value:.15e}")]],
                )?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { a, b, p } => {
            let pair = pair_from(&a, &b)?;
            let r = check_main_inequality_with(&pair, p.parse()?, tol)?;
            emit_reports(out, fmt, &[r], true)?;
            Ok(exit_for([r.verdict]))
        }
        Command::Scan { a, b, grid } => {
            let pair = pair_from(&a, &b)?;
            let grid = match grid {
                Some(g) => parse_exponents(&g)?,
                None => standard_grid(),
            };
            let curve = gap_curve(&pair, &grid, tol)?;
            emit_reports(out, fmt, &curve.reports, false)?;
            Ok(exit_for(curve.reports.iter().map(|r| r.verdict)))
        }
        Command::Rearrange { a, b } => {
            let pair = pair_from(&a, &b)?;
            let r = extremal_ratio_sums(&pair)?;
            let o = RearrangeOutput {
                n: pair.len(),
                min_sum: r.min_sum,
                max_sum: r.max_sum,
                min_perm: r.min_perm.iter().map(|i| i + 1).collect(),
                max_perm: r.max_perm.iter().map(|i| i + 1).collect(),
            };
            match fmt {
                Format::Json => json(out, &o)?,
                Format::Table => {
                    let perm = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    table(
                        out,
                        &["bound", "sum", "permutation"],
                        &[
                            vec!["min".into(), format!("{:.15e}", o.min_sum), perm(&o.min_perm)],
                            vec!["max".into(), format!("{:.15e}", o.max_sum), perm(&o.max_perm)],
                        ],
                    )?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Stream { p, input, every } => {
            let p: Exponent = p.parse()?;
            let pairs = match input {
                Some(path) => {
                    let f = File::open(&path)
                        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                    read_pairs(BufReader::new(f))?
                }
                None => read_pairs(stdin)?,
            };
            if pairs.is_empty() {
                return Err(Error::EmptyStream);
            }
            let mut acc = RatioStreamAccumulator::with_tolerance(p, tol)?;
            let mut all = Vec::new();
            let (mut hs, mut ne, mut eq, mut vi) = (0, 0, 0, 0);
            let mut first_violation = None;
            let mut last = None;
            for (a, b) in pairs {
                acc.push(a, b)?;
                let c = acc.prefix_check()?;
                match c.report.verdict {
                    Verdict::HoldsStrict => hs += 1,
                    Verdict::NearEquality => ne += 1,
                    Verdict::EqualityN1 => eq += 1,
                    Verdict::Violated => {
                        vi += 1;
                        first_violation.get_or_insert(acc.count());
                    }
                }
                if every {
                    all.push(c);
                }
                last = Some(c);
            }
            let last = last.expect("nonempty stream");
            let o = StreamOutput {
                p,
                prefixes: acc.count(),
                holds_strict: hs,
                near_equality: ne,
                equality_n1: eq,
                violated: vi,
                first_violation,
                last,
                every: every.then_some(all),
            };
            match fmt {
                Format::Json => json(out, &o)?,
                Format::Table => {
                    let checks = o.every.clone().unwrap_or_else(|| vec![o.last]);
                    let rows: Vec<Vec<String>> = checks
                        .iter()
                        .map(|c| {
                            let mut cells = report_cells(&c.report);
                            cells.push(format!("{:.15e}", c.log_lhs));
                            cells.push(format!("{:.15e}", c.log_rhs));
                            cells
                        })
                        .collect();
                    table(out, &["p", "n", "lhs", "rhs", "gap", "verdict", "log_lhs", "log_rhs"], &rows)?;
                }
            }
            Ok(if vi > 0 { EXIT_VIOLATED } else { EXIT_OK })
        }
        Command::Sharpness { n, grid, max_k } => {
            let grid = match grid {
                Some(g) => parse_values(&g)?,
                None => doubling_grid(max_k),
            };
            let rows = sharpness_table(n, &grid, tol)?;
            let reports: Vec<_> = rows.iter().map(|r| r.report).collect();
            match fmt {
                Format::Json => json(out, &rows)?,
                Format::Table => emit_reports(out, fmt, &reports, false)?,
            }
            Ok(exit_for(reports.iter().map(|r| r.verdict)))
        }
        Command::Examples { variant, n, k, p } => {
            let rows = example_family_table(n, variant, parse_k_range(&k)?, p.parse()?, tol)?;
            match fmt {
                Format::Json => json(out, &rows)?,
                Format::Table => {
                    let cells: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            let mut c = vec![r.k.to_string()];
                            c.extend(report_cells(&r.report));
                            c
                        })
                        .collect();
                    table(out, &["K", "p", "n", "lhs", "rhs", "gap", "verdict"], &cells)?;
                }
            }
            Ok(exit_for(rows.iter().map(|r| r.report.verdict)))
        }
        Command::Verify { seed, cases } => {
            let cfg = CampaignConfig { seed, cases, tolerance: tol, ..Default::default() };
            let s = run_campaign(&cfg)?;
            match fmt {
                Format::Json => json(out, &s)?,
                Format::Table => table(
                    out,
                    &["seed", "cases", "evaluations", "strict", "near", "violated", "worst_arr", "chain", "max_merge"],
                    &[vec![
                        s.seed.to_string(),
                        s.cases.to_string(),
                        s.evaluations.to_string(),
                        s.holds_strict.to_string(),
                        s.near_equality.to_string(),
                        s.violated.to_string(),
                        s.worst_arrangement_violations.to_string(),
                        s.chain_violations.to_string(),
                        format!("{:.3e}", s.max_merge_residual),
                    ]],
                )?,
            }
            Ok(if s.any_violation() { EXIT_VIOLATED } else { EXIT_OK })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
