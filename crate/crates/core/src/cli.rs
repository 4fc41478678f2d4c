//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or decode failure, 2 usage error.
//! Data goes to stdout, diagnostics to stderr.

use crate::congruence::{
    bezout_table_formula, extended_gcd_pow, verify_link, LinkOutcome, LinkReport,
};
use crate::fixed_points::{generate_sequence, FixedPointRecord};
use crate::frac_base::{append_suffix, decode, encode, Base, Expansion};
use crate::josephus::{
    self, fixed_points_up_to, j2_rotate, survivor_recurrence, survivor_simulate,
};
use crate::reference::{table2, TABLE3};
use crate::{Error, Natural};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::HashSet;
use std::ffi::OsString;
use std::io::{self, Write};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "josephus",
    version,
    about = "Josephus survivors, J3 fixed points and base-3/2 expansions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Explicit elimination on a ring of seats.
    Sim,
    /// Linear-time recurrence.
    Recurrence,
    /// Binary digit rotation; k must be 2.
    Rotate2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Theorem,
    Crt,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Seat of the survivor when every k-th of n people is eliminated.
    Survivor {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// The fixed-point sequence of J3 with valuations and base-3/2 expansions.
    FixedPoints {
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Omit the expansion column.
        #[arg(long)]
        no_expansion: bool,
        /// Confirm with the survivor recurrence that every listed value up to
        /// this bound is a fixed point of J3.
        #[arg(long)]
        verify_bound: Option<u64>,
    },
    /// Canonical expansion of a natural number.
    Encode {
        n: Natural,
        #[arg(long, default_value = "3/2")]
        base: String,
    },
    /// Value of a digit string; rejects strings no number encodes to.
    Decode {
        digits: String,
        #[arg(long, default_value = "3/2")]
        base: String,
    },
    /// Reproduce the published tables and check the structural results.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        ell_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                CliError::Lib(Error::InvalidExpansion { .. }) => EXIT_FAILURE,
                CliError::Io(_) => EXIT_FAILURE,
                CliError::Lib(_) => EXIT_USAGE,
            };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<u8> {
    match command {
        Command::Survivor { n, k, method } => cmd_survivor(n, k, method, out),
        Command::FixedPoints {
            count,
            format,
            no_expansion,
            verify_bound,
        } => cmd_fixed_points(count, format, !no_expansion, verify_bound, out, err),
        Command::Encode { n, base } => {
            let base: Base = base.parse()?;
            writeln!(out, "{}", encode(&n, base))?;
            Ok(EXIT_OK)
        }
        Command::Decode { digits, base } => {
            let base: Base = base.parse()?;
            let expansion = Expansion::parse(&digits, base)?;
            writeln!(out, "{}", decode(&expansion)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            ell_max,
            format,
        } => cmd_verify(suite, ell_max, format, out, err),
    }
}

fn cmd_survivor(n: u64, k: u32, method: Method, out: &mut dyn Write) -> CliResult<u8> {
    let survivor = match method {
        Method::Sim => survivor_simulate(n, k)?,
        Method::Recurrence => survivor_recurrence(n, k)?,
        Method::Rotate2 => {
            if k != 2 {
                return Err(Error::Usage(format!("--method rotate2 needs --k 2, got {k}")).into());
            }
            let rotated = j2_rotate(&Natural::from(n))?;
            writeln!(out, "{rotated}")?;
            return Ok(EXIT_OK);
        }
    };
    writeln!(out, "{survivor}")?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RecordNoExpansion {
    ell: u64,
    n: String,
    m_bar: u64,
}

fn write_records(
    records: &[FixedPointRecord],
    format: OutputFormat,
    with_expansion: bool,
    out: &mut dyn Write,
) -> CliResult<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(
                out,
                "{}",
                if with_expansion {
                    "ell,n,m_bar,expansion"
                } else {
                    "ell,n,m_bar"
                }
            )?;
            for r in records {
                if with_expansion {
                    writeln!(out, "{},{},{},{}", r.ell, r.n, r.m_bar, r.expansion)?;
                } else {
                    writeln!(out, "{},{},{}", r.ell, r.n, r.m_bar)?;
                }
            }
        }
        OutputFormat::Json => {
            for r in records {
                let line = if with_expansion {
                    serde_json::to_string(r)
                } else {
                    serde_json::to_string(&RecordNoExpansion {
                        ell: r.ell,
                        n: r.n.to_string(),
                        m_bar: r.m_bar,
                    })
                }
                .map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Text => {
            let width = records.last().map_or(1, |r| r.n.to_string().len()).max(1);
            for r in records {
                write!(out, "{:>4}  {:>width$}  {:>3}", r.ell, r.n, r.m_bar)?;
                if with_expansion {
                    write!(out, "  ({})_3/2", r.expansion)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn cmd_fixed_points(
    count: usize,
    format: OutputFormat,
    with_expansion: bool,
    verify_bound: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<u8> {
    let records = generate_sequence(count)?;
    write_records(&records, format, with_expansion, out)?;

    let Some(bound) = verify_bound else {
        return Ok(EXIT_OK);
    };
    if bound > josephus::RECURRENCE_MAX_N {
        return Err(Error::Usage(format!(
            "--verify-bound {bound} exceeds the recurrence limit {}",
            josephus::RECURRENCE_MAX_N
        ))
        .into());
    }
    let bound_nat = Natural::from(bound);
    let candidates: Vec<&FixedPointRecord> = records.iter().filter(|r| r.n <= bound_nat).collect();
    let scan_to = candidates.iter().map(|r| to_u64(&r.n)).max().unwrap_or(0);
    let fixed: HashSet<u64> = fixed_points_up_to(scan_to, 3)?.into_iter().collect();
    let mut failures = 0;
    for r in &candidates {
        if !fixed.contains(&to_u64(&r.n)) {
            failures += 1;
            writeln!(
                err,
                "FAIL ell={} n={} is not a fixed point of J3",
                r.ell, r.n
            )?;
        }
    }
    writeln!(
        err,
        "verified {}/{} listed values <= {bound} are fixed points of J3",
        candidates.len() - failures,
        candidates.len()
    )?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn to_u64(n: &Natural) -> u64 {
    u64::try_from(n).expect("value already bounded by a u64")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of a verification report.
struct CheckLine {
    check: &'static str,
    key: String,
    status: Status,
    detail: String,
    json: String,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    check: &'a str,
    key: &'a str,
    pass: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct LinkJson {
    ell: u64,
    p: u64,
    q: u64,
    a1: String,
    a2: String,
    z: String,
    modulus: String,
    pass: bool,
    quotient: String,
}

#[derive(Serialize)]
struct SkippedLinkJson {
    ell: u64,
    p: u64,
    q: u64,
    skipped: bool,
}

impl CheckLine {
    fn new(check: &'static str, key: String, pass: bool, detail: String) -> Self {
        let json = serde_json::to_string(&CheckJson {
            check,
            key: &key,
            pass,
            detail: &detail,
        })
        .expect("plain struct serializes");
        CheckLine {
            check,
            key,
            status: if pass { Status::Pass } else { Status::Fail },
            detail,
            json,
        }
    }

    fn from_link(report: &LinkReport) -> Self {
        let key = format!("ell={}", report.ell);
        match &report.outcome {
            LinkOutcome::NotApplicable => CheckLine {
                check: "crt-link",
                key,
                status: Status::Skip,
                detail: format!("p={} q={} (pq = 0)", report.p, report.q),
                json: serde_json::to_string(&SkippedLinkJson {
                    ell: report.ell,
                    p: report.p,
                    q: report.q,
                    skipped: true,
                })
                .expect("plain struct serializes"),
            },
            LinkOutcome::Checked(check) => {
                let link = &check.link;
                let pass = check.passed();
                CheckLine {
                    check: "crt-link",
                    key,
                    status: if pass { Status::Pass } else { Status::Fail },
                    detail: format!(
                        "p={} q={} a1={} a2={} z={} modulus={} quotient={}",
                        link.p, link.q, link.a1, link.a2, link.z, link.modulus, check.quotient
                    ),
                    json: serde_json::to_string(&LinkJson {
                        ell: report.ell,
                        p: report.p,
                        q: report.q,
                        a1: link.a1.to_string(),
                        a2: link.a2.to_string(),
                        z: link.z.to_string(),
                        modulus: link.modulus.to_string(),
                        pass,
                        quotient: check.quotient.to_string(),
                    })
                    .expect("plain struct serializes"),
                }
            }
        }
    }
}

fn table_checks() -> Vec<CheckLine> {
    let expected = table2();
    let generated = generate_sequence(expected.len()).expect("table is non-empty");
    let mut lines: Vec<CheckLine> = expected
        .iter()
        .zip(&generated)
        .map(|(want, got)| {
            let pass = want.ell == got.ell
                && want.n == got.n.to_string()
                && want.m_bar == got.m_bar
                && want.expansion == got.expansion.to_string();
            let detail = format!(
                "n={} m_bar={} expansion={}",
                got.n, got.m_bar, got.expansion
            );
            CheckLine::new("table2", format!("ell={}", want.ell), pass, detail)
        })
        .collect();

    lines.extend(TABLE3.iter().map(|&(ell, n, binary)| {
        let value = Natural::from(n);
        let expansion = encode(&value, Base::BINARY).to_string();
        let fixed = josephus::is_fixed_point(n, 2).unwrap_or(false);
        let rotated = j2_rotate(&value).map(|r| r == value).unwrap_or(false);
        let pass = n == (1u64 << ell) - 1
            && fixed
            && rotated
            && expansion == binary
            && expansion.len() == ell as usize;
        CheckLine::new(
            "table3",
            format!("ell={ell}"),
            pass,
            format!("n={n} expansion={expansion}"),
        )
    }));
    lines
}

fn theorem_checks(ell_max: u64) -> Vec<CheckLine> {
    let records = generate_sequence(ell_max as usize).expect("ell_max >= 2");
    records
        .windows(2)
        .map(|pair| {
            let (cur, nxt) = (&pair[0], &pair[1]);
            let predicted = append_suffix(&cur.expansion, cur.m_bar);
            let grows = nxt.expansion.len() as u64 == cur.expansion.len() as u64 + cur.m_bar + 1;
            let pass = predicted == nxt.expansion && grows;
            CheckLine::new(
                "theorem",
                format!("ell={}", cur.ell),
                pass,
                format!(
                    "m_bar={} digits {} -> {}",
                    cur.m_bar,
                    cur.expansion.len(),
                    nxt.expansion.len()
                ),
            )
        })
        .collect()
}

fn crt_checks(ell_max: u64) -> Vec<CheckLine> {
    let mut lines = Vec::new();
    for q in 1..=5u32 {
        for p in 1..=64u32 {
            let pass = match (bezout_table_formula(p, q), extended_gcd_pow(p, q)) {
                (Ok(table), Ok(euclid)) => table.holds() && table.same_lattice_class(&euclid),
                _ => false,
            };
            lines.push(CheckLine::new(
                "table1",
                format!("p={p} q={q}"),
                pass,
                String::new(),
            ));
        }
    }
    let records = generate_sequence(ell_max as usize).expect("ell_max >= 3");
    for ell in 1..ell_max {
        match verify_link(ell, &records) {
            Ok(report) => lines.push(CheckLine::from_link(&report)),
            Err(e) => lines.push(CheckLine::new(
                "crt-link",
                format!("ell={ell}"),
                false,
                e.to_string(),
            )),
        }
    }
    lines
}

fn cmd_verify(
    suite: Suite,
    ell_max: u64,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<u8> {
    let needs_ell = matches!(suite, Suite::Theorem | Suite::Crt | Suite::All);
    if needs_ell && ell_max < 3 {
        return Err(Error::Usage(format!("--ell-max must be at least 3, got {ell_max}")).into());
    }

    let mut lines = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        lines.extend(table_checks());
    }
    if matches!(suite, Suite::Theorem | Suite::All) {
        lines.extend(theorem_checks(ell_max));
    }
    if matches!(suite, Suite::Crt | Suite::All) {
        lines.extend(crt_checks(ell_max));
    }

    if format == OutputFormat::Csv {
        writeln!(out, "check,key,status,detail")?;
    }
    for line in &lines {
        match format {
            OutputFormat::Text => {
                let tag = match line.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                writeln!(out, "{tag} {} {} {}", line.check, line.key, line.detail)?;
            }
            OutputFormat::Json => writeln!(out, "{}", line.json)?,
            OutputFormat::Csv => {
                let status = match line.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skip => "skip",
                };
                writeln!(
                    out,
                    "{},{},{},{}",
                    line.check, line.key, status, line.detail
                )?;
            }
        }
    }

    // Summary per check kind, in first-seen order.
    let mut kinds: Vec<&'static str> = Vec::new();
    for line in &lines {
        if !kinds.contains(&line.check) {
            kinds.push(line.check);
        }
    }
    let summary: &mut dyn Write = if format == OutputFormat::Text {
        out
    } else {
        err
    };
    let mut failed = 0;
    for kind in kinds {
        let of_kind = lines.iter().filter(|l| l.check == kind);
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for l in of_kind {
            match l.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Skip => skip += 1,
            }
        }
        failed += fail;
        write!(summary, "{kind}: {pass}/{} passed", pass + fail)?;
        if skip > 0 {
            write!(summary, ", {skip} skipped")?;
        }
        writeln!(summary)?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}
