//! Command-line front end.
//!
//! Subcommands: `verify`, `scan`, `wn`, `rank`, `fib`, `kw`, `qcheck`,
//! `qscan`. Exit codes: 0 when everything verified, 1 when some congruence
//! failed, 2 for usage, I/O or degenerate-input errors.

pub mod render;
pub mod scan;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::arith::Integer;
use crate::congruence::{
    verify_corollary_fib, verify_kimball_webb, verify_theorem, CongruenceReport, Verdict,
};
use crate::error::Error;
use crate::lucas::{rank_of_apparition, LucasParams};
use crate::primitive::{coprimality_report, homogeneous_cyclotomic, primitive_part};
use crate::qpoly::q_certificate;
use render::{q_record, report_record, Emitter, Field, Format, Record};
use scan::{scan_theorem, ScanSpec, ScanSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lucas-wolstenholme",
    version,
    about = "Verify Wolstenholme-type congruences for Lucas sequences"
)]
struct Cli {
    /// Emit comma-separated rows instead of JSON lines
    #[arg(long, global = true)]
    csv: bool,

    /// Write records to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ParamArgs {
    #[arg(long = "A", allow_negative_numbers = true)]
    a: Integer,
    #[arg(long = "B", allow_negative_numbers = true)]
    b: Integer,
}

impl ParamArgs {
    fn params(&self) -> Result<LucasParams, Error> {
        LucasParams::new(self.a.clone(), self.b.clone())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the congruence modulo w_n² for one (A, B, n)
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u64,
    },
    /// Check the congruence over a box of (A, B, n)
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        a_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        a_max: i64,
        #[arg(long, allow_negative_numbers = true)]
        b_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        b_max: i64,
        #[arg(long, default_value_t = 5)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Primitive part w_n of u_n and its coprimality facts
    Wn {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u64,
    },
    /// Rank of apparition of a prime p
    Rank {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        p: u64,
    },
    /// Fibonacci/Lucas congruence modulo p²
    Fib {
        #[arg(long)]
        p: u64,
    },
    /// Kimball-Webb congruence modulo p²
    Kw {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        p: u64,
    },
    /// Certificate G(q) for one n
    Qcheck {
        #[arg(long)]
        n: u64,
    },
    /// Certificates G(q) for n = n-min..=n-max
    Qscan {
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
}

/// Exit code for a single report.
pub fn exit_code_for(report: &CongruenceReport) -> i32 {
    match report.verdict() {
        Verdict::Holds | Verdict::TrivialHold | Verdict::NotApplicable => EXIT_OK,
        Verdict::Violated | Verdict::FailedOutsideHypothesis => EXIT_FAILED,
        Verdict::Degenerate | Verdict::Undefined => EXIT_ERROR,
    }
}

pub fn summary_record(s: &ScanSummary) -> Record {
    Record::new(vec![
        ("kind", Field::Str("summary".into())),
        ("total", Field::Count(s.total)),
        ("holds", Field::Count(s.holds)),
        ("trivial", Field::Count(s.trivial)),
        ("degenerate", Field::Count(s.degenerate)),
        ("violations", Field::Count(s.violations)),
        ("undefined", Field::Count(s.undefined)),
        (
            "failed_outside_hypothesis",
            Field::Count(s.failed_outside_hypothesis),
        ),
        ("not_applicable", Field::Count(s.not_applicable)),
    ])
}

enum Failure {
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = if cli.csv {
        Format::Csv
    } else {
        Format::JsonLines
    };
    let sink: Box<dyn Write + '_> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot create {}: {e}", path.display());
                return EXIT_ERROR;
            }
        },
        None => Box::new(stdout),
    };
    let mut emitter = Emitter::new(sink, format);
    let result = dispatch(cli.command, &mut emitter, stderr).and_then(|code| {
        emitter.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit_report<W: Write>(
    emitter: &mut Emitter<W>,
    report: &CongruenceReport,
) -> Result<i32, Failure> {
    emitter.emit(&report_record(report))?;
    Ok(exit_code_for(report))
}

fn dispatch<W: Write>(
    command: Command,
    emitter: &mut Emitter<W>,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Verify { params, n } => {
            let params = params.params()?;
            if n == 0 {
                return Err(Error::InvalidArgument("n must be >= 1".into()).into());
            }
            emit_report(emitter, &verify_theorem(&params, n))
        }
        Command::Scan {
            a_min,
            a_max,
            b_min,
            b_max,
            n_min,
            n_max,
            jobs,
        } => {
            let spec = ScanSpec::new(a_min..=a_max, b_min..=b_max, n_min..=n_max).with_jobs(jobs);
            let (reports, summary) = scan_theorem(&spec)?;
            for r in &reports {
                emitter.emit(&report_record(r))?;
            }
            emit_summary(emitter, &summary, stderr)?;
            Ok(if summary.violations == 0 {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Wn { params, n } => {
            let params = params.params()?;
            let pp = primitive_part(&params, n)?;
            let flags = coprimality_report(&params, n)?;
            let phi = if n >= 2 {
                homogeneous_cyclotomic(&params, n).ok()
            } else {
                None
            };
            emitter.emit(&Record::new(vec![
                ("A", Field::Str(params.a().to_string())),
                ("B", Field::Str(params.b().to_string())),
                ("n", Field::Str(n.to_string())),
                ("w", Field::Str(pp.w.to_string())),
                ("trivial", Field::Bool(pp.trivial)),
                (
                    "phi",
                    phi.map_or(Field::Null, |v| Field::Str(v.to_string())),
                ),
                ("coprime_2", Field::Bool(flags.coprime_to_2)),
                ("coprime_3", Field::Bool(flags.coprime_to_3)),
                ("coprime_B", Field::Bool(flags.coprime_to_b)),
                ("coprime_v", Field::Bool(flags.coprime_to_v_n)),
            ]))?;
            Ok(EXIT_OK)
        }
        Command::Rank { params, p } => {
            let params = params.params()?;
            let rank = rank_of_apparition(&params, p)?;
            emitter.emit(&Record::new(vec![
                ("A", Field::Str(params.a().to_string())),
                ("B", Field::Str(params.b().to_string())),
                ("p", Field::Str(p.to_string())),
                (
                    "rank",
                    rank.map_or(Field::Null, |r| Field::Str(r.to_string())),
                ),
            ]))?;
            Ok(EXIT_OK)
        }
        Command::Fib { p } => emit_report(emitter, &verify_corollary_fib(p)?),
        Command::Kw { params, p } => {
            emit_report(emitter, &verify_kimball_webb(&params.params()?, p)?)
        }
        Command::Qcheck { n } => {
            if n == 0 {
                return Err(Error::InvalidArgument("n must be >= 1".into()).into());
            }
            let outcome = q_certificate(n);
            emitter.emit(&q_record(n, &outcome))?;
            Ok(if outcome.is_ok() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Qscan { n_min, n_max } => {
            if n_min == 0 || n_min > n_max {
                return Err(Error::InvalidArgument("need 1 <= n-min <= n-max".into()).into());
            }
            let mut summary = ScanSummary::default();
            for n in n_min..=n_max {
                let outcome = q_certificate(n);
                summary.total += 1;
                match &outcome {
                    Ok(_) => summary.holds += 1,
                    Err(Error::CongruenceFails { .. }) => summary.violations += 1,
                    Err(e) => return Err(e.clone().into()),
                }
                emitter.emit(&q_record(n, &outcome))?;
            }
            emit_summary(emitter, &summary, stderr)?;
            Ok(if summary.violations == 0 {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

/// JSON output appends the summary as a final line; CSV output sends it to
/// the error stream so the table stays rectangular.
fn emit_summary<W: Write>(
    emitter: &mut Emitter<W>,
    summary: &ScanSummary,
    stderr: &mut dyn Write,
) -> io::Result<()> {
    let record = summary_record(summary);
    match emitter.format() {
        Format::JsonLines => emitter.emit(&record),
        Format::Csv => writeln!(stderr, "{}", record.to_json_line()),
    }
}
