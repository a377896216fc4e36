//! A parallel sweep of the congruence over a box of (A, B, n), emitted as
//! JSON lines.
//!
//! cargo run --release --example parameter_scan

use std::io::{self, Write};

use lucas_wolstenholme::cli::render::{report_record, Emitter, Format};
use lucas_wolstenholme::cli::scan::{scan_theorem, ScanSpec};
use lucas_wolstenholme::cli::summary_record;
use lucas_wolstenholme::congruence::Verdict;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let spec = ScanSpec::new(-6..=6, -6..=6, 5..=80).with_jobs(jobs);
    let (reports, summary) = scan_theorem(&spec)?;

    let stdout = io::stdout();
    let mut out = Emitter::new(stdout.lock(), Format::JsonLines);
    // the largest moduli make the most interesting lines
    let mut nontrivial: Vec<_> = reports
        .iter()
        .filter(|r| r.verdict() == Verdict::Holds)
        .collect();
    nontrivial.sort_by_key(|r| std::cmp::Reverse(r.modulus.as_ref().map(|m| m.bits())));
    for r in nontrivial.iter().take(3) {
        out.emit(&report_record(r))?;
    }
    out.emit(&summary_record(&summary))?;
    out.flush()?;
    writeln!(io::stderr(), "{} workers, {} cells", jobs, summary.total)?;
    Ok(())
}
