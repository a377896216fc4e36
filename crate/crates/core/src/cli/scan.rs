//! Parameter-space sweeps of the generalized congruence.
//!
//! Work is split over `(A, B)` cells so each worker builds one sequence table
//! and reuses it for every `n`. Results come back in canonical
//! lexicographic `(A, B, n)` order whatever the worker count.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::congruence::{verify_theorem_table, CongruenceReport, Verdict};
use crate::error::{Error, Result};
use crate::lucas::{lucas_table, LucasParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSpec {
    pub a_range: RangeInclusive<i64>,
    pub b_range: RangeInclusive<i64>,
    pub n_range: RangeInclusive<u64>,
    pub jobs: usize,
}

impl ScanSpec {
    pub fn new(
        a_range: RangeInclusive<i64>,
        b_range: RangeInclusive<i64>,
        n_range: RangeInclusive<u64>,
    ) -> Self {
        Self {
            a_range,
            b_range,
            n_range,
            jobs: 1,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() {
            return Err(Error::InvalidArgument("empty n range".into()));
        }
        if *self.n_range.start() < 1 {
            return Err(Error::InvalidArgument(
                "n range must start at 1 or above".into(),
            ));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be positive".into()));
        }
        if self.cells().is_empty() {
            return Err(Error::InvalidArgument(
                "A and B ranges must each contain a nonzero value".into(),
            ));
        }
        Ok(())
    }

    /// Nonzero `(A, B)` pairs in ascending lexicographic order.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let bs: Vec<i64> = self.b_range.clone().filter(|&b| b != 0).collect();
        self.a_range
            .clone()
            .filter(|&a| a != 0)
            .flat_map(|a| bs.iter().map(move |&b| (a, b)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: u64,
    /// Nontrivial holds (modulus > 1).
    pub holds: u64,
    pub trivial: u64,
    pub degenerate: u64,
    pub violations: u64,
    pub undefined: u64,
    pub failed_outside_hypothesis: u64,
    pub not_applicable: u64,
}

impl ScanSummary {
    pub fn record(&mut self, report: &CongruenceReport) {
        self.total += 1;
        match report.verdict() {
            Verdict::Holds => self.holds += 1,
            Verdict::TrivialHold => self.trivial += 1,
            Verdict::Degenerate => self.degenerate += 1,
            Verdict::Violated => self.violations += 1,
            Verdict::Undefined => self.undefined += 1,
            Verdict::FailedOutsideHypothesis => self.failed_outside_hypothesis += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }

    pub fn of<'a>(reports: impl IntoIterator<Item = &'a CongruenceReport>) -> Self {
        let mut summary = Self::default();
        for r in reports {
            summary.record(r);
        }
        summary
    }
}

fn scan_cell(a: i64, b: i64, n_range: &RangeInclusive<u64>) -> Vec<CongruenceReport> {
    let params = LucasParams::new(a, b).expect("cells exclude zero");
    let table = lucas_table(&params, *n_range.end());
    n_range
        .clone()
        .map(|n| verify_theorem_table(&table, n))
        .collect()
}

/// Runs the sweep on a pool of `spec.jobs` workers.
pub fn scan_theorem(spec: &ScanSpec) -> Result<(Vec<CongruenceReport>, ScanSummary)> {
    spec.validate()?;
    let cells = spec.cells();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let per_cell: Vec<Vec<CongruenceReport>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(a, b)| scan_cell(a, b, &spec.n_range))
            .collect()
    });
    let reports: Vec<CongruenceReport> = per_cell.into_iter().flatten().collect();
    let summary = ScanSummary::of(&reports);
    Ok((reports, summary))
}
