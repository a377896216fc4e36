//! Both sides of the Lucas-sequence harmonic congruences, evaluated exactly
//! and modularly, and the verification reports built from them.
//!
//! The central statement, for `n >= 5`:
//!
//! ```text
//! Σ_{j=1}^{n-1} v_j / u_j  ≡  (n² - 1) Δ / 6 · u_n / v_n   (mod w_n²)
//! ```
//!
//! It is checked directly modulo `w_n²`. By the Chinese remainder theorem
//! this is the same as checking it modulo every prime power `p^{2m}` exactly
//! dividing `w_n²`, so `w_n` never needs to be factored.
//!
//! Residues come from modular accumulation. [`exact_sides`] computes the
//! same quantities as reduced rationals and serves as an independent oracle.
//!
//! Also covered: the Fibonacci specialization modulo `p²` with `n` the rank
//! of apparition of `p`, the Kimball–Webb congruence
//! `Σ_{j<r} v_j/u_j ≡ 0 (mod p²)` under its premise (`Δ = 0` or `r = p ± 1`),
//! and Wolstenholme's `H_{p-1} ≡ 0 (mod p²)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::lucas::{lucas_table, rank_of_apparition, LucasParams, LucasTable};
use crate::primitive::primitive_part_from_table;

/// Smallest `n` covered by the generalized congruence.
pub const THEOREM_MIN_N: u64 = 5;
/// Smallest prime covered by the prime-modulus congruences.
pub const PRIME_MIN: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CongruenceKind {
    Theorem,
    Corollary,
    KimballWebb,
    Wolstenholme,
}

impl CongruenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CongruenceKind::Theorem => "theorem",
            CongruenceKind::Corollary => "corollary",
            CongruenceKind::KimballWebb => "kimball-webb",
            CongruenceKind::Wolstenholme => "wolstenholme",
        }
    }
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a report should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    /// Modulus 1.
    TrivialHold,
    /// Failed inside the stated hypotheses: a counterexample.
    Violated,
    /// Failed where nothing is claimed (`n < 5`, `p < 5`, premise false).
    FailedOutsideHypothesis,
    /// `u_n = 0` or a needed term vanished.
    Degenerate,
    /// Premise fails and there is nothing to evaluate.
    NotApplicable,
    /// A residue could not be formed (a required inverse does not exist).
    Undefined,
}

/// One verification outcome. Residues are canonical, in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub kind: CongruenceKind,
    /// `None` for plain harmonic sums.
    pub a: Option<Integer>,
    pub b: Option<Integer>,
    pub n: u64,
    /// The prime of the prime-modulus congruences.
    pub p: Option<u64>,
    pub w: Option<Integer>,
    pub modulus: Option<Integer>,
    pub lhs_residue: Option<Integer>,
    pub rhs_residue: Option<Integer>,
    pub holds: bool,
    pub trivial: bool,
    pub degenerate: bool,
    pub rank_used: Option<u64>,
    pub out_of_hypothesis: bool,
    /// `false` when a stated premise does not hold.
    pub applicable: bool,
    pub note: Option<String>,
}

impl CongruenceReport {
    fn blank(kind: CongruenceKind, params: Option<&LucasParams>, n: u64) -> Self {
        Self {
            kind,
            a: params.map(|p| p.a().clone()),
            b: params.map(|p| p.b().clone()),
            n,
            p: None,
            w: None,
            modulus: None,
            lhs_residue: None,
            rhs_residue: None,
            holds: false,
            trivial: false,
            degenerate: false,
            rank_used: None,
            out_of_hypothesis: false,
            applicable: true,
            note: None,
        }
    }

    fn set_residues(&mut self, lhs: Result<Integer>, rhs: Result<Integer>) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                self.holds = l == r;
                self.lhs_residue = Some(l);
                self.rhs_residue = Some(r);
            }
            (Err(e), _) | (_, Err(e)) => {
                self.holds = false;
                if matches!(e, Error::DegenerateSequence(_)) {
                    self.degenerate = true;
                }
                self.note = Some(e.to_string());
            }
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.degenerate {
            Verdict::Degenerate
        } else if self.trivial {
            Verdict::TrivialHold
        } else if self.holds {
            Verdict::Holds
        } else if self.lhs_residue.is_none() || self.rhs_residue.is_none() {
            if self.applicable {
                Verdict::Undefined
            } else {
                Verdict::NotApplicable
            }
        } else if self.out_of_hypothesis || !self.applicable {
            Verdict::FailedOutsideHypothesis
        } else {
            Verdict::Violated
        }
    }
}

fn require_modulus(m: &Integer) -> Result<()> {
    if m < &Integer::one() {
        return Err(Error::InvalidArgument(format!(
            "modulus must be >= 1, got {m}"
        )));
    }
    Ok(())
}

fn table_for(table: &LucasTable, n: u64) -> Result<()> {
    if n > table.max_index() {
        return Err(Error::InvalidArgument(format!(
            "index {n} exceeds table length {}",
            table.max_index()
        )));
    }
    Ok(())
}

pub fn lucas_harmonic_sum_mod(params: &LucasParams, n: u64, m: &Integer) -> Result<Integer> {
    lucas_harmonic_sum_mod_table(&lucas_table(params, n), n, m)
}

/// `Σ_{j=1}^{n-1} v_j · u_j^{-1} mod m`.
///
/// The sum is carried as a single fraction modulo `m` and inverted once;
/// on failure the first term whose `u_j` is not a unit is named.
pub fn lucas_harmonic_sum_mod_table(table: &LucasTable, n: u64, m: &Integer) -> Result<Integer> {
    require_modulus(m)?;
    table_for(table, n)?;
    if m.is_one() {
        return Ok(Integer::zero());
    }
    let mut num = Integer::zero();
    let mut den = Integer::one();
    for j in 1..n {
        let u_j = table.u(j);
        if u_j.is_zero() {
            return Err(Error::DegenerateSequence(format!(
                "u_{j} = 0 appears as a denominator"
            )));
        }
        num = arith::canonical_mod(&(num * u_j + table.v(j) * &den), m);
        den = arith::canonical_mod(&(den * u_j), m);
    }
    match arith::mod_inverse(&den, m) {
        Ok(inv) => Ok(arith::canonical_mod(&(num * inv), m)),
        Err(_) => {
            for j in 1..n {
                if arith::mod_inverse(table.u(j), m).is_err() {
                    return Err(Error::NotInvertible {
                        value: table.u(j).clone(),
                        modulus: m.clone(),
                        index: Some(j),
                    });
                }
            }
            unreachable!("product of units is a unit")
        }
    }
}

pub fn wolstenholme_rhs_mod(params: &LucasParams, n: u64, m: &Integer) -> Result<Integer> {
    wolstenholme_rhs_mod_table(&lucas_table(params, n), n, m)
}

/// `(n² - 1) Δ u_n · (6 v_n)^{-1} mod m`.
pub fn wolstenholme_rhs_mod_table(table: &LucasTable, n: u64, m: &Integer) -> Result<Integer> {
    require_modulus(m)?;
    table_for(table, n)?;
    let n_big = Integer::from(n);
    let numer = (&n_big * &n_big - 1u32) * table.params().delta() * table.u(n);
    let denom = 6 * table.v(n);
    let inv = arith::mod_inverse(&denom, m).map_err(|_| Error::NotInvertible {
        value: denom.clone(),
        modulus: m.clone(),
        index: None,
    })?;
    Ok(arith::canonical_mod(&(numer * inv), m))
}

/// Both sides as exact reduced rationals:
/// `(Σ_{j=1}^{n-1} v_j/u_j, (n²-1)Δ/6 · u_n/v_n)`.
pub fn exact_sides(params: &LucasParams, n: u64) -> Result<(Rational, Rational)> {
    let table = lucas_table(params, n);
    let mut lhs = Rational::zero();
    for j in 1..n {
        if table.u(j).is_zero() {
            return Err(Error::DegenerateSequence(format!("u_{j} = 0")));
        }
        lhs += Rational::new(table.v(j).clone(), table.u(j).clone());
    }
    if table.v(n).is_zero() {
        return Err(Error::DegenerateSequence(format!("v_{n} = 0")));
    }
    let n_big = Integer::from(n);
    let rhs = Rational::new(
        (&n_big * &n_big - 1u32) * params.delta() * table.u(n),
        6 * table.v(n),
    );
    Ok((lhs, rhs))
}

pub fn verify_theorem(params: &LucasParams, n: u64) -> CongruenceReport {
    verify_theorem_table(&lucas_table(params, n), n)
}

/// Checks the generalized congruence modulo `w_n²` using a prebuilt table
/// covering index `n`.
pub fn verify_theorem_table(table: &LucasTable, n: u64) -> CongruenceReport {
    let mut report = CongruenceReport::blank(CongruenceKind::Theorem, Some(table.params()), n);
    report.out_of_hypothesis = n < THEOREM_MIN_N;
    if n > table.max_index() {
        report.note = Some(format!("table only reaches index {}", table.max_index()));
        return report;
    }
    let w = match primitive_part_from_table(table, n) {
        Ok(pp) => pp.w,
        Err(e) => {
            report.degenerate = true;
            report.note = Some(e.to_string());
            return report;
        }
    };
    let modulus = &w * &w;
    report.w = Some(w);
    if modulus.is_one() {
        report.trivial = true;
        report.holds = true;
        report.lhs_residue = Some(Integer::zero());
        report.rhs_residue = Some(Integer::zero());
    } else {
        let lhs = lucas_harmonic_sum_mod_table(table, n, &modulus);
        let rhs = wolstenholme_rhs_mod_table(table, n, &modulus);
        report.set_residues(lhs, rhs);
    }
    report.modulus = Some(modulus);
    report
}

/// Fibonacci case modulo `p²` at the rank of apparition of `p`.
pub fn verify_corollary_fib(p: u64) -> Result<CongruenceReport> {
    arith::require_prime(p, PRIME_MIN)?;
    let params = LucasParams::fibonacci();
    let n = rank_of_apparition(&params, p)?.expect("p never divides B = -1");
    let table = lucas_table(&params, n);
    let modulus = Integer::from(p * p);

    let mut report = CongruenceReport::blank(CongruenceKind::Corollary, Some(&params), n);
    report.p = Some(p);
    report.rank_used = Some(n);
    report.w = primitive_part_from_table(&table, n).ok().map(|pp| pp.w);
    report.set_residues(
        lucas_harmonic_sum_mod_table(&table, n, &modulus),
        wolstenholme_rhs_mod_table(&table, n, &modulus),
    );
    report.modulus = Some(modulus);
    Ok(report)
}

/// `Σ_{j=1}^{r-1} v_j/u_j ≡ 0 (mod p²)`, with `r` the rank of apparition.
///
/// The residue is computed whenever `r` exists; `applicable` records whether
/// the premise `Δ = 0` or `r = p ± 1` holds.
pub fn verify_kimball_webb(params: &LucasParams, p: u64) -> Result<CongruenceReport> {
    arith::require_prime(p, PRIME_MIN)?;
    let rank = rank_of_apparition(params, p)?;
    let mut report = CongruenceReport::blank(CongruenceKind::KimballWebb, Some(params), 0);
    report.p = Some(p);
    report.rank_used = rank;
    let Some(r) = rank else {
        report.applicable = false;
        report.note = Some(format!("{p} never divides a term of the sequence"));
        return Ok(report_with_modulus(report, p));
    };
    report.n = r;
    report.applicable = params.delta().is_zero() || r == p - 1 || r == p + 1;
    if !report.applicable {
        report.note = Some(format!("premise fails: Δ = {} and r = {r}", params.delta()));
    }
    let table = lucas_table(params, r);
    report.w = primitive_part_from_table(&table, r).ok().map(|pp| pp.w);
    let modulus = Integer::from(p * p);
    report.set_residues(
        lucas_harmonic_sum_mod_table(&table, r, &modulus),
        Ok(Integer::zero()),
    );
    Ok(report_with_modulus(report, p))
}

fn report_with_modulus(mut report: CongruenceReport, p: u64) -> CongruenceReport {
    report.modulus = Some(Integer::from(p * p));
    report
}

/// `H_{p-1} ≡ 0 (mod p²)`. Primes below 5 are accepted and flagged as
/// outside the hypothesis.
pub fn verify_wolstenholme(p: u64) -> Result<CongruenceReport> {
    arith::require_prime(p, 2)?;
    let mut report = CongruenceReport::blank(CongruenceKind::Wolstenholme, None, p);
    report.p = Some(p);
    report.out_of_hypothesis = p < PRIME_MIN;
    let modulus = Integer::from(p * p);
    let harmonic = arith::harmonic_number(p - 1);
    report.set_residues(
        arith::rational_mod(&harmonic, &modulus),
        Ok(Integer::zero()),
    );
    report.modulus = Some(modulus);
    Ok(report)
}
