//! Primitive parts `w_n` of Lucas sequences and the homogenized cyclotomic
//! values `Φ_n(α, β)`.
//!
//! `w_n` is the largest positive divisor of `u_n` coprime to every earlier
//! term `u_1, ..., u_{n-1}`. Because `u_n = Π_{d | n, d > 1} Φ_d(α, β)`, each
//! `Φ_n(α, β)` is an ordinary integer obtainable by exact division, and
//! `w_n | Φ_n(α, β)`.
//!
//! A zero among `u_1..u_{n-1}` forces `w_n = 1` (only units are coprime to
//! zero). `u_n = 0` leaves `w_n` undefined and is reported as
//! [`Error::DegenerateSequence`].

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Integer};
use crate::error::{Error, Result};
use crate::lucas::{lucas_table, LucasParams, LucasTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivePart {
    pub n: u64,
    pub w: Integer,
    /// `w = 1`
    pub trivial: bool,
}

/// Which of the coprimality facts about `w_n` hold for one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimalityReport {
    pub coprime_to_2: bool,
    pub coprime_to_3: bool,
    pub coprime_to_b: bool,
    pub coprime_to_v_n: bool,
}

impl CoprimalityReport {
    pub fn all(&self) -> bool {
        self.coprime_to_2 && self.coprime_to_3 && self.coprime_to_b && self.coprime_to_v_n
    }
}

fn ensure_covers(table: &LucasTable, n: u64) -> Result<()> {
    if n > table.max_index() {
        return Err(Error::InvalidArgument(format!(
            "index {n} exceeds table length {}",
            table.max_index()
        )));
    }
    Ok(())
}

pub fn primitive_part(params: &LucasParams, n: u64) -> Result<PrimitivePart> {
    primitive_part_from_table(&lucas_table(params, n), n)
}

/// `w_n` by gcd-stripping `|u_n|` against each earlier term.
pub fn primitive_part_from_table(table: &LucasTable, n: u64) -> Result<PrimitivePart> {
    if n == 0 {
        return Err(Error::InvalidArgument("primitive part needs n >= 1".into()));
    }
    ensure_covers(table, n)?;
    let u_n = table.u(n);
    if u_n.is_zero() {
        return Err(Error::DegenerateSequence(format!(
            "u_{n} = 0, so w_{n} is undefined"
        )));
    }
    let w = if table.first_zero(n - 1).is_some() {
        Integer::one()
    } else {
        strip(u_n.abs(), &table.u_values()[1..n as usize])
    };
    Ok(PrimitivePart {
        n,
        trivial: w.is_one(),
        w,
    })
}

fn strip(mut w: Integer, against: &[Integer]) -> Integer {
    for u_j in against {
        loop {
            let g = w.gcd(u_j);
            if g.is_one() {
                break;
            }
            w /= g;
        }
    }
    w
}

pub fn homogeneous_cyclotomic(params: &LucasParams, n: u64) -> Result<Integer> {
    homogeneous_cyclotomic_from_table(&lucas_table(params, n), n)
}

/// `Φ_n(α, β) = u_n / Π_{d | n, 1 < d < n} Φ_d(α, β)`, evaluated bottom-up over
/// the divisors of `n`.
pub fn homogeneous_cyclotomic_from_table(table: &LucasTable, n: u64) -> Result<Integer> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "homogenized cyclotomic values need n >= 2".into(),
        ));
    }
    ensure_covers(table, n)?;
    let mut values: BTreeMap<u64, Integer> = BTreeMap::new();
    for d in arith::divisors(n)?.into_iter().filter(|&d| d > 1) {
        let mut denom = Integer::one();
        for e in arith::divisors(d)?.into_iter().filter(|&e| e > 1 && e < d) {
            denom *= &values[&e];
        }
        let u_d = table.u(d);
        if u_d.is_zero() {
            return Err(Error::DegenerateSequence(format!(
                "u_{d} = 0 while evaluating Φ_{n}(α, β)"
            )));
        }
        let (q, r) = u_d.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::DegenerateSequence(format!(
                "inexact division u_{d} / {denom} while evaluating Φ_{n}(α, β)"
            )));
        }
        values.insert(d, q);
    }
    Ok(values.remove(&n).expect("n divides itself"))
}

pub fn coprimality_report(params: &LucasParams, n: u64) -> Result<CoprimalityReport> {
    coprimality_report_from_table(&lucas_table(params, n), n)
}

pub fn coprimality_report_from_table(table: &LucasTable, n: u64) -> Result<CoprimalityReport> {
    let w = primitive_part_from_table(table, n)?.w;
    let coprime = |x: &Integer| w.gcd(x).is_one();
    Ok(CoprimalityReport {
        coprime_to_2: coprime(&Integer::from(2)),
        coprime_to_3: coprime(&Integer::from(3)),
        coprime_to_b: coprime(table.params().b()),
        coprime_to_v_n: coprime(table.v(n)),
    })
}
