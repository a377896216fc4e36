//! Dense integer polynomials in `q`, q-integers, cyclotomic polynomials and
//! the certificate polynomials `G(q)` behind the q-harmonic congruences.
//!
//! For `n >= 1` the cleared congruence
//!
//! ```text
//! ( 12 Σ_{j=1}^{n-1} (1 + q^j)/[j]_q - (n² - 1)(1 - q)(1 - q^n) ) · Π_{j=1}^{n-1} [j]_q
//! ```
//!
//! is an integer polynomial, and it is divisible by `Φ_n(q)²`. The quotient
//! is `G(q)`. Every divisor used here is monic, so all division happens in
//! integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Integer};
use crate::error::{Error, Result};

/// Ascending coefficients with trailing zeros stripped; the zero polynomial
/// has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `c · q^k`
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn evaluate(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Integer::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiply by `[k]_q = 1 + q + ... + q^{k-1}` in linear time, as
    /// `(1 - q^k)` followed by division by `(1 - q)`.
    pub fn mul_q_integer(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + k - 1;
        let mut out = Vec::with_capacity(len);
        let mut running = Integer::zero();
        for i in 0..len {
            if let Some(c) = self.coeffs.get(i) {
                running += c;
            }
            if i >= k {
                if let Some(c) = self.coeffs.get(i - k) {
                    running -= c;
                }
            }
            out.push(running.clone());
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient by `[k]_q` in linear time; `None` if `[k]_q` does not
    /// divide `self`.
    pub fn div_q_integer(&self, k: usize) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if self.is_zero() || k == 1 {
            return Some(self.clone());
        }
        // self · (1 - q) = quotient · (1 - q^k)
        let len = self.coeffs.len() + 1;
        let r: Vec<Integer> = (0..len)
            .map(|i| {
                let hi = self.coeffs.get(i).cloned().unwrap_or_default();
                let lo = if i > 0 {
                    self.coeffs[i - 1].clone()
                } else {
                    Integer::zero()
                };
                hi - lo
            })
            .collect();
        if len <= k {
            return None;
        }
        let qlen = len - k;
        let mut quot: Vec<Integer> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let carry = if i >= k {
                quot[i - k].clone()
            } else {
                Integer::zero()
            };
            quot.push(&r[i] + carry);
        }
        // the top k coefficients of quot · (1 - q^k) must reproduce r
        for (i, r_i) in r.iter().enumerate().skip(qlen) {
            let high = if i >= k {
                quot[i - k].clone()
            } else {
                Integer::zero()
            };
            if -high != *r_i {
                return None;
            }
        }
        Some(Self::from_coeffs(quot))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers: `-3q^3 + 3q^2 + 15q + 9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Long division `a = quotient · b + remainder` with `deg remainder < deg b`.
///
/// The leading coefficient of `b` must be `±1`; that covers every divisor
/// this crate uses and keeps quotient and remainder integral.
pub fn poly_divmod(a: &IntPoly, b: &IntPoly) -> Result<(IntPoly, IntPoly)> {
    let Some(db) = b.degree() else {
        return Err(Error::DivisionByZeroPoly);
    };
    let lead = b.leading().expect("nonzero");
    if !lead.abs().is_one() {
        return Err(Error::InvalidArgument(format!(
            "divisor leading coefficient must be a unit, got {lead}"
        )));
    }
    let Some(da) = a.degree().filter(|&da| da >= db) else {
        return Ok((IntPoly::zero(), a.clone()));
    };
    let mut rem = a.coeffs.clone();
    let mut quot = vec![Integer::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = &rem[i + db] * lead;
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.coeffs.iter().enumerate() {
            rem[i + k] -= &c * bk;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
}

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer_poly(n: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![Integer::one(); n as usize])
}

/// `Φ_d(q)` for every divisor `d` of `n`, via
/// `Φ_d = (q^d - 1) / Π_{e | d, e < d} Φ_e`.
fn cyclotomic_family(n: u64) -> Result<BTreeMap<u64, IntPoly>> {
    let mut family = BTreeMap::new();
    for d in arith::divisors(n)? {
        let mut phi = &IntPoly::monomial(Integer::one(), d as usize) - &IntPoly::one();
        for e in arith::divisors(d)?.into_iter().filter(|&e| e < d) {
            let (quot, rem) = poly_divmod(&phi, &family[&e])?;
            assert!(rem.is_zero(), "inexact cyclotomic division Φ_{d} by Φ_{e}");
            phi = quot;
        }
        family.insert(d, phi);
    }
    Ok(family)
}

pub fn cyclotomic_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic_poly needs n >= 1".into(),
        ));
    }
    Ok(cyclotomic_family(n)?.remove(&n).expect("n divides n"))
}

/// `Π_{j=1}^{n-1} [j]_q` and, for each `j`, the product with `[j]_q` left out.
fn q_factorial_parts(n: u64) -> (IntPoly, Vec<IntPoly>) {
    let full = (1..n).fold(IntPoly::one(), |acc, j| acc.mul_q_integer(j as usize));
    let without = (1..n)
        .map(|j| {
            full.div_q_integer(j as usize)
                .expect("[j]_q divides the q-factorial")
        })
        .collect();
    (full, without)
}

/// The cleared polynomial
/// `12 Σ_j (1 + q^j) Π_{k≠j} [k]_q - (n² - 1)(1 - q)(1 - q^n) Π_j [j]_q`.
pub fn cleared_congruence_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cleared_congruence_poly needs n >= 1".into(),
        ));
    }
    let (full, without) = q_factorial_parts(n);
    let mut sum = IntPoly::zero();
    for (j, partial) in (1..n).zip(&without) {
        sum = &(&sum + partial) + &partial.shift(j as usize);
    }
    let nn = Integer::from(n);
    let one_minus_q = IntPoly::from_i64s(&[1, -1]);
    let one_minus_qn = &IntPoly::one() - &IntPoly::monomial(Integer::one(), n as usize);
    let correction = (&(&one_minus_q * &one_minus_qn) * &full).scale(&(&nn * &nn - 1u32));
    Ok(&sum.scale(&Integer::from(12)) - &correction)
}

/// `G(q)` with `cleared_congruence_poly(n) = G(q) Φ_n(q)²`.
///
/// A nonzero remainder is returned as [`Error::CongruenceFails`].
pub fn q_certificate(n: u64) -> Result<IntPoly> {
    let cleared = cleared_congruence_poly(n)?;
    let phi = cyclotomic_poly(n)?;
    let (g, rem) = poly_divmod(&cleared, &(&phi * &phi))?;
    if !rem.is_zero() {
        return Err(Error::CongruenceFails { n, remainder: rem });
    }
    Ok(g)
}

/// The prime q-congruence modulo `[p]_q²`:
///
/// ```text
/// Σ_{j=1}^{p-1} 1/[j]_q ≡ (p-1)/2 (1-q) + (p²-1)/24 (1-q)² [p]_q   (mod [p]_q²)
/// ```
///
/// checked after multiplying through by `24 Π_{j<p} [j]_q`.
pub fn verify_q_prime(p: u64) -> Result<bool> {
    arith::require_prime(p, 5)?;
    let (full, without) = q_factorial_parts(p);
    let sum = without.iter().fold(IntPoly::zero(), |acc, t| &acc + t);
    let pp = Integer::from(p);
    let one_minus_q = IntPoly::from_i64s(&[1, -1]);
    let qp = q_integer_poly(p);
    let rhs = &one_minus_q.scale(&(12 * (&pp - 1u32)))
        + &(&(&one_minus_q * &one_minus_q) * &qp).scale(&(&pp * &pp - 1u32));
    let cleared = &sum.scale(&Integer::from(24)) - &(&rhs * &full);
    let (_, rem) = poly_divmod(&cleared, &(&qp * &qp))?;
    Ok(rem.is_zero())
}
