//! Lucas sequences `u_n` and their companions `v_n`.
//!
//! For nonzero integers `A`, `B`:
//!
//! ```text
//! u_0 = 0, u_1 = 1, u_n = A u_{n-1} - B u_{n-2}
//! v_0 = 2, v_1 = A, v_n = A v_{n-1} - B v_{n-2}
//! ```
//!
//! with discriminant `Δ = A² - 4B`. Indices are unsigned; negative indices
//! are not supported.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, Integer};
use crate::error::{Error, Result};

pub fn discriminant(a: &Integer, b: &Integer) -> Integer {
    a * a - 4 * b
}

/// The parameter pair `(A, B)`, both nonzero, with its discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LucasParams {
    a: Integer,
    b: Integer,
    delta: Integer,
}

impl LucasParams {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "Lucas parameters must be nonzero, got A = {a}, B = {b}"
            )));
        }
        let delta = discriminant(&a, &b);
        Ok(Self { a, b, delta })
    }

    /// `(A, B) = (1, -1)`: Fibonacci and Lucas numbers.
    pub fn fibonacci() -> Self {
        Self::new(1, -1).expect("nonzero parameters")
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    pub fn delta(&self) -> &Integer {
        &self.delta
    }
}

/// Prefix table `u[0..=n]`, `v[0..=n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasTable {
    params: LucasParams,
    u: Vec<Integer>,
    v: Vec<Integer>,
}

impl LucasTable {
    pub fn params(&self) -> &LucasParams {
        &self.params
    }

    /// Largest index held by the table.
    pub fn max_index(&self) -> u64 {
        (self.u.len() - 1) as u64
    }

    pub fn u(&self, k: u64) -> &Integer {
        &self.u[k as usize]
    }

    pub fn v(&self, k: u64) -> &Integer {
        &self.v[k as usize]
    }

    pub fn u_values(&self) -> &[Integer] {
        &self.u
    }

    pub fn v_values(&self) -> &[Integer] {
        &self.v
    }

    /// Smallest positive index `k <= n` with `u_k = 0`, if any.
    pub fn first_zero(&self, n: u64) -> Option<u64> {
        (1..=n.min(self.max_index())).find(|&k| self.u(k).is_zero())
    }
}

/// `u_0..=u_n` and `v_0..=v_n` by direct recurrence.
pub fn lucas_table(params: &LucasParams, n: u64) -> LucasTable {
    let len = n as usize + 1;
    let mut u = Vec::with_capacity(len.max(2));
    let mut v = Vec::with_capacity(len.max(2));
    u.push(Integer::zero());
    v.push(Integer::from(2));
    if n >= 1 {
        u.push(Integer::one());
        v.push(params.a.clone());
    }
    for k in 2..len {
        let next_u = &params.a * &u[k - 1] - &params.b * &u[k - 2];
        let next_v = &params.a * &v[k - 1] - &params.b * &v[k - 2];
        u.push(next_u);
        v.push(next_v);
    }
    LucasTable {
        params: params.clone(),
        u,
        v,
    }
}

/// `(u_n, v_n)` in `O(log n)` steps.
///
/// Walks the bits of `n` from the top using
///
/// ```text
/// u_{2k} = u_k v_k            v_{2k}   = v_k² - 2 B^k
/// u_{k+1} = (A u_k + v_k)/2   v_{k+1} = (Δ u_k + A v_k)/2
/// ```
pub fn lucas_pair(params: &LucasParams, n: u64) -> (Integer, Integer) {
    let mut u = Integer::zero();
    let mut v = Integer::from(2);
    let mut b_pow = Integer::one();
    if n == 0 {
        return (u, v);
    }
    for bit in (0..64 - n.leading_zeros()).rev() {
        let doubled_v = &v * &v - 2 * &b_pow;
        u *= &v;
        v = doubled_v;
        b_pow = &b_pow * &b_pow;
        if (n >> bit) & 1 == 1 {
            let next_u = halve(&params.a * &u + &v);
            let next_v = halve(&params.delta * &u + &params.a * &v);
            u = next_u;
            v = next_v;
            b_pow *= &params.b;
        }
    }
    (u, v)
}

fn halve(x: BigInt) -> BigInt {
    let (q, r) = x.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero(), "odd intermediate in Lucas doubling");
    q
}

/// Least `r >= 1` with `p | u_r`, scanning `j = 1..=p+1`.
///
/// Returns `None` when no such index exists in that window, which happens
/// only when `p | B` and `p ∤ A`.
pub fn rank_of_apparition(params: &LucasParams, p: u64) -> Result<Option<u64>> {
    arith::require_prime(p, 2)?;
    let modulus = BigInt::from(p);
    let reduce = |x: &Integer| {
        arith::canonical_mod(x, &modulus)
            .to_u64()
            .expect("residue fits")
    };
    let a = reduce(&params.a) as u128;
    let b = reduce(&params.b) as u128;
    let p128 = p as u128;

    let (mut prev, mut cur) = (0u128, 1u128);
    for j in 1..=p + 1 {
        if cur == 0 {
            return Ok(Some(j));
        }
        let next = (a * cur + (p128 - b) * prev) % p128;
        prev = cur;
        cur = next;
    }
    Ok(None)
}
