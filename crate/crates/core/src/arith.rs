//! Exact integer and rational arithmetic plus the small number-theoretic
//! helpers the rest of the crate leans on.
//!
//! [`Integer`] and [`Rational`] are `num-bigint` / `num-rational` types. A
//! `BigRational` is always kept reduced with a positive denominator, so
//! structural equality is value equality.
//!
//! All residues produced here are canonical, i.e. lie in `[0, m)`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Reduce `a` into `[0, m)`. `m` must be positive.
pub fn canonical_mod(a: &Integer, m: &Integer) -> Integer {
    a.mod_floor(m)
}

fn require_modulus(m: &Integer) -> Result<()> {
    if m.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "modulus must be >= 1, got {m}"
        )))
    }
}

/// The inverse of `a` modulo `m`, as a residue in `[0, m)`.
///
/// Every integer is invertible modulo 1 and the result is then 0, which lets
/// trivial moduli pass through residue pipelines unchanged.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Result<Integer> {
    require_modulus(m)?;
    if m.is_one() {
        return Ok(Integer::zero());
    }
    let a = canonical_mod(a, m);
    let egcd = a.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a,
            modulus: m.clone(),
            index: None,
        });
    }
    Ok(canonical_mod(&egcd.x, m))
}

/// Image of `r` in `Z/mZ`: `num * den^{-1} mod m`.
pub fn rational_mod(r: &Rational, m: &Integer) -> Result<Integer> {
    let inv = mod_inverse(r.denom(), m).map_err(|e| match e {
        Error::NotInvertible { modulus, .. } => Error::NotInvertible {
            value: r.denom().clone(),
            modulus,
            index: None,
        },
        other => other,
    })?;
    Ok(canonical_mod(&(r.numer() * inv), m))
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi(a: &Integer, n: &Integer) -> Result<i32> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::InvalidModulus(n.clone()));
    }
    let three = Integer::from(3);
    let five = Integer::from(5);
    let eight = Integer::from(8);
    let four = Integer::from(4);

    let mut a = canonical_mod(a, n);
    let mut n = n.clone();
    let mut sign = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("divisors: n must be >= 1".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Euler's totient. `euler_phi(1) = 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("euler_phi: n must be >= 1".into()));
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Deterministic trial-division primality test; adequate for the scan sizes
/// used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Rejects anything that is not a prime `>= min`.
pub(crate) fn require_prime(p: u64, min: u64) -> Result<()> {
    if p < min || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "expected a prime p >= {min}, got {p}"
        )));
    }
    Ok(())
}

/// `H_n = 1 + 1/2 + ... + 1/n` as an exact reduced fraction.
pub fn harmonic_number(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(Integer::one(), Integer::from(j))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(8), &int(2)), int(2));
        assert_eq!(gcd(&int(0), &int(5)), int(5));
        assert_eq!(gcd(&int(-12), &int(18)), int(6));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&int(60), &int(169)).unwrap(), int(31));
        assert_eq!(mod_inverse(&int(3), &int(25)).unwrap(), int(17));
        assert!(matches!(
            mod_inverse(&int(2), &int(4)),
            Err(Error::NotInvertible { .. })
        ));
        assert_eq!(mod_inverse(&int(12345), &int(1)).unwrap(), int(0));
        assert_eq!(mod_inverse(&int(-1), &int(7)).unwrap(), int(6));
        assert!(matches!(
            mod_inverse(&int(3), &int(0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rational_mod_examples() {
        let r = |n: i64, d: i64| Rational::new(int(n), int(d));
        assert_eq!(rational_mod(&r(25, 3), &int(25)).unwrap(), int(0));
        assert_eq!(rational_mod(&r(1, 1), &int(7)).unwrap(), int(1));
        assert_eq!(rational_mod(&r(767, 60), &int(169)).unwrap(), int(117));
        assert_eq!(rational_mod(&r(-1, 2), &int(7)).unwrap(), int(3));
        assert!(matches!(
            rational_mod(&r(1, 5), &int(25)),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn rationals_are_reduced() {
        let r = Rational::new(int(10), int(-4));
        assert_eq!(r.numer(), &int(-5));
        assert_eq!(r.denom(), &int(2));
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&int(5), &int(13)).unwrap(), -1);
        assert_eq!(jacobi(&int(5), &int(11)).unwrap(), 1);
        assert_eq!(jacobi(&int(5), &int(5)).unwrap(), 0);
        assert_eq!(jacobi(&int(-1), &int(7)).unwrap(), -1);
        assert_eq!(jacobi(&int(3), &int(1)).unwrap(), 1);
        assert!(matches!(
            jacobi(&int(3), &int(8)),
            Err(Error::InvalidModulus(_))
        ));
        assert!(jacobi(&int(3), &int(-3)).is_err());
    }

    #[test]
    fn jacobi_matches_residue_scan_for_small_primes() {
        for p in (3..100u64).filter(|&p| is_prime(p)) {
            let squares: std::collections::HashSet<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    jacobi(&int(a as i64), &int(p as i64)).unwrap(),
                    expected,
                    "({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn divisor_and_totient_examples() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(49).unwrap(), vec![1, 7, 49]);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert!(divisors(0).is_err());
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn totient_sums_over_divisors() {
        for n in 1..=500 {
            let s: u64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| euler_phi(d).unwrap())
                .sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic_number(4), Rational::new(int(25), int(12)));
        assert_eq!(harmonic_number(6), Rational::new(int(49), int(20)));
        assert_eq!(harmonic_number(0), Rational::zero());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(require_prime(4, 2).is_err());
        assert!(require_prime(3, 5).is_err());
        assert!(require_prime(5, 5).is_ok());
    }

    proptest! {
        #[test]
        fn inverse_times_value_is_one(a in -10_000i64..10_000, m in 2i64..5_000) {
            prop_assume!(num_integer::gcd(a, m) == 1);
            let x = mod_inverse(&int(a), &int(m)).unwrap();
            prop_assert!(x >= int(0) && x < int(m));
            prop_assert_eq!(canonical_mod(&(int(a) * x), &int(m)), int(1));
        }

        #[test]
        fn rational_mod_is_additive(
            (an, ad) in (-500i64..500, 1i64..200),
            (bn, bd) in (-500i64..500, 1i64..200),
            m in 2i64..400,
        ) {
            prop_assume!(num_integer::gcd(ad, m) == 1 && num_integer::gcd(bd, m) == 1);
            let r = Rational::new(int(an), int(ad));
            let s = Rational::new(int(bn), int(bd));
            let m = int(m);
            let lhs = rational_mod(&(&r + &s), &m).unwrap();
            let rhs = canonical_mod(&(rational_mod(&r, &m).unwrap() + rational_mod(&s, &m).unwrap()), &m);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
