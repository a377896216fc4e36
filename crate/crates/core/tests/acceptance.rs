//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use lucas_wolstenholme::arith::{
    self, canonical_mod, gcd, is_prime, rational_mod, Integer, Rational,
};
use lucas_wolstenholme::cli::scan::{scan_theorem, ScanSpec};
use lucas_wolstenholme::congruence::{
    exact_sides, lucas_harmonic_sum_mod, verify_corollary_fib, verify_kimball_webb, verify_theorem,
    verify_wolstenholme, wolstenholme_rhs_mod,
};
use lucas_wolstenholme::lucas::{lucas_table, LucasParams};
use lucas_wolstenholme::primitive::{homogeneous_cyclotomic_from_table, primitive_part_from_table};
use lucas_wolstenholme::qpoly::{cyclotomic_poly, q_certificate, verify_q_prime, IntPoly};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn primes_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime(p))
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// 1. Generalized congruence over A, B in [-8, 8], n in [5, 120].
fn theorem_sweep() -> Outcome {
    let spec = ScanSpec::new(-8..=8, -8..=8, 5..=120).with_jobs(jobs());
    let (reports, s) = scan_theorem(&spec).map_err(|e| e.to_string())?;
    ensure(s.total == 256 * 116, || {
        format!("expected 29696 cells, got {}", s.total)
    })?;
    ensure(s.violations == 0, || {
        let first = reports.iter().find(|r| !r.holds && !r.degenerate);
        format!("{} violations, first: {first:?}", s.violations)
    })?;
    ensure(s.undefined == 0, || {
        format!("{} undefined residues", s.undefined)
    })?;
    ensure(s.holds >= 500, || {
        format!("only {} nontrivial holds", s.holds)
    })?;
    ensure(s.holds + s.trivial + s.degenerate == s.total, || {
        format!("{s:?}")
    })?;
    Ok(format!(
        "{} cells: {} nontrivial holds, {} trivial, {} degenerate, 0 violations",
        s.total, s.holds, s.trivial, s.degenerate
    ))
}

/// 2. Fibonacci spot checks, modular path against the exact oracle.
fn fibonacci_spot_checks() -> Outcome {
    let fib = LucasParams::fibonacci();
    for (n, modulus, residue, lhs, rhs) in [
        (7u64, 169, 117, (767, 60), (520, 29)),
        (5, 25, 0, (25, 3), (100, 11)),
    ] {
        let r = verify_theorem(&fib, n);
        ensure(r.holds, || format!("n={n} does not hold"))?;
        ensure(r.modulus == Some(int(modulus)), || {
            format!("n={n} modulus {:?}", r.modulus)
        })?;
        ensure(
            r.lhs_residue == Some(int(residue)) && r.rhs_residue == Some(int(residue)),
            || format!("n={n} residues {:?}/{:?}", r.lhs_residue, r.rhs_residue),
        )?;
        let (el, er) = exact_sides(&fib, n).map_err(|e| e.to_string())?;
        ensure(el == Rational::new(int(lhs.0), int(lhs.1)), || {
            format!("exact lhs {el}")
        })?;
        ensure(er == Rational::new(int(rhs.0), int(rhs.1)), || {
            format!("exact rhs {er}")
        })?;
        let m = int(modulus);
        ensure(
            rational_mod(&el, &m).ok() == r.lhs_residue
                && rational_mod(&er, &m).ok() == r.rhs_residue,
            || format!("n={n}: exact and modular paths disagree"),
        )?;
    }
    Ok("(1,-1,7): 117 = 117 mod 169; (1,-1,5): 0 = 0 mod 25; oracle agrees".into())
}

/// 3. Fibonacci/Lucas congruence modulo p² for primes in [5, 97].
fn corollary() -> Outcome {
    let mut count = 0;
    for p in primes_in(5, 97) {
        let r = verify_corollary_fib(p).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("p={p}: {r:?}"))?;
        count += 1;
    }
    let r = verify_corollary_fib(7).map_err(|e| e.to_string())?;
    ensure(r.n == 8 && r.modulus == Some(int(49)), || {
        format!("p=7: {r:?}")
    })?;
    ensure(
        r.lhs_residue == Some(int(0)) && r.rhs_residue == Some(int(0)),
        || format!("p=7 residues {:?}/{:?}", r.lhs_residue, r.rhs_residue),
    )?;
    let (el, er) = exact_sides(&LucasParams::fibonacci(), 8).map_err(|e| e.to_string())?;
    ensure(
        el.numer() == &int(11711) && er.numer() == &int(2205),
        || format!("p=7 exact numerators {} / {}", el.numer(), er.numer()),
    )?;
    ensure(
        el.numer().is_multiple_of(&int(49)) && er.numer().is_multiple_of(&int(49)),
        || "p=7 numerators not divisible by 49".into(),
    )?;
    Ok(format!("{count} primes hold; p = 7 -> n = 8, 0 = 0 mod 49"))
}

/// 4. Kimball-Webb under its premise, |A|, |B| <= 5, primes in [5, 50].
fn kimball_webb() -> Outcome {
    let mut applicable = 0;
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let Ok(params) = LucasParams::new(a, b) else {
                continue;
            };
            for p in primes_in(5, 50) {
                let r = verify_kimball_webb(&params, p).map_err(|e| e.to_string())?;
                if !r.applicable {
                    continue;
                }
                applicable += 1;
                ensure(r.holds && r.lhs_residue == Some(Integer::zero()), || {
                    format!("({a},{b}) p={p}: {r:?}")
                })?;
            }
        }
    }
    ensure(applicable > 0, || "premise never held".into())?;
    Ok(format!("{applicable} applicable cases, 0 violations"))
}

/// 5. Wolstenholme for primes in [5, 97]; p = 3 fails.
fn wolstenholme() -> Outcome {
    for p in primes_in(5, 97) {
        let h = arith::harmonic_number(p - 1);
        ensure(h.numer().is_multiple_of(&int((p * p) as i64)), || {
            format!("p={p}: {h}")
        })?;
        let r = verify_wolstenholme(p).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("p={p} report fails"))?;
    }
    ensure(arith::harmonic_number(4).numer() == &int(25), || {
        "H_4 numerator".into()
    })?;
    let r3 = verify_wolstenholme(3).map_err(|e| e.to_string())?;
    ensure(!r3.holds && r3.out_of_hypothesis, || format!("p=3: {r3:?}"))?;
    Ok("primes 5..97 hold; H_4 = 25/12; p = 3 fails as expected".into())
}

/// 6. q-certificates for n in [1, 64] and the prime q-congruence.
fn q_certificates() -> Outcome {
    let start = Instant::now();
    for n in 1..=64 {
        q_certificate(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    ensure(
        q_certificate(2).ok() == Some(IntPoly::from_i64s(&[9, -3])),
        || "G(2)".into(),
    )?;
    ensure(
        q_certificate(3).ok() == Some(IntPoly::from_i64s(&[16, -8])),
        || "G(3)".into(),
    )?;
    for p in primes_in(5, 31) {
        ensure(verify_q_prime(p) == Ok(true), || format!("p={p}"))?;
    }
    Ok(format!(
        "n = 1..64 zero remainder; G(2), G(3) exact; primes 5..31 ({:.1?})",
        start.elapsed()
    ))
}

/// 7. Structural invariants.
fn structural() -> Outcome {
    for n in 1..=128u64 {
        let mut prod = IntPoly::one();
        for d in arith::divisors(n).unwrap() {
            prod = &prod * &cyclotomic_poly(d).unwrap();
        }
        let target = &IntPoly::monomial(Integer::one(), n as usize) - &IntPoly::one();
        ensure(prod == target, || format!("Π Φ_d(q) != q^{n} - 1"))?;
    }
    let mut checked = 0u64;
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            let Ok(params) = LucasParams::new(a, b) else {
                continue;
            };
            let t = lucas_table(&params, 200);
            let mut b_pow = Integer::one();
            for n in 0..=200u64 {
                let (u, v) = (t.u(n), t.v(n));
                ensure(v * v - params.delta() * u * u == 4 * &b_pow, || {
                    format!("norm identity ({a},{b},{n})")
                })?;
                b_pow *= params.b();
                if n < 2 || u.is_zero() {
                    continue;
                }
                let mut prod = Integer::one();
                for d in arith::divisors(n).unwrap().into_iter().filter(|&d| d > 1) {
                    prod *= homogeneous_cyclotomic_from_table(&t, d).map_err(|e| e.to_string())?;
                }
                ensure(&prod == u, || format!("u_n != Π Φ_d(α,β) ({a},{b},{n})"))?;
                let w = primitive_part_from_table(&t, n)
                    .map_err(|e| e.to_string())?
                    .w;
                let phi = homogeneous_cyclotomic_from_table(&t, n).map_err(|e| e.to_string())?;
                ensure(phi.is_multiple_of(&w), || {
                    format!("w ∤ Φ_n(α,β) ({a},{b},{n})")
                })?;
                if n >= 5 {
                    let g = gcd(&w, &(6 * params.b() * v));
                    ensure(g.is_one(), || format!("gcd(w, 6Bv) = {g} ({a},{b},{n})"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "cyclotomic products n <= 128; {checked} sequence cells n <= 200"
    ))
}

/// 8. Modular path against the exact-rational path on random admissible input.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1ca5);
    let (mut lhs_ok, mut rhs_ok) = (0, 0);
    let mut attempts = 0;
    while lhs_ok < 1000 || rhs_ok < 1000 {
        attempts += 1;
        ensure(attempts < 200_000, || "too few admissible samples".into())?;
        let a = rng.gen_range(-20i64..=20);
        let b = rng.gen_range(-20i64..=20);
        if a == 0 || b == 0 {
            continue;
        }
        let params = LucasParams::new(a, b).unwrap();
        let n = rng.gen_range(1u64..=60);
        let t = lucas_table(&params, n);
        let m = if rng.gen_bool(0.5) {
            match primitive_part_from_table(&t, n) {
                Ok(pp) if !pp.trivial => &pp.w * &pp.w,
                _ => continue,
            }
        } else {
            int(rng.gen_range(1i64..=100_000))
        };
        let Ok((exact_lhs, exact_rhs)) = exact_sides(&params, n) else {
            continue;
        };
        if lhs_ok < 1000 && (1..n).all(|j| gcd(t.u(j), &m).is_one()) {
            let modular = lucas_harmonic_sum_mod(&params, n, &m).map_err(|e| e.to_string())?;
            let oracle = rational_mod(&exact_lhs, &m).map_err(|e| e.to_string())?;
            ensure(modular == oracle, || format!("lhs ({a},{b},{n}) mod {m}"))?;
            lhs_ok += 1;
        }
        if rhs_ok < 1000 && gcd(&(6 * t.v(n)), &m).is_one() {
            let modular = wolstenholme_rhs_mod(&params, n, &m).map_err(|e| e.to_string())?;
            let oracle = rational_mod(&exact_rhs, &m).map_err(|e| e.to_string())?;
            ensure(modular == canonical_mod(&oracle, &m), || {
                format!("rhs ({a},{b},{n}) mod {m}")
            })?;
            rhs_ok += 1;
        }
    }
    Ok(format!("{lhs_ok} lhs and {rhs_ok} rhs triples agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 theorem sweep", theorem_sweep),
        ("2 fibonacci spot checks", fibonacci_spot_checks),
        ("3 fibonacci corollary", corollary),
        ("4 kimball-webb", kimball_webb),
        ("5 wolstenholme", wolstenholme),
        ("6 q-certificates", q_certificates),
        ("7 structural invariants", structural),
        ("8 oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  {name:<26} {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<26} {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
