//! Σ L_j/F_j ≡ 5(n² - 1)/6 · F_n/L_n (mod p²), n the rank of apparition of p.
//!
//! cargo run --example fibonacci_corollary

use lucas_wolstenholme::arith::is_prime;
use lucas_wolstenholme::congruence::verify_corollary_fib;

fn main() -> lucas_wolstenholme::Result<()> {
    println!(
        "{:>4} {:>4} {:>7} {:>7} {:>7}",
        "p", "n", "p²", "lhs", "rhs"
    );
    for p in (5..=100).filter(|&p| is_prime(p)) {
        let r = verify_corollary_fib(p)?;
        println!(
            "{p:>4} {:>4} {:>7} {:>7} {:>7} {}",
            r.n,
            r.modulus.unwrap(),
            r.lhs_residue.unwrap(),
            r.rhs_residue.unwrap(),
            if r.holds { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
