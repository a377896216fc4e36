//! Wolstenholme: the numerator of H_{p-1} is divisible by p² for p ≥ 5.
//!
//! cargo run --example wolstenholme

use lucas_wolstenholme::arith::{harmonic_number, is_prime};
use lucas_wolstenholme::congruence::verify_wolstenholme;

fn main() -> lucas_wolstenholme::Result<()> {
    for p in (2..=31).filter(|&p| is_prime(p)) {
        let h = harmonic_number(p - 1);
        let r = verify_wolstenholme(p)?;
        println!(
            "p = {p:>2}: H_{} = {h}  residue mod {} = {}  {}{}",
            p - 1,
            r.modulus.unwrap(),
            r.lhs_residue.unwrap(),
            if r.holds { "holds" } else { "fails" },
            if r.out_of_hypothesis { " (p < 5)" } else { "" }
        );
    }
    Ok(())
}
