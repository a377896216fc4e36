//! Σ_{j<r} v_j/u_j ≡ 0 (mod p²) when Δ = 0 or r = p ± 1.
//!
//! cargo run --example kimball_webb

use lucas_wolstenholme::arith::is_prime;
use lucas_wolstenholme::congruence::{verify_kimball_webb, Verdict};
use lucas_wolstenholme::lucas::LucasParams;

fn main() -> lucas_wolstenholme::Result<()> {
    let (mut holds, mut outside, mut failures_outside) = (0, 0, 0);
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let Ok(params) = LucasParams::new(a, b) else {
                continue;
            };
            for p in (5..=50).filter(|&p| is_prime(p)) {
                let r = verify_kimball_webb(&params, p)?;
                match r.verdict() {
                    Verdict::Holds if r.applicable => holds += 1,
                    Verdict::Violated => println!("counterexample: {r:?}"),
                    Verdict::FailedOutsideHypothesis => failures_outside += 1,
                    _ => outside += 1,
                }
            }
        }
    }
    println!("premise holds and congruence verified: {holds}");
    println!("premise fails, congruence happens to hold anyway or no rank: {outside}");
    println!("premise fails and congruence fails: {failures_outside}");

    let r = verify_kimball_webb(&LucasParams::new(2, 1)?, 7)?;
    println!(
        "\nA = 2, B = 1 (Δ = 0), p = 7: r = {:?}, residue {:?}",
        r.rank_used, r.lhs_residue
    );
    Ok(())
}
