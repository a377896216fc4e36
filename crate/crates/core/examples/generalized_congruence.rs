//! The harmonic-type congruence modulo w_n², with the exact rational sides
//! shown next to the modular residues.
//!
//! cargo run --example generalized_congruence

use lucas_wolstenholme::arith::rational_mod;
use lucas_wolstenholme::congruence::{exact_sides, verify_theorem};
use lucas_wolstenholme::lucas::LucasParams;

fn main() -> lucas_wolstenholme::Result<()> {
    let fib = LucasParams::fibonacci();
    for n in [5, 7, 8, 10, 11] {
        let report = verify_theorem(&fib, n);
        let (lhs, rhs) = exact_sides(&fib, n)?;
        let m = report.modulus.clone().expect("nondegenerate");
        println!(
            "n = {n:>2}: Σ v_j/u_j = {lhs}, rhs = {rhs}; mod {m}: {} ≡ {} ({})",
            rational_mod(&lhs, &m)?,
            rational_mod(&rhs, &m)?,
            if report.holds { "holds" } else { "fails" }
        );
    }

    println!();
    for (a, b, n) in [(3, 2, 9), (5, -7, 13), (-4, 3, 17), (6, 7, 40)] {
        let r = verify_theorem(&LucasParams::new(a, b)?, n);
        println!(
            "A = {a:>2}, B = {b:>2}, n = {n:>2}: w = {}, holds = {}, trivial = {}",
            r.w.map(|w| w.to_string()).unwrap_or_default(),
            r.holds,
            r.trivial
        );
    }

    // below n = 5 the right-hand side may not even be defined
    let r = verify_theorem(&fib, 4);
    println!(
        "\nn = 4: {:?} ({})",
        r.verdict(),
        r.note.unwrap_or_default()
    );
    Ok(())
}
