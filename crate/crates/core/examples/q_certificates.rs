//! Cyclotomic polynomials and the certificate G(q) with
//! (cleared q-congruence) = G(q) Φ_n(q)².
//!
//! cargo run --example q_certificates [max_n]

use lucas_wolstenholme::qpoly::{
    cleared_congruence_poly, cyclotomic_poly, q_certificate, verify_q_prime,
};

fn main() -> lucas_wolstenholme::Result<()> {
    let max_n: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(24);

    for n in 1..=6 {
        println!("Φ_{n}(q) = {}", cyclotomic_poly(n)?);
        println!("  cleared = {}", cleared_congruence_poly(n)?);
        println!("  G(q)    = {}", q_certificate(n)?);
    }

    println!();
    for n in 7..=max_n {
        let g = q_certificate(n)?;
        let widest = g.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
        println!(
            "n = {n:>3}: deg G = {:>4}, largest coefficient {widest} bits",
            g.degree().unwrap_or(0)
        );
    }

    for p in [5, 7, 11, 13] {
        println!("prime q-congruence mod [{p}]_q²: {}", verify_q_prime(p)?);
    }
    Ok(())
}
