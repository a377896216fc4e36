//! Lucas sequences, fast single-index evaluation and ranks of apparition.
//!
//! cargo run --example lucas_sequences

use lucas_wolstenholme::arith::{is_prime, jacobi};
use lucas_wolstenholme::lucas::{lucas_pair, lucas_table, rank_of_apparition, LucasParams};

fn main() -> lucas_wolstenholme::Result<()> {
    for (a, b) in [(1, -1), (2, 1), (3, 2), (1, 2)] {
        let params = LucasParams::new(a, b)?;
        let t = lucas_table(&params, 10);
        let show = |xs: &[lucas_wolstenholme::Integer]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("A = {a}, B = {b}, Δ = {}", params.delta());
        println!("  u: {}", show(t.u_values()));
        println!("  v: {}", show(t.v_values()));
    }

    let fib = LucasParams::fibonacci();
    let (u, v) = lucas_pair(&fib, 1000);
    println!(
        "\nF_1000 has {} digits, L_1000 has {}",
        u.to_string().len(),
        v.to_string().len()
    );

    println!("\nFibonacci rank of apparition r(p) divides p - (5/p):");
    let five = lucas_wolstenholme::Integer::from(5);
    for p in (7..60).filter(|&p| is_prime(p)) {
        let r = rank_of_apparition(&fib, p)?.expect("p does not divide B");
        let e = jacobi(&five, &p.into())?;
        let target = (p as i64 - e as i64) as u64;
        println!(
            "  p = {p:>2}  (5/p) = {e:>2}  r = {r:>2}  {target} / r = {}",
            target / r
        );
    }
    Ok(())
}
