//! Primitive parts w_n and the homogenized cyclotomic values Φ_n(α, β).
//!
//! cargo run --example primitive_parts

use lucas_wolstenholme::arith::divisors;
use lucas_wolstenholme::lucas::{lucas_table, LucasParams};
use lucas_wolstenholme::primitive::{
    coprimality_report_from_table, homogeneous_cyclotomic_from_table, primitive_part_from_table,
};

fn main() -> lucas_wolstenholme::Result<()> {
    let fib = LucasParams::fibonacci();
    let t = lucas_table(&fib, 30);
    println!(
        "{:>3} {:>8} {:>8} {:>8}  factors Φ_d(α,β), d | n, d > 1",
        "n", "u_n", "Φ_n", "w_n"
    );
    for n in 2..=30 {
        let w = primitive_part_from_table(&t, n)?.w;
        let phi = homogeneous_cyclotomic_from_table(&t, n)?;
        let parts: Vec<String> = divisors(n)?
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| homogeneous_cyclotomic_from_table(&t, d).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        println!(
            "{n:>3} {:>8} {phi:>8} {w:>8}  {}",
            t.u(n),
            parts.join(" · ")
        );
    }

    let params = LucasParams::new(3, -5)?;
    let t = lucas_table(&params, 40);
    let mut all = true;
    for n in 5..=40 {
        all &= coprimality_report_from_table(&t, n)?.all();
    }
    println!("\nA = 3, B = -5: w_n coprime to 2, 3, B and v_n for every n in 5..=40: {all}");

    // A = B = 1 has u_3 = 0, so u_6 = 0 as well
    let degenerate = LucasParams::new(1, 1)?;
    match primitive_part_from_table(&lucas_table(&degenerate, 6), 6) {
        Ok(pp) => println!("unexpected w_6 = {}", pp.w),
        Err(e) => println!("A = B = 1, n = 6: {e}"),
    }
    Ok(())
}
