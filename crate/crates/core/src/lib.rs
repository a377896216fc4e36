//! Lucas sequences, their primitive parts, and machine verification of
//! Wolstenholme-type harmonic congruences.
//!
//! For nonzero integers `A`, `B` let `u_n`, `v_n` be the Lucas sequence and
//! its companion, `Δ = A² - 4B`, and `w_n` the largest divisor of `u_n`
//! coprime to `u_1, ..., u_{n-1}`. For `n >= 5`,
//!
//! ```text
//! Σ_{j=1}^{n-1} v_j / u_j  ≡  (n² - 1) Δ / 6 · u_n / v_n   (mod w_n²).
//! ```
//!
//! The crate evaluates both sides exactly and modularly and reports the
//! outcome, together with the classical special cases and a constructive
//! check of the q-analogue via integer polynomial division.
//!
//! | module | contents |
//! |---|---|
//! | [`arith`] | big integers, rationals, inverses, Jacobi symbol, divisors |
//! | [`lucas`] | sequence tables, `O(log n)` evaluation, rank of apparition |
//! | [`primitive`] | `w_n`, homogenized cyclotomic values `Φ_n(α, β)` |
//! | [`congruence`] | residues, exact oracle, verification reports |
//! | [`qpoly`] | integer polynomials, `Φ_n(q)`, certificates `G(q)` |
//! | [`cli`] | command-line front end and parameter scans |
//!
//! ```
//! use lucas_wolstenholme::{congruence::verify_theorem, lucas::LucasParams};
//!
//! let report = verify_theorem(&LucasParams::fibonacci(), 7);
//! assert!(report.holds);
//! assert_eq!(report.modulus.unwrap(), 169.into());
//! ```

pub mod arith;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod lucas;
pub mod primitive;
pub mod qpoly;

pub use arith::{Integer, Rational};
pub use error::{Error, Result};
