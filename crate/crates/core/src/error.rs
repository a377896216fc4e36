use num_bigint::BigInt;
use thiserror::Error;

use crate::qpoly::IntPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `value` has no inverse modulo `modulus`. `index` names the sequence
    /// term responsible when the value came from one.
    #[error("{value} is not invertible modulo {modulus}{}", index.map(|j| format!(" (term j = {j})")).unwrap_or_default())]
    NotInvertible {
        value: BigInt,
        modulus: BigInt,
        index: Option<u64>,
    },

    #[error("invalid modulus {0}: expected an odd positive integer")]
    InvalidModulus(BigInt),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Some required sequence value vanished (u_k = 0 at a positive index).
    #[error("degenerate sequence: {0}")]
    DegenerateSequence(String),

    #[error("polynomial division by zero")]
    DivisionByZeroPoly,

    /// The cleared q-congruence left a nonzero remainder.
    #[error("q-congruence fails for n = {n}: nonzero remainder {remainder}")]
    CongruenceFails { n: u64, remainder: IntPoly },
}
