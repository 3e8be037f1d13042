use num_rational::Rational64;
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HodgeError {
    #[error("exact division failed; remainder {remainder}")]
    NonDivisible { remainder: LaurentPoly },

    #[error("division by zero")]
    DivisionByZero,

    #[error("non-integral coefficient after halving")]
    NonIntegral,

    #[error("series truncated at order {order}, coefficient x^{k} requested")]
    OrderTooLow { k: i64, order: usize },

    #[error("coincident residue arguments")]
    DegeneratePoles,

    #[error("sigma={sigma} is critical for {triple}; criticals are {{{criticals}}}; pass a chamber or a non-critical rational")]
    CriticalSigma {
        sigma: Rational64,
        triple: String,
        criticals: String,
    },

    #[error("{0} is not a critical value")]
    NotCritical(String),

    #[error("parity mismatch: {0}")]
    ParityError(String),

    #[error("strata sum disagrees with the closed form at n={n}")]
    StrataMismatch { n: i64 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HodgeError>;
