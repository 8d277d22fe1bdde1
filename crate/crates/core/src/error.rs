use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// No Laurent quotient with integer coefficients exists. The remainder is
    /// what was left after integer long division stopped.
    #[error("not divisible (remainder {remainder})")]
    NotDivisible { remainder: LaurentPoly },

    #[error("negative argument {0}")]
    NegativeArgument(i64),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("evaluation at q = 0 of a polynomial with negative exponents")]
    ZeroBase,

    #[error("signature has a negative exponent at Φ{index}")]
    NegativeExponent { index: u64 },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("parity condition violated: {0}")]
    ParityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family id `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
