use num_rational::BigRational;
use thiserror::Error;

use crate::monomial::NormalMonomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree caps differ: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },

    #[error("coefficient of {out} in {left} * {right} is {value}, not an integer")]
    IntegralityViolation {
        left: NormalMonomial,
        right: NormalMonomial,
        out: NormalMonomial,
        value: BigRational,
    },

    #[error("word `{0}` is not in normal order x < y < z < h")]
    NonNormalWord(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("exp(...) needs an explicit degree cap")]
    MissingCap,

    #[error("invalid JSON element: {0}")]
    Json(String),
}
