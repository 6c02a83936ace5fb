use thiserror::Error;

use crate::scalar::Scalar;

pub type Result<T, E = TauError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TauError {
    #[error("pole of r at integer point {point}")]
    Pole { point: i64 },

    #[error("r vanishes at integer point {point}")]
    Zero { point: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{base}^({exponent}) is not rational")]
    IrrationalPower { base: Box<Scalar>, exponent: Box<Scalar> },

    #[error("q = {q} is a root of unity of order at most {order}")]
    RootOfUnity { q: Box<Scalar>, order: i64 },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("series needs constant term {expected}, found {found}")]
    ConstantTerm { expected: Box<Scalar>, found: Box<Scalar> },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow")]
    Overflow,
}
