//! Library error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown species '{0}'")]
    UnknownSpecies(String),

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("variable index {index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("monomial order does not cover all variables: {0}")]
    BadOrder(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("dimension out of range: {0}")]
    DimensionOutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
