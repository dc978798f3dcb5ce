//! Exact multivariate (Laurent) polynomials over Q(i) extended by
//! algebraically independent transcendental symbols.
//!
//! A [`Poly`] carries its own variable list; some variables may be flagged as
//! *units* (they stand for nonzero quantities such as `e^z`) and only those
//! may carry negative exponents. Coefficients are [`Coeff`]s, so a constant
//! such as `E - 1` is a single coefficient with two entries.

mod eval;
mod json;
mod parse;
mod poly;
mod scalar;

pub use eval::NumericValuation;
pub use json::{PolyJson, ScalarJson, TermJson};
pub use poly::{Poly, Vars};
pub use scalar::{
    format_rational, parse_rational, Coeff, ExactScalar, GaussRat, Rational, SymMono,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("zero value supplied for unit variable {0}")]
    ZeroUnitValue(String),
    #[error("image for unit variable {0} is not a unit")]
    NonUnitImage(String),
    #[error("negative exponent on non-unit variable {0}")]
    NegativeExponent(String),
    #[error("no numeric value for symbol {0}")]
    MissingSymbol(String),
    #[error("exponent outside |e| <= 2^31-1")]
    ExponentOverflow,
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Adds exponents, keeping the result inside `|e| <= 2^31 - 1`.
pub(crate) fn add_exp(a: i32, b: i32) -> Result<i32, PolyError> {
    match a.checked_add(b) {
        Some(v) if v != i32::MIN => Ok(v),
        _ => Err(PolyError::ExponentOverflow),
    }
}

pub(crate) fn mul_exp(a: i32, b: i32) -> Result<i32, PolyError> {
    match a.checked_mul(b) {
        Some(v) if v != i32::MIN => Ok(v),
        _ => Err(PolyError::ExponentOverflow),
    }
}
