//! Exact coefficient ring `Q[c, r, s1, s2][alpha, alpha^-1]` with relation
//! reduction, and frame derivations acting on it.

mod derivation;
mod parse;
mod scalar;

pub use derivation::{derive_opt, DerivationTable, FunctionVar};
pub use parse::{parse, parse_in};
pub use scalar::{Assignment, Context, Monomial, ParamScalar, Rational, RawPoly, Var};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("scalars from the generic and alpha contexts cannot be combined")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{0}` is not a unit; only rationals times powers of alpha are invertible")]
    NonUnitDivisor(String),
    #[error("no value assigned to `{0}`")]
    MissingParameter(Var),
    #[error("assignment violates a relation: {0}")]
    RelationViolation(String),
    #[error("`{0}` depends on s1/s2 but no derivation table is installed")]
    MissingDerivationTable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("derivation table does not preserve the relation s1^2 + s2^2 = alpha^2 along e{0}")]
    InconsistentDerivation(usize),
}

/// Build a rational from a numerator and denominator.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
