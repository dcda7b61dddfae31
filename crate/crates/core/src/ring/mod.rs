//! Linear difference polynomials over a ground difference field.
//!
//! A [`DifferenceRing`] bundles the declared differences and indeterminates
//! with the active [`Ranking`]. Polynomials are plain data whose terms are
//! kept sorted in descending ranking order, so the leading term is always
//! the first one; the ring supplies every operation that has to consult the
//! ranking.

mod coefficient;
mod context;
mod monomial;
mod polynomial;
mod ranking;

pub use coefficient::{rational, DifferenceField, Rational};
pub use context::RingContext;
pub use monomial::{DifferenceMonomial, ExponentVector};
pub use polynomial::{DifferenceRing, LinearDifferencePolynomial, Term};
pub use ranking::{Ranking, RankingScheme};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring declaration: {0}")]
    InvalidContext(String),
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("operation is only defined on nonzero polynomials")]
    ZeroPolynomial,
}
