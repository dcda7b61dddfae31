//! J-normal form and completion to a minimal Janet-like (or Janet) basis.

mod completion;
mod reduction;

pub use completion::{
    complete, complete_observed, BasisResult, CompletionConfig, CompletionStats,
};
pub use reduction::ReductionBasis;

use thiserror::Error;

use crate::division::DivisionError;
use crate::ring::RingError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("zero ideal input: every generator is zero")]
    ZeroIdeal,
    #[error("resource cap exceeded: {limit} normal-form iterations (basis {basis_len}, queue {queue_len})")]
    ResourceCap {
        limit: usize,
        basis_len: usize,
        queue_len: usize,
    },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Division(#[from] DivisionError),
}
