//! Janet-like Gröbner bases of linear difference ideals.
//!
//! The crate computes minimal Janet-like (and classical Janet) bases of
//! ideals generated by linear difference polynomials over a difference
//! field, extracts reduced Gröbner bases from them, and decides ideal
//! membership. A naive module Buchberger implementation in [`oracle`]
//! serves as an independent reference.

pub mod division;
pub mod ring;
pub mod engine;
pub mod tools;
pub mod oracle;
pub mod io;
pub mod sample;
