//! The text format for difference systems.
//!
//! ```text
//! # toric example
//! ring: differences = [x, y, z, w]   indeterminates = [u]
//! rank: scheme = degrevlex   order = [x, y, z, w]   indet_order = [u]
//! poly: u[7,0,0,0] - u[0,2,1,0]
//! poly: 1/2*u[4,0,0,1] - u[0,3,0,0]
//! ```
//!
//! `u[7,0,0,0]` is `θ_x^7 ∘ u`. `rank:` is optional and defaults to
//! degrevlex in declaration order.

mod format;
mod parse;

pub use format::{format_monomial, format_poly, format_rational, format_system};
pub use parse::{parse_polynomial, parse_system, ParseError, SystemFile};
