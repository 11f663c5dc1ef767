//! Exact computation of Catalan and higher-order Catalan numbers, the
//! coefficient families of the differential equations satisfied by the
//! Catalan generating function, and executable checks of the identities
//! relating them.
//!
//! Two independent mechanisms back every differential-equation check:
//! truncated power series over `Q` ([`series`]) and exact normal forms in
//! the quadratic function field `Q(t)[sqrt(1 - 4t)]` ([`field`]).

pub mod arith;
pub mod catalan;
pub mod coeffs;
pub mod error;
pub mod field;
pub mod numeric;
pub mod series;
pub mod verify;

pub use arith::Rational;
pub use error::{Error, Result};
