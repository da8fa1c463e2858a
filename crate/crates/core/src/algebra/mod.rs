//! Exact coefficient arithmetic.

pub mod laurent;
pub mod xpoly;

pub use laurent::{lp, LaurentPoly};
pub use xpoly::{Exponent, VarSet, XPoly};
