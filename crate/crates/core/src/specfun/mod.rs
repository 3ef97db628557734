//! Scalar special functions: log-gamma, Pochhammer, Bessel J of real order,
//! and the Laguerre, Gegenbauer and terminating hypergeometric polynomials.
//!
//! Every function here is a pure, deterministic map of its arguments.

mod bessel;
pub(crate) mod ddouble;
mod gamma;
mod polys;

pub use bessel::{bessel_j, BESSEL_X_MAX};
pub use gamma::{ln_gamma, pochhammer};
pub use polys::{gegenbauer, gegenbauer_upto, hyp_terminating, laguerre, laguerre_upto};
