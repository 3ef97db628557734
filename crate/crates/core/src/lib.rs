//! Annihilation-operator coherent states for exactly solvable potentials.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: scalar special functions (log-gamma, Pochhammer, Bessel J,
//!   Laguerre, Gegenbauer and terminating hypergeometric polynomials).
//! * [`ladder`]: exact rational operator calculus on the monomial tower
//!   `x^n`: the su(1,1) generators, the conjugate raising operators and the
//!   operator-exponential forms of the Laguerre and hypergeometric solutions.
//! * [`cstates`]: the Laguerre-class and Pöschl–Teller-class coherent states,
//!   their closed forms, normalisation and level populations.
//! * [`dynamics`]: time evolution under quadratic spectra, autocorrelation
//!   traces and revival detection.
//! * [`gaussfactor`]: truncated Gauss sums as an interference-based divisor
//!   test.

pub mod cstates;
pub mod dynamics;
mod error;
pub mod gaussfactor;
pub mod ladder;
pub mod specfun;

pub use error::{Error, Result};
