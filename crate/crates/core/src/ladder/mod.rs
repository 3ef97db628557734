//! Exact operator calculus on the monomial tower `x^n`.
//!
//! Operators act degree-wise: each generator maps `x^n` to a rational multiple
//! of a single monomial. Inverse factors such as `(D + lambda)^{-1}`, with `D =
//! x d/dx` the Euler (degree) operator, are only ever applied to monomials, so
//! a vanishing factor on some degree is reported as [`Error::Degenerate`]
//! naming that degree rather than patched over.
//!
//! All coefficients are [`BigRational`]s; nothing here rounds.
//!
//! [`Error::Degenerate`]: crate::Error::Degenerate

mod ops;
mod poly;
mod solutions;
pub mod verify;

pub use num_rational::BigRational;
pub use ops::{apply, commutator, LadderOp};
pub use poly::MonoPoly;
pub use solutions::{hyp_from_operator, laguerre_from_operator};

use num_bigint::BigInt;

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
