use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ops::{apply, LadderOp};
use super::poly::MonoPoly;
use super::rat;
use crate::{Error, Result};

/// `exp(-K) x^n` for a lowering-type `K`; the series stops after `n` terms
/// because every application lowers the degree by one.
fn exp_minus_lowering(op: &LadderOp, n: usize) -> Result<MonoPoly> {
    let mut term = MonoPoly::monomial(n);
    let mut acc = term.clone();
    for j in 1..=n {
        term = apply(op, &term)?.scale(&(rat(-1) / rat(j as i64)));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

fn is_non_positive_integer(v: &BigRational) -> bool {
    v.is_integer() && !v.is_positive()
}

/// `L_n^lambda` regenerated from its operator-exponential form
/// `((-1)^n / n!) exp(-x d^2/dx^2 - (lambda+1) d/dx) x^n`, i.e. `exp(-K-)`
/// acting on the monomial `x^n`.
pub fn laguerre_from_operator(n: usize, lambda: &BigRational) -> Result<MonoPoly> {
    if lambda.is_integer() && lambda.is_negative() && lambda >= &rat(-(n as i64)) {
        return Err(Error::param(
            "lambda",
            format!("{lambda} is a negative integer in -1..=-{n}"),
        ));
    }
    let km = LadderOp::KMinus { lambda: lambda.clone() };
    let poly = exp_minus_lowering(&km, n)?;
    let mut factorial = BigRational::one();
    for k in 1..=n {
        factorial *= rat(k as i64);
    }
    let sign = if n.is_even() { rat(1) } else { rat(-1) };
    Ok(poly.scale(&(sign / factorial)))
}

/// Terminating hypergeometric polynomial `F(-n, b; c; z)` regenerated from the
/// operator form `(-1)^{-a} Gamma(b-a) Gamma(c) / (Gamma(c-a) Gamma(b))
/// exp(-(D+b)^{-1}(z d^2/dz^2 + c d/dz)) z^{-a}` at `a = -n`, where the gamma
/// prefactor collapses to `(-1)^n (b)_n / (c)_n`.
pub fn hyp_from_operator(n: usize, b: &BigRational, c: &BigRational) -> Result<MonoPoly> {
    if is_non_positive_integer(c) {
        return Err(Error::param("c", format!("{c} is a non-positive integer")));
    }
    for k in 0..n {
        if (b + rat(k as i64)).is_zero() {
            return Err(Error::Degenerate {
                op: "(D+b)^-1",
                degree: k,
            });
        }
    }
    let km = LadderOp::HypKMinus {
        b: b.clone(),
        c: c.clone(),
    };
    let poly = exp_minus_lowering(&km, n)?;
    let mut prefactor = if n.is_even() { rat(1) } else { rat(-1) };
    for k in 0..n {
        let k = rat(k as i64);
        prefactor *= (b + &k) / (c + &k);
    }
    Ok(poly.scale(&prefactor))
}
