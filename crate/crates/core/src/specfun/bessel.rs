use super::ddouble::DoubleDouble;
use super::gamma::ln_gamma_signed;
use crate::{Error, Result};

/// Largest argument accepted by [`bessel_j`]; the ascending series is the only
/// evaluation branch.
pub const BESSEL_X_MAX: f64 = 50.0;

const MAX_TERMS: usize = 2000;

/// Bessel function of the first kind `J_nu(x)` for real order and `0 <= x <= 50`.
///
/// Sums `(x/2)^nu / Gamma(nu+1) * sum_k (-(x/2)^2)^k / (k! (nu+1)_k)` with the
/// inner sum carried in double-double so the cancellation at moderate `x`
/// does not eat the result. Summation stops once the geometric tail bound
/// falls below `1e-16` of the partial sum.
///
/// Negative integer orders use `J_{-m} = (-1)^m J_m`. At `x = 0` a negative
/// non-integer order returns an infinity carrying the sign of `1/Gamma(nu+1)`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || !x.is_finite() {
        return Err(Error::Domain {
            func: "bessel_j",
            value: x,
            reason: "order and argument must be finite",
        });
    }
    if x < 0.0 {
        return Err(Error::Domain {
            func: "bessel_j",
            value: x,
            reason: "requires x >= 0",
        });
    }
    if x > BESSEL_X_MAX {
        return Err(Error::Domain {
            func: "bessel_j",
            value: x,
            reason: "ascending series limited to x <= 50",
        });
    }
    if nu < 0.0 && nu == nu.floor() {
        let m = -nu;
        let j = bessel_j(m, x)?;
        return Ok(if (m as u64).is_multiple_of(2) { j } else { -j });
    }

    let (ln_gamma, sign) = ln_gamma_signed(nu + 1.0)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            sign * f64::INFINITY
        });
    }

    let half = 0.5 * x;
    let prefactor = sign * (nu * half.ln() - ln_gamma).exp();

    let y = DoubleDouble::from(half) * DoubleDouble::from(half);
    let nu1 = DoubleDouble::from(nu) + DoubleDouble::ONE;
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    for k in 0..MAX_TERMS {
        let kk = k as f64;
        let denom = DoubleDouble::from(kk + 1.0) * (nu1 + DoubleDouble::from(kk));
        term = -(term * y / denom);
        sum = sum + term;

        let next_ratio = y.hi() / ((kk + 2.0) * (nu + kk + 2.0)).abs();
        if next_ratio < 0.5 {
            let tail = term.abs().hi() * next_ratio / (1.0 - next_ratio);
            if tail <= 1e-16 * sum.abs().hi() || tail == 0.0 {
                break;
            }
        }
    }
    Ok(prefactor * sum.to_f64())
}
