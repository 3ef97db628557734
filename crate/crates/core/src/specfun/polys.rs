use super::ddouble::DoubleDouble;
use crate::{Error, Result};

/// Generalised Laguerre polynomial `L_n^lambda(x)` by the forward recurrence
/// `(k+1) L_{k+1} = (2k+1+lambda-x) L_k - (k+lambda) L_{k-1}`.
pub fn laguerre(n: usize, lambda: f64, x: f64) -> f64 {
    *laguerre_upto(n, lambda, x).last().expect("non-empty")
}

/// `[L_0^lambda(x), ..., L_n^lambda(x)]` from one pass of the recurrence.
pub fn laguerre_upto(n: usize, lambda: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(1.0 + lambda - x);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + lambda - x) * out[k] - (kf + lambda) * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
    out
}

/// Gegenbauer polynomial `C_n^rho(y)` by the forward recurrence
/// `(k+1) C_{k+1} = 2(k+rho) y C_k - (k+2rho-1) C_{k-1}`.
///
/// Accurate on the orthogonality interval `|y| <= 1`.
pub fn gegenbauer(n: usize, rho: f64, y: f64) -> f64 {
    *gegenbauer_upto(n, rho, y).last().expect("non-empty")
}

pub fn gegenbauer_upto(n: usize, rho: f64, y: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(2.0 * rho * y);
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 * (kf + rho) * y * out[k] - (kf + 2.0 * rho - 1.0) * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
    out
}

/// Terminating Gauss hypergeometric sum
/// `F(-n, b; c; z) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) z^k`.
///
/// Terms are built and accumulated in double-double: near `z = 1` the
/// Gegenbauer-type sums cancel through thirteen or more decades.
pub fn hyp_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    for k in 0..n {
        if c + k as f64 == 0.0 {
            return Err(Error::param("c", format!("(c)_k vanishes at k = {k} for c = {c}")));
        }
    }
    let b = DoubleDouble::from(b);
    let c = DoubleDouble::from(c);
    let z = DoubleDouble::from(z);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    for k in 0..n {
        let kf = DoubleDouble::from(k as f64);
        let num = DoubleDouble::from(k as f64 - n as f64) * (b + kf) * z;
        let den = (c + kf) * DoubleDouble::from(k as f64 + 1.0);
        term = term * num / den;
        sum = sum + term;
    }
    Ok(sum.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::pochhammer;

    #[test]
    fn low_degrees() {
        assert_eq!(laguerre(0, 0.7, 3.0), 1.0);
        assert_eq!(laguerre(1, 2.0, 1.0), 2.0);
        assert_eq!(gegenbauer(0, 2.0, 0.3), 1.0);
        assert_eq!(gegenbauer(1, 2.0, 0.3), 2.0 * 2.0 * 0.3);
        assert_eq!(hyp_terminating(0, 3.0, 2.5, 0.7).unwrap(), 1.0);
        let b = 3.0;
        let c = 2.5;
        let z = 0.7;
        assert!((hyp_terminating(1, b, c, z).unwrap() - (1.0 - b / c * z)).abs() < 1e-16);
    }

    #[test]
    fn laguerre_at_origin_is_binomial() {
        // L_n^lambda(0) = (lambda+1)_n / n!
        for n in 0..30 {
            let want = pochhammer(1.5, n) / pochhammer(1.0, n);
            assert!((laguerre(n, 0.5, 0.0) - want).abs() <= 1e-13 * want);
        }
    }

    #[test]
    fn gegenbauer_at_one() {
        // C_n^rho(1) = (2 rho)_n / n!
        for n in 0..30 {
            let want = pochhammer(4.0, n) / pochhammer(1.0, n);
            assert!((gegenbauer(n, 2.0, 1.0) - want).abs() <= 1e-13 * want);
        }
    }

    #[test]
    fn chu_vandermonde_at_unit_argument() {
        // F(-n, b; c; 1) = (c-b)_n / (c)_n
        for n in 0..=20 {
            let b = n as f64 + 7.0;
            let c = 4.0;
            let want = pochhammer(c - b, n) / pochhammer(c, n);
            let got = hyp_terminating(n, b, c, 1.0).unwrap();
            assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0), "n = {n}");
        }
    }

    #[test]
    fn vanishing_denominator() {
        assert!(hyp_terminating(3, 1.0, -2.0, 0.5).is_err());
        // c = -3 is only reached at k = 3, beyond a degree-3 sum.
        assert!(hyp_terminating(3, 1.0, -3.0, 0.5).is_ok());
    }
}
