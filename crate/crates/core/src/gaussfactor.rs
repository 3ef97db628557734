//! Divisor detection by truncated Gauss sums.
//!
//! `(1/M) sum_{m<M} exp(-2 pi i m^2 N / l)` has unit magnitude when `l | N`
//! and generically decays otherwise, the same quadratic-phase interference
//! that produces fractional revivals.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Default acceptance level `1/sqrt(2)`.
pub const DEFAULT_THRESHOLD: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Truncated Gauss sum with `m^2 N mod l` reduced in integers before the
/// exponential, so the phase is exact for any `N`.
pub fn gauss_sum(n: u64, ell: u64, m: u64) -> Result<Complex64> {
    if ell == 0 {
        return Err(Error::param("ell", "must be at least 1"));
    }
    if m == 0 {
        return Err(Error::param("m", "must be at least 1"));
    }
    let ell128 = ell as u128;
    let n_mod = n as u128 % ell128;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..m {
        let k_mod = k as u128 % ell128;
        let r = (k_mod * k_mod % ell128) * n_mod % ell128;
        if r == 0 {
            acc.re += 1.0;
        } else {
            let angle = -TAU * (r as f64 / ell as f64);
            acc += Complex64::new(angle.cos(), angle.sin());
        }
    }
    Ok(acc / m as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussSumRow {
    pub ell: u64,
    pub magnitude: f64,
    pub is_factor: bool,
    /// `N / l` for accepted trial divisors that do divide `N`.
    pub cofactor: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussSumReport {
    pub n: u64,
    pub m: u64,
    pub threshold: f64,
    pub rows: Vec<GaussSumRow>,
    /// Accepted trial divisors together with their exact cofactors, ascending.
    pub factors: Vec<u64>,
}

/// `ceil(sqrt(n))`.
pub fn auto_truncation(n: u64) -> u64 {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Scans `l = 2..=floor(sqrt(N))`, accepting `l` when `|gauss_sum| >= threshold`.
/// `m = None` uses `M = ceil(sqrt(N))`.
pub fn factor_scan(n: u64, m: Option<u64>, threshold: f64) -> Result<GaussSumReport> {
    if n < 2 {
        return Err(Error::param("n", format!("{n} must be at least 2")));
    }
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::param("threshold", format!("{threshold} must lie in (0, 1)")));
    }
    let m = m.unwrap_or_else(|| auto_truncation(n));
    if m == 0 {
        return Err(Error::param("m", "must be at least 1"));
    }

    let mut rows = Vec::new();
    let mut factors = Vec::new();
    for ell in 2..=n.isqrt() {
        let magnitude = gauss_sum(n, ell, m)?.norm();
        let is_factor = magnitude >= threshold;
        let cofactor = (is_factor && n.is_multiple_of(ell)).then_some(n / ell);
        if is_factor {
            factors.push(ell);
            factors.extend(cofactor);
        }
        rows.push(GaussSumRow {
            ell,
            magnitude,
            is_factor,
            cofactor,
        });
    }
    factors.sort_unstable();
    factors.dedup();
    Ok(GaussSumReport {
        n,
        m,
        threshold,
        rows,
        factors,
    })
}
