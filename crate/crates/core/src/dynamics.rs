//! Time evolution under a quadratic spectrum: autocorrelation traces and
//! full / fractional revival detection.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::specfun::ddouble::DoubleDouble;
use crate::{Error, Result};

pub const DEFAULT_FULL_THRESHOLD: f64 = 0.9;
pub const DEFAULT_FRAC_THRESHOLD: f64 = 0.2;
pub const DEFAULT_Q_MAX: u32 = 4;

/// Minimum rise over each neighbour for a sample to count as a strict local
/// maximum; flat traces otherwise sprout peaks from rounding noise.
pub const PEAK_EPS: f64 = 1e-12;

/// Phases beyond this magnitude are reduced modulo 2 pi in double-double.
const PHASE_REDUCE_ABOVE: f64 = 1e8;

const TWO_PI_DD: DoubleDouble = DoubleDouble::from_parts(TAU, 2.449_293_598_294_706_4e-16);

/// `E(n) = a n^2 + b n + c`, in units where hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Spectrum {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::param("spectrum", "coefficients must be finite"));
        }
        if a < 0.0 {
            return Err(Error::param("a", format!("{a} must be non-negative")));
        }
        Ok(Spectrum { a, b, c })
    }

    pub fn energy(&self, n: usize) -> f64 {
        let n = n as f64;
        self.a * n * n + self.b * n + self.c
    }
}

/// Modified Pöschl–Teller ladder `E(n) = (n + rho)^2`.
pub fn pt_spectrum(rho: f64) -> Result<Spectrum> {
    if !(rho.is_finite() && rho > 0.0) {
        return Err(Error::param("rho", format!("{rho} must be positive")));
    }
    Spectrum::new(1.0, 2.0 * rho, rho * rho)
}

/// Sampled autocorrelation `A(t) = sum_n p_n exp(-i E(n) t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AutocorrTrace {
    pub times: Vec<f64>,
    pub values: Vec<Complex64>,
    pub magsq: Vec<f64>,
}

impl AutocorrTrace {
    /// Trace from raw samples; `magsq` is taken as given so that a trace
    /// re-read from disk reproduces the original bit for bit.
    pub fn from_samples(times: Vec<f64>, values: Vec<Complex64>, magsq: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() || times.len() != magsq.len() {
            return Err(Error::param("trace", "column lengths differ"));
        }
        check_increasing(&times)?;
        Ok(AutocorrTrace { times, values, magsq })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

fn check_increasing(times: &[f64]) -> Result<()> {
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::param("times", "must be finite"));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param("times", "must be strictly increasing"));
    }
    Ok(())
}

/// Uniform grid of `samples` points on `[0, t_max]`, both ends included.
pub fn uniform_grid(t_max: f64, samples: usize) -> Result<Vec<f64>> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::param("t_max", format!("{t_max} must be positive")));
    }
    if samples < 2 {
        return Err(Error::param("samples", format!("{samples} must be at least 2")));
    }
    let last = (samples - 1) as f64;
    Ok((0..samples).map(|k| t_max * (k as f64 / last)).collect())
}

/// `E t` reduced into `(-pi, pi]` when large enough for `f64` trigonometry to
/// lose the phase.
fn phase(energy: f64, t: f64) -> f64 {
    let raw = energy * t;
    if raw.abs() <= PHASE_REDUCE_ABOVE {
        return raw;
    }
    let p = DoubleDouble::from(energy) * DoubleDouble::from(t);
    let turns = (p.hi() / TAU).round();
    (p - TWO_PI_DD * DoubleDouble::from(turns)).to_f64()
}

pub fn autocorr(weights: &[f64], spectrum: &Spectrum, times: &[f64]) -> Result<AutocorrTrace> {
    let total: f64 = weights.iter().sum();
    if weights.iter().any(|&p| !(p >= 0.0 && p.is_finite())) || (total - 1.0).abs() > 1e-10 {
        return Err(Error::WeightNormalization { sum: total });
    }
    check_increasing(times)?;
    let energies: Vec<f64> = (0..weights.len()).map(|n| spectrum.energy(n)).collect();
    let values: Vec<Complex64> = times
        .iter()
        .map(|&t| {
            weights
                .iter()
                .zip(&energies)
                .fold(Complex64::new(0.0, 0.0), |acc, (&p, &e)| {
                    acc + Complex64::from_polar(p, -phase(e, t))
                })
        })
        .collect();
    let magsq = values.iter().map(|v| v.norm_sqr()).collect();
    Ok(AutocorrTrace {
        times: times.to_vec(),
        values,
        magsq,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RevivalTimes {
    /// Quadratic-phase revival time `2 pi / a`.
    pub t_rev: f64,
    /// Smallest `t > 0` at which every relative phase `(E(n) - E(0)) t` is a
    /// multiple of `2 pi`, so `|A(t)| = 1` for any populations. `None` when
    /// `b / a` is not recognisably rational.
    pub t_full: Option<f64>,
}

/// Continued-fraction rational approximation `x ~ num/den` with `den <= max_den`,
/// accepted only if it reproduces `x` to `1e-12` relative.
fn recognise_rational(x: f64, max_den: i64) -> Option<(i64, i64)> {
    let tol = 1e-12 * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol {
            return Some((h1, k1));
        }
        let frac = r - a as f64;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

pub fn revival_time(spectrum: &Spectrum) -> Result<RevivalTimes> {
    if spectrum.a <= 0.0 {
        return Err(Error::param("a", "revival time needs a > 0"));
    }
    let t_rev = TAU / spectrum.a;
    // Relative phases a (n^2 + beta n) t span the lattice Z(1+beta) + 2Z, so
    // with beta = r/d the period is pi k / a, k = 2d / gcd(2d, d + r).
    let t_full = recognise_rational(spectrum.b / spectrum.a, 1_000_000).map(|(r, d)| {
        let k = (2 * d) / (2 * d).gcd(&(d + r));
        PI * k as f64 / spectrum.a
    });
    Ok(RevivalTimes { t_rev, t_full })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RevivalParams {
    pub full_threshold: f64,
    pub frac_threshold: f64,
    pub q_max: u32,
}

impl Default for RevivalParams {
    fn default() -> Self {
        RevivalParams {
            full_threshold: DEFAULT_FULL_THRESHOLD,
            frac_threshold: DEFAULT_FRAC_THRESHOLD,
            q_max: DEFAULT_Q_MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FullRevival {
    pub time: f64,
    pub magsq: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FractionalRevival {
    pub time: f64,
    pub magsq: f64,
    /// Nearest `p/q` (lowest terms, `q <= q_max`) to `time / t_rev`.
    pub p: i64,
    pub q: u32,
    /// `|time / t_rev - p/q|`.
    pub approx_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RevivalReport {
    pub t_rev: f64,
    pub full_revivals: Vec<FullRevival>,
    pub fractional_revivals: Vec<FractionalRevival>,
}

/// Nearest rational with denominator at most `q_max`; ties go to the smaller
/// denominator.
pub fn nearest_rational(x: f64, q_max: u32) -> (i64, u32, f64) {
    let mut best = (x.round() as i64, 1u32, (x - x.round()).abs());
    for q in 2..=q_max {
        let p = (x * q as f64).round();
        let err = (x - p / q as f64).abs();
        if err < best.2 {
            best = (p as i64, q, err);
        }
    }
    best
}

/// Indices of strict local maxima; an end sample counts when it rises above
/// its single neighbour.
fn local_maxima(y: &[f64]) -> Vec<usize> {
    let n = y.len();
    if n < 2 {
        return Vec::new();
    }
    (0..n)
        .filter(|&k| {
            let left = k == 0 || y[k] > y[k - 1] + PEAK_EPS;
            let right = k == n - 1 || y[k] > y[k + 1] + PEAK_EPS;
            left && right
        })
        .collect()
}

pub fn detect_revivals(trace: &AutocorrTrace, t_rev: f64, params: &RevivalParams) -> Result<RevivalReport> {
    if trace.is_empty() {
        return Err(Error::EmptyTrace);
    }
    let RevivalParams {
        full_threshold,
        frac_threshold,
        q_max,
    } = *params;
    if !(frac_threshold > 0.0 && frac_threshold < full_threshold && full_threshold <= 1.0) {
        return Err(Error::param(
            "thresholds",
            format!("need 0 < frac ({frac_threshold}) < full ({full_threshold}) <= 1"),
        ));
    }
    if q_max == 0 {
        return Err(Error::param("q_max", "must be at least 1"));
    }
    if !(t_rev.is_finite() && t_rev > 0.0) {
        return Err(Error::param("t_rev", format!("{t_rev} must be positive")));
    }

    let mut report = RevivalReport {
        t_rev,
        full_revivals: Vec::new(),
        fractional_revivals: Vec::new(),
    };
    for k in local_maxima(&trace.magsq) {
        let (time, magsq) = (trace.times[k], trace.magsq[k]);
        if magsq >= full_threshold {
            report.full_revivals.push(FullRevival { time, magsq });
        } else if magsq >= frac_threshold {
            let (p, q, approx_error) = nearest_rational(time / t_rev, q_max);
            report.fractional_revivals.push(FractionalRevival {
                time,
                magsq,
                p,
                q,
                approx_error,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thermal(x: f64, levels: usize) -> Vec<f64> {
        let raw: Vec<f64> = (0..levels).map(|n| x.powi(n as i32)).collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|w| w / total).collect()
    }

    #[test]
    fn pt_spectrum_values() {
        let s = pt_spectrum(2.0).unwrap();
        assert_eq!(s.energy(0), 4.0);
        assert_eq!(s.energy(3), 25.0);
        for rho in [0.5, 2.0, 3.7] {
            let s = pt_spectrum(rho).unwrap();
            for n in 1..20 {
                let d2 = s.energy(n + 1) - 2.0 * s.energy(n) + s.energy(n - 1);
                assert!((d2 - 2.0).abs() < 1e-12);
            }
        }
        assert!(pt_spectrum(0.0).is_err());
    }

    #[test]
    fn trivial_traces() {
        let s = Spectrum::new(0.0, 1.0, 0.0).unwrap();
        let tr = autocorr(&[0.5, 0.5], &s, &[0.0, PI]).unwrap();
        assert!(tr.values[1].norm() < 1e-16);
        let one = autocorr(&[1.0], &pt_spectrum(2.0).unwrap(), &uniform_grid(10.0, 50).unwrap()).unwrap();
        assert!(one.magsq.iter().all(|m| (m - 1.0).abs() < 1e-15));
        let sq = Spectrum::new(1.0, 0.0, 0.0).unwrap();
        let tr = autocorr(&thermal(0.6, 30), &sq, &[0.0, TAU]).unwrap();
        assert!((tr.values[1] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_bad_weights() {
        let s = Spectrum::new(1.0, 0.0, 0.0).unwrap();
        assert!(matches!(
            autocorr(&[0.5, 0.4], &s, &[0.0]),
            Err(Error::WeightNormalization { .. })
        ));
        assert!(autocorr(&[1.5, -0.5], &s, &[0.0]).is_err());
        assert!(autocorr(&[1.0], &s, &[1.0, 0.5]).is_err());
    }

    #[test]
    fn hermitian_symmetry() {
        let s = pt_spectrum(2.5).unwrap();
        let p = thermal(0.7, 25);
        let times: Vec<f64> = (-200..=200).map(|k| k as f64 * 0.031).collect();
        let tr = autocorr(&p, &s, &times).unwrap();
        let n = times.len();
        for k in 0..n {
            assert!((tr.values[k] - tr.values[n - 1 - k].conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn large_phases_are_reduced() {
        // E t far beyond 2^53 ulp resolution of the raw product
        let s = Spectrum::new(1.0, 0.0, 0.0).unwrap();
        let t = TAU * 1e9;
        let tr = autocorr(&thermal(0.5, 10), &s, &[t]).unwrap();
        // t is a float near 2 pi 1e9; compare against an exact-rational style oracle:
        // phase n^2 t mod 2 pi with t - 2 pi 1e9 = delta computed in double-double.
        let delta = (DoubleDouble::from(t) - TWO_PI_DD * DoubleDouble::from(1e9)).to_f64();
        let p = thermal(0.5, 10);
        let want = p.iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (n, &w)| {
            acc + Complex64::from_polar(w, -((n * n) as f64 * delta))
        });
        assert!((tr.values[0] - want).norm() < 1e-6, "{:?} vs {want:?}", tr.values[0]);
    }

    #[test]
    fn revival_periods() {
        let rt = revival_time(&Spectrum::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(rt.t_rev, TAU);
        assert_eq!(rt.t_full, Some(TAU));
        let rho2 = revival_time(&pt_spectrum(2.0).unwrap()).unwrap();
        assert_eq!(rho2.t_full, Some(TAU));
        // n^2 + 5n = n(n+5) is always even: relative phases close at pi.
        let rho25 = revival_time(&pt_spectrum(2.5).unwrap()).unwrap();
        assert_eq!(rho25.t_full, Some(PI));
        let third = revival_time(&Spectrum::new(1.0, 1.0 / 3.0, 0.0).unwrap()).unwrap();
        assert!((third.t_full.unwrap() - 3.0 * PI).abs() < 1e-12);
        let irr = revival_time(&Spectrum::new(1.0, 2f64.sqrt(), 0.0).unwrap()).unwrap();
        assert_eq!(irr.t_full, None);
        assert!(revival_time(&Spectrum::new(0.0, 1.0, 0.0).unwrap()).is_err());
    }

    #[test]
    fn full_period_closes_every_phase() {
        for rho in [0.5, 1.0, 1.5, 2.0, 2.5, 7.0 / 3.0] {
            let s = pt_spectrum(rho).unwrap();
            let t = revival_time(&s).unwrap().t_full.unwrap();
            let p = thermal(0.8, 40);
            let tr = autocorr(&p, &s, &[t]).unwrap();
            assert!(tr.magsq[0] >= 1.0 - 1e-10, "rho = {rho}");
        }
    }

    #[test]
    fn nearest_rational_prefers_small_denominators() {
        assert_eq!(nearest_rational(0.5, 8).0, 1);
        assert_eq!(nearest_rational(0.5, 8).1, 2);
        assert_eq!(nearest_rational(0.4512, 8), (3, 7, (0.4512f64 - 3.0 / 7.0).abs()));
        assert_eq!(nearest_rational(0.4512, 4).1, 2);
        assert_eq!(nearest_rational(1.0, 8), (1, 1, 0.0));
    }

    #[test]
    fn revivals_of_square_spectrum() {
        let s = Spectrum::new(1.0, 0.0, 0.0).unwrap();
        let p = thermal(0.3, 40);
        let times = uniform_grid(2.0 * TAU, 4097).unwrap();
        let tr = autocorr(&p, &s, &times).unwrap();
        let rep = detect_revivals(&tr, TAU, &RevivalParams::default()).unwrap();
        let full: Vec<f64> = rep.full_revivals.iter().map(|r| r.time).collect();
        assert!(full.iter().any(|&t| (t - TAU).abs() < 1e-9));
        assert!(full.iter().any(|&t| (t - 2.0 * TAU).abs() < 1e-9));
        assert!(rep.full_revivals.iter().all(|r| r.magsq >= 0.999));
        // A(pi) = sum p_n (-1)^n
        let alt: f64 = p
            .iter()
            .enumerate()
            .map(|(n, w)| if n % 2 == 0 { *w } else { -*w })
            .sum();
        let half = rep
            .fractional_revivals
            .iter()
            .find(|f| (f.time - PI).abs() < 1e-9)
            .expect("peak at pi");
        assert_eq!((half.p, half.q), (1, 2));
        assert!((half.magsq - alt * alt).abs() < 1e-12);
    }

    #[test]
    fn flat_trace_has_no_peaks() {
        let s = pt_spectrum(2.0).unwrap();
        let tr = autocorr(&[1.0], &s, &uniform_grid(20.0, 300).unwrap()).unwrap();
        let rep = detect_revivals(&tr, TAU, &RevivalParams::default()).unwrap();
        assert!(rep.full_revivals.is_empty() && rep.fractional_revivals.is_empty());
    }

    #[test]
    fn detect_rejects_bad_input() {
        let empty = AutocorrTrace::from_samples(vec![], vec![], vec![]).unwrap();
        assert_eq!(
            detect_revivals(&empty, TAU, &RevivalParams::default()).unwrap_err(),
            Error::EmptyTrace
        );
        let s = Spectrum::new(1.0, 0.0, 0.0).unwrap();
        let tr = autocorr(&[1.0], &s, &[0.0, 1.0]).unwrap();
        let bad = RevivalParams {
            full_threshold: 0.2,
            frac_threshold: 0.5,
            q_max: 4,
        };
        assert!(detect_revivals(&tr, TAU, &bad).is_err());
    }
}
