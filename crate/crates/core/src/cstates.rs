//! Coherent states of the Laguerre class and of the modified Pöschl–Teller
//! (Gegenbauer) class.
//!
//! A state is stored as its expansion over the family polynomials,
//!
//! * Laguerre class: `c_n = Gamma(lambda+1) alpha^n / Gamma(lambda+n+1)` on `L_n^lambda(x)`,
//! * Pöschl–Teller class: `d_n = Gamma(2 rho) q^n / Gamma(2 rho + n)` on `C_n^rho(y)`,
//!
//! truncated at the first order where the population tail drops below a
//! tolerance. Normalisation uses the orthogonality norms of each family:
//! `h_n = Gamma(n+lambda+1)/n!` for weight `x^lambda e^{-x}` on `[0, inf)`, and
//! `h_n = pi 2^{1-2rho} Gamma(n+2rho) / (n! (n+rho) Gamma(rho)^2)` for weight
//! `(1-y^2)^{rho-1/2}` on `[-1, 1]` (the state is normalised in `y`, not `theta`).

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::ladder::{apply, LadderOp, MonoPoly};
use crate::specfun::{bessel_j, gegenbauer_upto, laguerre_upto, ln_gamma};
use crate::{Error, Result};

pub const DEFAULT_TAIL_TOL: f64 = 1e-12;
/// Hard cap on the truncation order.
pub const MAX_TRUNCATION: usize = 500;

/// Multiplicative ground-state factor applied to evaluated wavefunctions.
pub type MeasureHook = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Laguerre { lambda: f64 },
    PoschlTeller { rho: f64 },
}

impl Family {
    fn validate(&self) -> Result<()> {
        match *self {
            Family::Laguerre { lambda } if !(lambda.is_finite() && lambda > -1.0) => {
                Err(Error::param("lambda", format!("{lambda} must exceed -1")))
            }
            Family::PoschlTeller { rho } if !(rho.is_finite() && rho > 0.0) => {
                Err(Error::param("rho", format!("{rho} must be positive")))
            }
            _ => Ok(()),
        }
    }

    /// `ln` of the Gamma ratio in the expansion coefficient, without the
    /// eigenvalue power: `ln Gamma(s) - ln Gamma(s + n)` with `s = lambda+1` or `2 rho`.
    fn ln_coeff_base(&self, n: usize) -> f64 {
        let s = match *self {
            Family::Laguerre { lambda } => lambda + 1.0,
            Family::PoschlTeller { rho } => 2.0 * rho,
        };
        lg(s) - lg(s + n as f64)
    }

    fn ln_norm(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            Family::Laguerre { lambda } => lg(nf + lambda + 1.0) - lg(nf + 1.0),
            Family::PoschlTeller { rho } => {
                std::f64::consts::PI.ln() + (1.0 - 2.0 * rho) * std::f64::consts::LN_2 + lg(nf + 2.0 * rho)
                    - lg(nf + 1.0)
                    - (nf + rho).ln()
                    - 2.0 * lg(rho)
            }
        }
    }

    fn polys(&self, n: usize, arg: f64) -> Vec<f64> {
        match *self {
            Family::Laguerre { lambda } => laguerre_upto(n, lambda, arg),
            Family::PoschlTeller { rho } => gegenbauer_upto(n, rho, arg),
        }
    }
}

/// Arguments are validated before this is reached.
fn lg(x: f64) -> f64 {
    ln_gamma(x).expect("positive gamma argument")
}

/// Squared norms of the family polynomials under their orthogonality weight.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoNorms {
    pub h: Vec<f64>,
}

pub fn ortho_norms(family: Family, max_n: usize) -> Result<OrthoNorms> {
    family.validate()?;
    Ok(OrthoNorms {
        h: (0..=max_n).map(|n| family.ln_norm(n).exp()).collect(),
    })
}

/// A coherent state as a truncated polynomial expansion.
#[derive(Clone)]
pub struct CsExpansion {
    family: Family,
    eigenvalue: Complex64,
    truncation: usize,
    coeffs: Vec<Complex64>,
    norm: f64,
    measure_hook: Option<MeasureHook>,
}

impl fmt::Debug for CsExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CsExpansion")
            .field("family", &self.family)
            .field("eigenvalue", &self.eigenvalue)
            .field("truncation", &self.truncation)
            .field("coeffs", &self.coeffs)
            .field("norm", &self.norm)
            .field("measure_hook", &self.measure_hook.is_some())
            .finish()
    }
}

impl CsExpansion {
    /// State truncated at a fixed order `n`, normalised.
    pub fn with_truncation(family: Family, eigenvalue: Complex64, n: usize) -> Result<Self> {
        family.validate()?;
        check_eigenvalue(eigenvalue)?;
        let coeffs = (0..=n).map(|k| coefficient(family, eigenvalue, k)).collect();
        Ok(normalize(CsExpansion {
            family,
            eigenvalue,
            truncation: n,
            coeffs,
            norm: 1.0,
            measure_hook: None,
        }))
    }

    pub fn with_measure_hook(mut self, hook: MeasureHook) -> Self {
        self.measure_hook = Some(hook);
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn eigenvalue(&self) -> Complex64 {
        self.eigenvalue
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Unnormalised expansion coefficients.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// `sum_n coeffs[n] P_n(arg)` without normalisation or measure factor.
    pub fn series_unnormalized(&self, arg: f64) -> Complex64 {
        let polys = self.family.polys(self.truncation, arg);
        self.coeffs
            .iter()
            .zip(polys)
            .fold(Complex64::zero(), |acc, (c, p)| acc + c * p)
    }

    fn eval(&self, arg: f64) -> Complex64 {
        let v = self.series_unnormalized(arg) / self.norm;
        match &self.measure_hook {
            Some(hook) => v * hook(arg),
            None => v,
        }
    }
}

fn check_eigenvalue(e: Complex64) -> Result<()> {
    if e.re.is_finite() && e.im.is_finite() {
        Ok(())
    } else {
        Err(Error::param("eigenvalue", "must be finite"))
    }
}

/// Expansion coefficient built in log space, with the phase of `e^n` tracked
/// separately (exact signs for real eigenvalues).
fn coefficient(family: Family, e: Complex64, n: usize) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if e.is_zero() {
        return Complex64::zero();
    }
    let magnitude = (family.ln_coeff_base(n) + n as f64 * e.norm().ln()).exp();
    if e.im == 0.0 {
        let sign = if e.re < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        Complex64::new(sign * magnitude, 0.0)
    } else {
        Complex64::from_polar(magnitude, n as f64 * e.arg())
    }
}

/// Smallest order `N` with `sum_{n>N} w_n <= tol^2 sum_{n<=N} w_n`, where
/// `w_n = |coeff_n|^2 h_n`; weights past [`MAX_TRUNCATION`] are not seen.
fn truncation_order(family: Family, e: Complex64, tail_tol: f64) -> usize {
    if e.is_zero() {
        return 0;
    }
    let ln_e = e.norm().ln();
    let lw: Vec<f64> = (0..=MAX_TRUNCATION)
        .map(|n| 2.0 * (family.ln_coeff_base(n) + n as f64 * ln_e) + family.ln_norm(n))
        .collect();
    let peak = lw.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = lw.iter().map(|l| (l - peak).exp()).collect();

    let mut tail = vec![0.0; w.len() + 1];
    for n in (0..w.len()).rev() {
        tail[n] = tail[n + 1] + w[n];
    }
    let mut head = 0.0;
    let tol2 = tail_tol * tail_tol;
    for (n, wn) in w.iter().enumerate() {
        head += wn;
        if tail[n + 1] <= tol2 * head {
            return n;
        }
    }
    MAX_TRUNCATION
}

fn build(family: Family, e: Complex64, tail_tol: f64) -> Result<CsExpansion> {
    family.validate()?;
    check_eigenvalue(e)?;
    if !(tail_tol.is_finite() && tail_tol > 0.0) {
        return Err(Error::param("tail_tol", format!("{tail_tol} must be positive")));
    }
    let n = truncation_order(family, e, tail_tol);
    CsExpansion::with_truncation(family, e, n)
}

/// Laguerre-class state with eigenvalue `alpha`, truncated by the weighted-tail rule.
pub fn build_laguerre_cs(lambda: f64, alpha: Complex64, tail_tol: f64) -> Result<CsExpansion> {
    build(Family::Laguerre { lambda }, alpha, tail_tol)
}

/// Pöschl–Teller-class state with eigenvalue `q`, truncated by the weighted-tail rule.
pub fn build_pt_cs(rho: f64, q: Complex64, tail_tol: f64) -> Result<CsExpansion> {
    build(Family::PoschlTeller { rho }, q, tail_tol)
}

/// Sets `norm = sqrt(sum_n |coeffs[n]|^2 h_n)`.
pub fn normalize(mut cs: CsExpansion) -> CsExpansion {
    let norm2: f64 = cs
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c.norm_sqr() * cs.family.ln_norm(n).exp())
        .sum();
    cs.norm = norm2.sqrt();
    cs
}

/// Level populations `p_n = |coeffs[n]|^2 h_n / norm^2`.
///
/// Divides by the freshly summed total rather than `norm^2` so the
/// populations sum to one without the square-root round trip.
pub fn weights(cs: &CsExpansion) -> Vec<f64> {
    let raw: Vec<f64> = cs
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c.norm_sqr() * cs.family.ln_norm(n).exp())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / total).collect()
}

/// Normalised Laguerre-class wavefunction at `x` (times the measure hook, if any).
pub fn eval_laguerre_cs(cs: &CsExpansion, x: f64) -> Result<Complex64> {
    match cs.family {
        Family::Laguerre { .. } => Ok(cs.eval(x)),
        _ => Err(Error::FamilyMismatch { expected: "laguerre" }),
    }
}

/// Normalised Pöschl–Teller-class wavefunction at `y = cos theta`.
pub fn eval_pt_cs(cs: &CsExpansion, y: f64) -> Result<Complex64> {
    match cs.family {
        Family::PoschlTeller { .. } => Ok(cs.eval(y)),
        _ => Err(Error::FamilyMismatch {
            expected: "poschl_teller",
        }),
    }
}

/// Closed form of the unnormalised Laguerre-class series,
/// `Gamma(lambda+1) (x alpha)^{-lambda/2} e^alpha J_lambda(2 sqrt(x alpha))`,
/// on the real positive branch.
pub fn eval_laguerre_cs_closed(lambda: f64, alpha: f64, x: f64) -> Result<f64> {
    Family::Laguerre { lambda }.validate()?;
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::Domain {
            func: "eval_laguerre_cs_closed",
            value: alpha,
            reason: "alpha must be positive",
        });
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain {
            func: "eval_laguerre_cs_closed",
            value: x,
            reason: "x must be positive",
        });
    }
    let xa = x * alpha;
    let j = bessel_j(lambda, 2.0 * xa.sqrt())?;
    Ok((lg(lambda + 1.0) - 0.5 * lambda * xa.ln() + alpha).exp() * j)
}

/// Closed form of the unnormalised Pöschl–Teller-class series at `y = cos theta`,
/// `Gamma(rho+1/2) e^{q cos theta} (q sin theta / 2)^{1/2-rho} J_{rho-1/2}(q sin theta)`,
/// from the Gegenbauer generating function.
pub fn eval_pt_cs_closed(rho: f64, q: f64, theta: f64) -> Result<f64> {
    Family::PoschlTeller { rho }.validate()?;
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::Domain {
            func: "eval_pt_cs_closed",
            value: q,
            reason: "q must be positive",
        });
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::Domain {
            func: "eval_pt_cs_closed",
            value: theta,
            reason: "theta must lie strictly inside (0, pi)",
        });
    }
    let arg = q * theta.sin();
    let j = bessel_j(rho - 0.5, arg)?;
    Ok((lg(rho + 0.5) + q * theta.cos() + (0.5 - rho) * (0.5 * arg).ln()).exp() * j)
}

/// Operator family for the exact annihilation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraFamily {
    Laguerre { lambda: BigRational },
    Hypergeometric { b: BigRational, c: BigRational },
}

impl AlgebraFamily {
    fn lowering(&self) -> LadderOp {
        match self {
            AlgebraFamily::Laguerre { lambda } => LadderOp::KMinus { lambda: lambda.clone() },
            AlgebraFamily::Hypergeometric { b, c } => LadderOp::HypKMinus {
                b: b.clone(),
                c: c.clone(),
            },
        }
    }

    fn conjugate_raising(&self) -> LadderOp {
        match self {
            AlgebraFamily::Laguerre { lambda } => LadderOp::KTildePlus { lambda: lambda.clone() },
            AlgebraFamily::Hypergeometric { b, c } => LadderOp::HypKTildePlus {
                b: b.clone(),
                c: c.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnihilationCheck {
    /// `||(K- + e) psi_N|| / ||psi_N||` over coefficient vectors.
    pub residual: f64,
    /// Whether every component of degree below `N` vanished exactly.
    pub lower_degrees_exact: bool,
    pub truncation: usize,
}

/// Builds `psi_N = sum_{n<=N} ((-e)^n / n!) K~+^n x^0` exactly and measures
/// how far it is from satisfying `(K- + e) psi = 0`.
///
/// Since `[K-, K~+] = 1`, the only surviving component is the truncation term
/// `e (-e)^N / N! K~+^N x^0` at degree `N`; everything below cancels exactly.
pub fn verify_annihilation(family: &AlgebraFamily, eigenvalue: &BigRational, n: usize) -> Result<AnnihilationCheck> {
    if n < 2 {
        return Err(Error::param("N", format!("{n} must be at least 2")));
    }
    let raise = family.conjugate_raising();
    let lower = family.lowering();
    let minus_e = -eigenvalue;

    let mut term = MonoPoly::monomial(0);
    let mut state = term.clone();
    for k in 1..=n {
        let step = &minus_e / BigRational::from_integer((k as i64).into());
        term = apply(&raise, &term)?.scale(&step);
        state = &state + &term;
    }

    let image = &apply(&lower, &state)? + &state.scale(eigenvalue);
    Ok(AnnihilationCheck {
        residual: image.coeff_norm() / state.coeff_norm(),
        lower_degrees_exact: image.truncate(n - 1).is_zero(),
        truncation: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::{rat, ratio};
    use crate::specfun::pochhammer;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn zero_eigenvalue_is_ground_level() {
        let cs = build_laguerre_cs(2.0, re(0.0), 1e-12).unwrap();
        assert_eq!(cs.truncation(), 0);
        assert_eq!(cs.coeffs(), &[re(1.0)]);
        assert_eq!(weights(&cs), vec![1.0]);
        // norm = sqrt(h_0) = sqrt(Gamma(3))
        assert!((cs.norm() - 2f64.sqrt()).abs() < 1e-15);
        let v = eval_laguerre_cs(&cs, 7.3).unwrap();
        assert!((v - re(1.0 / cs.norm())).norm() < 1e-15);

        let pt = build_pt_cs(2.0, re(0.0), 1e-12).unwrap();
        assert_eq!(weights(&pt), vec![1.0]);
        let v = eval_pt_cs(&pt, -0.4).unwrap();
        assert!((v - re(1.0 / pt.norm())).norm() < 1e-15);
    }

    #[test]
    fn coefficient_ratios() {
        let lambda = 2.0;
        let alpha = re(3.0);
        let cs = build_laguerre_cs(lambda, alpha, 1e-12).unwrap();
        for (n, w) in cs.coeffs().windows(2).enumerate() {
            let want = alpha / (lambda + n as f64 + 1.0);
            assert!(((w[1] / w[0]) - want).norm() <= 1e-13 * want.norm(), "n = {n}");
        }
        let rho = 2.0;
        let q = Complex64::new(1.5, -2.0);
        let pt = build_pt_cs(rho, q, 1e-12).unwrap();
        for (n, w) in pt.coeffs().windows(2).enumerate() {
            let want = q / (2.0 * rho + n as f64);
            assert!(((w[1] / w[0]) - want).norm() <= 1e-13 * want.norm(), "n = {n}");
        }
    }

    #[test]
    fn negative_real_eigenvalue_alternates_exactly() {
        let cs = build_laguerre_cs(0.5, re(-2.0), 1e-12).unwrap();
        for (n, c) in cs.coeffs().iter().enumerate() {
            assert_eq!(c.im, 0.0);
            assert_eq!(c.re < 0.0, n % 2 == 1);
        }
    }

    /// Brute-force population sums out to n = 500 as the tail oracle.
    fn brute_weights(family: Family, e: f64) -> Vec<f64> {
        let mut c = 1.0f64;
        let mut out = Vec::new();
        for n in 0..=500usize {
            let h = ortho_norms(family, n).unwrap().h[n];
            out.push(c * c * h);
            let s = match family {
                Family::Laguerre { lambda } => lambda + 1.0,
                Family::PoschlTeller { rho } => 2.0 * rho,
            };
            c *= e / (s + n as f64);
        }
        out
    }

    #[test]
    fn truncation_meets_tail_rule() {
        for (family, e) in [
            (Family::Laguerre { lambda: 2.0 }, 3.0),
            (Family::PoschlTeller { rho: 2.0 }, 5.0),
        ] {
            let cs = build(family, re(e), 1e-12).unwrap();
            let n = cs.truncation();
            let w = brute_weights(family, e);
            let head: f64 = w[..=n].iter().sum();
            let tail: f64 = w[n + 1..].iter().sum();
            assert!(tail <= 1e-24 * head, "{family:?}: N = {n}");
            // one order less must violate the rule
            let head1: f64 = w[..n].iter().sum();
            let tail1: f64 = w[n..].iter().sum();
            assert!(tail1 > 1e-24 * head1, "{family:?}: N = {n} not minimal");
            let p = weights(&cs);
            for k in 0..=n {
                assert!((p[k] - w[k] / head).abs() <= 1e-12, "{family:?} k = {k}");
            }
        }
    }

    #[test]
    fn populations_sum_to_one_and_are_unimodal() {
        let cs = build_pt_cs(2.0, re(5.0), 1e-12).unwrap();
        let p = weights(&cs);
        let total: f64 = p.iter().sum();
        assert!((total - 1.0).abs() <= 1e-12);
        let peak = p.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        assert!(p[..=peak].windows(2).all(|w| w[0] <= w[1]));
        assert!(p[peak..].windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn laguerre_state_at_origin() {
        // L_n^lambda(0) = (lambda+1)_n / n!
        let (lambda, alpha) = (1.0, 2.0);
        let cs = CsExpansion::with_truncation(Family::Laguerre { lambda }, re(alpha), 80).unwrap();
        let mut oracle = 0.0;
        let mut c = 1.0;
        for n in 0..=80usize {
            oracle += c * pochhammer(lambda + 1.0, n) / pochhammer(1.0, n);
            c *= alpha / (lambda + n as f64 + 1.0);
        }
        let got = cs.series_unnormalized(0.0);
        assert!((got.re - oracle).abs() <= 1e-13 * oracle);
        // x -> 0+ limit of the closed form: Gamma(lambda+1) e^alpha / Gamma(lambda+1)
        let closed = eval_laguerre_cs_closed(lambda, alpha, 1e-12).unwrap();
        assert!((closed - alpha.exp()).abs() <= 1e-10 * alpha.exp());
        assert!((oracle - alpha.exp()).abs() <= 1e-13 * oracle);
    }

    #[test]
    fn pt_series_at_y_one_is_exponential() {
        let q = 5.0;
        let cs = CsExpansion::with_truncation(Family::PoschlTeller { rho: 2.0 }, re(q), 200).unwrap();
        let got = cs.series_unnormalized(1.0).re;
        assert!((got - q.exp()).abs() <= 1e-13 * q.exp());
    }

    #[test]
    fn closed_forms_match_series() {
        let lag = CsExpansion::with_truncation(Family::Laguerre { lambda: 2.0 }, re(3.0), 200).unwrap();
        let s = lag.series_unnormalized(5.0).re;
        let c = eval_laguerre_cs_closed(2.0, 3.0, 5.0).unwrap();
        assert!((s - c).abs() <= 1e-8 * s.abs());

        let pt = CsExpansion::with_truncation(Family::PoschlTeller { rho: 2.0 }, re(5.0), 200).unwrap();
        for theta in [1.0, std::f64::consts::FRAC_PI_2] {
            let s = pt.series_unnormalized(theta.cos()).re;
            let c = eval_pt_cs_closed(2.0, 5.0, theta).unwrap();
            assert!((s - c).abs() <= 1e-8 * s.abs(), "theta = {theta}");
        }
    }

    #[test]
    fn pt_closed_form_small_q_limit() {
        // both sides tend to the C_0 term, 1
        for rho in [1.0, 2.0, 3.5] {
            let v = eval_pt_cs_closed(rho, 1e-6, 1.0).unwrap();
            assert!((v - 1.0).abs() < 1e-5, "rho = {rho}: {v}");
        }
    }

    #[test]
    fn closed_form_domains() {
        assert!(eval_pt_cs_closed(2.0, 5.0, 0.0).is_err());
        assert!(eval_pt_cs_closed(2.0, 5.0, std::f64::consts::PI).is_err());
        assert!(eval_laguerre_cs_closed(2.0, -1.0, 1.0).is_err());
        assert!(eval_laguerre_cs_closed(2.0, 1.0, 0.0).is_err());
        assert!(build_laguerre_cs(-1.0, re(1.0), 1e-12).is_err());
        assert!(build_pt_cs(0.0, re(1.0), 1e-12).is_err());
        assert!(build_pt_cs(1.0, re(1.0), 0.0).is_err());
    }

    #[test]
    fn family_mismatch() {
        let cs = build_pt_cs(2.0, re(1.0), 1e-12).unwrap();
        assert!(eval_laguerre_cs(&cs, 1.0).is_err());
    }

    #[test]
    fn measure_hook_multiplies() {
        let cs = build_laguerre_cs(0.5, re(1.0), 1e-12).unwrap();
        let plain = eval_laguerre_cs(&cs, 2.0).unwrap();
        let hooked = cs.with_measure_hook(Arc::new(|x: f64| (-x / 2.0).exp()));
        let v = eval_laguerre_cs(&hooked, 2.0).unwrap();
        assert!((v - plain * (-1.0f64).exp()).norm() < 1e-15);
    }

    #[test]
    fn annihilation_zero_eigenvalue() {
        let fam = AlgebraFamily::Laguerre { lambda: rat(2) };
        let chk = verify_annihilation(&fam, &rat(0), 10).unwrap();
        assert_eq!(chk.residual, 0.0);
        assert!(chk.lower_degrees_exact);
        assert!(verify_annihilation(&fam, &rat(1), 1).is_err());
    }

    #[test]
    fn annihilation_residual_is_truncation_term() {
        // Laguerre class: K~+^N x^0 = x^N / (lambda+1)_N, so the residual
        // vector is e (-e)^N / (N! (lambda+1)_N) x^N.
        let lambda = 2.0;
        let e = 1.5;
        let fam = AlgebraFamily::Laguerre { lambda: rat(2) };
        for n in [10usize, 20, 40] {
            let chk = verify_annihilation(&fam, &ratio(3, 2), n).unwrap();
            assert!(chk.lower_degrees_exact);
            let mut state2 = 0.0;
            let mut c = 1.0f64;
            for k in 0..=n {
                state2 += c * c;
                c *= -e / ((k + 1) as f64 * (lambda + k as f64 + 1.0));
            }
            let top = e.powi(n as i32 + 1) / (pochhammer(1.0, n) * pochhammer(lambda + 1.0, n));
            let want = top / state2.sqrt();
            assert!((chk.residual - want).abs() <= 1e-12 * want, "N = {n}");
        }
        let chk = verify_annihilation(&fam, &ratio(3, 2), 40).unwrap();
        assert!(chk.residual <= 1e-12);
    }

    #[test]
    fn annihilation_hypergeometric() {
        let fam = AlgebraFamily::Hypergeometric {
            b: rat(4),
            c: ratio(5, 2),
        };
        let r: Vec<f64> = [10, 20, 40]
            .iter()
            .map(|&n| verify_annihilation(&fam, &ratio(3, 2), n).unwrap().residual)
            .collect();
        assert!(r[0] > r[1] && r[1] > r[2]);
        assert!(r[2] <= 1e-12);
    }
}
