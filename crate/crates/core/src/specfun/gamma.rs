#![allow(clippy::excessive_precision)]

use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

/// `zeta(k) - 1` for `k = 2..=32`.
const ZETA_MINUS_ONE: [f64; 31] = [
    0.644_934_066_848_226_436_47,
    0.202_056_903_159_594_285_4,
    0.082_323_233_711_138_191_516,
    0.036_927_755_143_369_926_331,
    0.017_343_061_984_449_139_715,
    0.008_349_277_381_922_826_839_8,
    0.004_077_356_197_944_339_378_7,
    0.002_008_392_826_082_214_417_9,
    0.000_994_575_127_818_085_337_15,
    0.000_494_188_604_119_464_558_7,
    0.000_246_086_553_308_048_298_64,
    0.000_122_713_347_578_489_146_75,
    6.124_813_505_870_482_925_9e-5,
    3.058_823_630_702_049_355_2e-5,
    1.528_225_940_865_187_173_3e-5,
    7.637_197_637_899_762_273_6e-6,
    3.817_293_264_999_839_856_5e-6,
    1.908_212_716_553_938_925_7e-6,
    9.539_620_338_727_961_131_5e-7,
    4.769_329_867_878_064_631_2e-7,
    2.384_505_027_277_329_9e-7,
    1.192_199_259_653_110_730_7e-7,
    5.960_818_905_125_947_961_2e-8,
    2.980_350_351_465_228_018_6e-8,
    1.490_155_482_836_504_123_5e-8,
    7.450_711_789_835_429_492e-9,
    3.725_334_024_788_457_054_8e-9,
    1.862_659_723_513_049_006_4e-9,
    9.313_274_324_196_681_828_7e-10,
    4.656_629_065_033_784_073e-10,
    2.328_311_833_676_505_492e-10,
];

/// `B_{2k} / (2k (2k-1))` for `k = 1..=8`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_78;

/// `ln Gamma(2 + z)` for `|z| <= 1/2` from the Taylor expansion about 2,
/// `(1 - gamma) z + sum_k (-1)^k (zeta(k) - 1) z^k / k`.
fn ln_gamma_near_two(z: f64) -> f64 {
    let mut acc = 0.0;
    for (i, &zm1) in ZETA_MINUS_ONE.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if (i + 2) % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * z + sign * zm1 / k;
    }
    // acc now holds sum_k c_k z^(k-2).
    z * ((1.0 - EULER_GAMMA) + z * acc)
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for &c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series * inv
}

/// Natural logarithm of the gamma function for `x > 0`.
///
/// Near the zeros of `ln Gamma` at 1 and 2 a Taylor kernel keeps the error
/// relative; on `(2.5, 10)` the argument is reduced downward onto that kernel,
/// and from 10 up the Stirling series is used.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain {
            func: "ln_gamma",
            value: x,
            reason: "requires finite x > 0",
        });
    }
    Ok(ln_gamma_pos(x))
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma_pos(x + 1.0) - x.ln()
    } else if x <= 1.5 {
        let z = x - 1.0;
        ln_gamma_near_two(z) - z.ln_1p()
    } else if x <= 2.5 {
        ln_gamma_near_two(x - 2.0)
    } else if x < 10.0 {
        let shift = (x - 2.5).ceil();
        let base = x - shift;
        let mut prod = 1.0;
        let mut t = base;
        while t < x {
            prod *= t;
            t += 1.0;
        }
        ln_gamma_near_two(base - 2.0) + prod.ln()
    } else {
        ln_gamma_stirling(x)
    }
}

/// `sin(pi x)` with the argument reduced before scaling by pi.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (std::f64::consts::PI * r).sin()
}

/// `(ln |Gamma(x)|, sign Gamma(x))` for any real `x` that is not a pole.
pub(crate) fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x > 0.0 {
        return ln_gamma(x).map(|v| (v, 1.0));
    }
    if !x.is_finite() || x == x.floor() {
        return Err(Error::Domain {
            func: "gamma",
            value: x,
            reason: "pole at non-positive integer",
        });
    }
    let s = sin_pi(x);
    let ln_abs = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
    Ok((ln_abs, s.signum()))
}

/// Rising factorial `a (a+1) ... (a+n-1)`; `n = 0` gives 1.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    /// ln Gamma at half-integers by upward recurrence from Gamma(1/2) = sqrt(pi).
    fn half_integer_oracle(x: f64) -> f64 {
        let mut acc = 0.5 * std::f64::consts::PI.ln();
        let mut t = 0.5;
        while t < x - 0.25 {
            acc += t.ln();
            t += 1.0;
        }
        acc
    }

    #[test]
    fn anchors() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        let sqrt_pi_ln = 0.5 * std::f64::consts::PI.ln();
        assert!(rel(ln_gamma(0.5).unwrap(), sqrt_pi_ln) < 1e-15);
    }

    #[test]
    fn half_integers_match_recurrence() {
        assert!(rel(ln_gamma(10.5).unwrap(), half_integer_oracle(10.5)) < 1e-14);
        // Reference from a 40-digit evaluation.
        assert!(rel(ln_gamma(10.5).unwrap(), 13.940_625_219_403_763_633) < 1e-15);
        for k in 0..200 {
            let x = k as f64 + 0.5;
            assert!(rel(ln_gamma(x).unwrap(), half_integer_oracle(x)) < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn integers_match_log_factorials() {
        let mut lf = 0.0f64;
        for n in 1..=200usize {
            // lf = ln((n-1)!)
            if n >= 3 {
                let v = ln_gamma(n as f64).unwrap();
                assert!(rel(v, lf) < 1e-13, "n = {n}");
            }
            lf += (n as f64).ln();
        }
        assert!(rel(ln_gamma(200.0).unwrap(), 857.933_669_825_857_436_8) < 1e-15);
    }

    #[test]
    fn near_zeros_stays_relative() {
        // ln Gamma(1.3) from a 40-digit evaluation.
        assert!(rel(ln_gamma(1.3).unwrap(), -0.108_174_809_507_860_478_46) < 1e-14);
        // Gamma(x+1) = x Gamma(x) across the kernel boundaries.
        for i in 1..400 {
            let x = 0.5 + i as f64 * 0.005;
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(1e-2), "x = {x}");
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
    }

    #[test]
    fn reflection_for_negative_arguments() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let (l, s) = ln_gamma_signed(-0.5).unwrap();
        assert_eq!(s, -1.0);
        assert!(rel(l, (2.0 * std::f64::consts::PI.sqrt()).ln()) < 1e-14);
        // Gamma(-3/2) = 4 sqrt(pi) / 3
        let (l, s) = ln_gamma_signed(-1.5).unwrap();
        assert_eq!(s, 1.0);
        assert!(rel(l, (4.0 * std::f64::consts::PI.sqrt() / 3.0).ln()) < 1e-14);
        assert!(ln_gamma_signed(-2.0).is_err());
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
        assert_eq!(pochhammer(-2.0, 5), 0.0);
        // (lambda+1)_n against the gamma ratio for lambda = 1.5, n = 7.
        let direct = pochhammer(2.5, 7);
        let ratio = (ln_gamma(9.5).unwrap() - ln_gamma(2.5).unwrap()).exp();
        assert!(rel(direct, ratio) < 1e-12);
    }
}
