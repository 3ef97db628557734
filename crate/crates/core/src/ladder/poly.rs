use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Polynomial as an exact coefficient vector over the monomial basis;
/// `coeffs[k]` multiplies `x^k`.
///
/// Kept canonical: trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients and structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonoPoly {
    coeffs: Vec<BigRational>,
}

impl MonoPoly {
    pub fn zero() -> Self {
        MonoPoly { coeffs: Vec::new() }
    }

    pub fn monomial(n: usize) -> Self {
        Self::monomial_with(n, BigRational::from_integer(1.into()))
    }

    pub fn monomial_with(n: usize, coeff: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        MonoPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Non-zero terms as `(degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    /// Exact evaluation.
    ///
    /// Runs Horner over integers after clearing denominators, so no
    /// intermediate gcd reductions are needed.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let Some(n) = self.degree() else {
            return BigRational::zero();
        };
        let d = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (u, v) = (x.numer(), x.denom());
        let mut v_pow = vec![BigInt::one(); n + 1];
        for k in 1..=n {
            v_pow[k] = &v_pow[k - 1] * v;
        }
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let a = c.numer() * (&d / c.denom());
            acc = acc * u + a * &v_pow[n - k];
        }
        BigRational::new(acc, d * &v_pow[n])
    }

    /// Evaluates exactly at the rational value of `x` and rounds once.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let xr = BigRational::from_float(x).expect("finite evaluation point");
        self.eval(&xr).to_f64().unwrap_or(f64::NAN)
    }

    /// Euclidean norm of the coefficient vector, rounded to `f64`.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }
}

impl Add for &MonoPoly {
    type Output = MonoPoly;
    fn add(self, rhs: &MonoPoly) -> MonoPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        MonoPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &MonoPoly {
    type Output = MonoPoly;
    fn sub(self, rhs: &MonoPoly) -> MonoPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        MonoPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Add for MonoPoly {
    type Output = MonoPoly;
    fn add(self, rhs: MonoPoly) -> MonoPoly {
        &self + &rhs
    }
}

impl Sub for MonoPoly {
    type Output = MonoPoly;
    fn sub(self, rhs: MonoPoly) -> MonoPoly {
        &self - &rhs
    }
}

impl Neg for &MonoPoly {
    type Output = MonoPoly;
    fn neg(self) -> MonoPoly {
        MonoPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
