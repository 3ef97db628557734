use std::str::FromStr;

use cohstate::dynamics::Spectrum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

/// Exact rational from `p/q`, an integer, or a plain decimal such as `-2.125`.
pub fn rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("cannot read {s:?} as a rational (use p/q, an integer or a decimal)");
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let den: BigInt = BigInt::from(10u32).pow(frac.len() as u32);
    let value = BigRational::new(num, den);
    Ok(if sign < 0 { -value } else { value })
}

/// `a,b,c` for `E(n) = a n^2 + b n + c`.
pub fn spectrum(s: &str) -> Result<Spectrum, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("spectrum {s:?} must have the form a,b,c"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("cannot read {p:?} as a number"))?;
    }
    Spectrum::new(v[0], v[1], v[2]).map_err(|e| e.to_string())
}

pub fn show(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
