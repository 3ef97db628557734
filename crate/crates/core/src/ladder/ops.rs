use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::MonoPoly;
use super::rat;
use crate::{Error, Result};

/// A ladder generator together with its family parameters.
///
/// Laguerre-class generators (parameter `lambda`):
///
/// | op            | action on `x^n`                     |
/// |---------------|-------------------------------------|
/// | `KPlus`       | `x^{n+1}`                           |
/// | `KMinus`      | `n (n + lambda) x^{n-1}`            |
/// | `K3`          | `(n + (lambda + 1)/2) x^n`          |
/// | `KTildePlus`  | `x^{n+1} / (n + 1 + lambda)`        |
///
/// Hypergeometric-class generators (parameters `b`, `c`):
///
/// | op              | action on `z^n`                         |
/// |-----------------|-----------------------------------------|
/// | `HypKMinus`     | `n (n - 1 + c) / (n - 1 + b) z^{n-1}`   |
/// | `HypKTildePlus` | `(n + b) / (n + c) z^{n+1}`             |
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LadderOp {
    KPlus { lambda: BigRational },
    KMinus { lambda: BigRational },
    K3 { lambda: BigRational },
    KTildePlus { lambda: BigRational },
    HypKMinus { b: BigRational, c: BigRational },
    HypKTildePlus { b: BigRational, c: BigRational },
}

impl LadderOp {
    pub fn name(&self) -> &'static str {
        match self {
            LadderOp::KPlus { .. } => "K+",
            LadderOp::KMinus { .. } => "K-",
            LadderOp::K3 { .. } => "K3",
            LadderOp::KTildePlus { .. } => "K~+",
            LadderOp::HypKMinus { .. } => "hypK-",
            LadderOp::HypKTildePlus { .. } => "hypK~+",
        }
    }

    /// Image of the single monomial `x^n` as `(degree, factor)`, or `None` when
    /// the monomial is annihilated.
    pub fn on_monomial(&self, n: usize) -> Result<Option<(usize, BigRational)>> {
        let nr = rat(n as i64);
        let degenerate = || Error::Degenerate {
            op: self.name(),
            degree: n,
        };
        let image = match self {
            LadderOp::KPlus { .. } => Some((n + 1, BigRational::one())),
            LadderOp::KMinus { lambda } => (n > 0).then(|| (n - 1, &nr * (&nr + lambda))),
            LadderOp::K3 { lambda } => {
                let half = BigRational::new(1.into(), 2.into());
                Some((n, &nr + (lambda + BigRational::one()) * half))
            }
            LadderOp::KTildePlus { lambda } => {
                let den = &nr + BigRational::one() + lambda;
                if den.is_zero() {
                    return Err(degenerate());
                }
                Some((n + 1, den.recip()))
            }
            LadderOp::HypKMinus { b, c } => {
                if n == 0 {
                    None
                } else {
                    let num = &nr * (&nr - BigRational::one() + c);
                    let den = &nr - BigRational::one() + b;
                    if num.is_zero() {
                        None
                    } else if den.is_zero() {
                        return Err(degenerate());
                    } else {
                        Some((n - 1, num / den))
                    }
                }
            }
            LadderOp::HypKTildePlus { b, c } => {
                let den = &nr + c;
                if den.is_zero() {
                    return Err(degenerate());
                }
                Some((n + 1, (&nr + b) / den))
            }
        };
        Ok(image.filter(|(_, f)| !f.is_zero()))
    }
}

/// Exact linear action of `op` on `p`.
pub fn apply(op: &LadderOp, p: &MonoPoly) -> Result<MonoPoly> {
    let len = p.coeffs().len() + 1;
    let mut out = vec![BigRational::zero(); len];
    for (n, c) in p.terms() {
        if let Some((m, f)) = op.on_monomial(n)? {
            out[m] += c * f;
        }
    }
    Ok(MonoPoly::from_coeffs(out))
}

/// `(A B - B A) p`, exactly.
pub fn commutator(a: &LadderOp, b: &LadderOp, p: &MonoPoly) -> Result<MonoPoly> {
    let ab = apply(a, &apply(b, p)?)?;
    let ba = apply(b, &apply(a, p)?)?;
    Ok(&ab - &ba)
}
