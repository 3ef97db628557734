//! Commutator identity checks over a range of monomial degrees.

use num_rational::BigRational;
use serde::Serialize;

use super::ops::{apply, commutator, LadderOp};
use super::poly::MonoPoly;
use super::rat;
use crate::Result;

/// Outcome of one identity checked on `x^0 ..= x^max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub family: String,
    pub params: String,
    pub max_degree: usize,
    pub pass: bool,
    /// Lowest degree on which the two sides differ.
    pub first_failure: Option<usize>,
}

/// The three Laguerre-class su(1,1) generators. Fields are public so a
/// deliberately mismatched set can serve as a negative control.
#[derive(Debug, Clone)]
pub struct Su11Generators {
    pub k_plus: LadderOp,
    pub k_minus: LadderOp,
    pub k3: LadderOp,
}

impl Su11Generators {
    pub fn new(lambda: &BigRational) -> Self {
        Su11Generators {
            k_plus: LadderOp::KPlus { lambda: lambda.clone() },
            k_minus: LadderOp::KMinus { lambda: lambda.clone() },
            k3: LadderOp::K3 { lambda: lambda.clone() },
        }
    }
}

fn check<F>(identity: &str, family: &str, params: String, max_degree: usize, residual: F) -> Result<IdentityCheck>
where
    F: Fn(&MonoPoly) -> Result<MonoPoly>,
{
    let mut first_failure = None;
    for n in 0..=max_degree {
        if !residual(&MonoPoly::monomial(n))?.is_zero() {
            first_failure = Some(n);
            break;
        }
    }
    Ok(IdentityCheck {
        identity: identity.to_string(),
        family: family.to_string(),
        params,
        max_degree,
        pass: first_failure.is_none(),
        first_failure,
    })
}

/// `[K+, K-] = -2 K3`, `[K3, K+] = K+`, `[K3, K-] = -K-`.
pub fn check_su11(gens: &Su11Generators, lambda: &BigRational, max_degree: usize) -> Result<Vec<IdentityCheck>> {
    let params = format!("lambda={lambda}");
    let Su11Generators { k_plus, k_minus, k3 } = gens;
    Ok(vec![
        check("[K+,K-] = -2K3", "laguerre", params.clone(), max_degree, |x| {
            let lhs = commutator(k_plus, k_minus, x)?;
            let rhs = apply(k3, x)?.scale(&rat(-2));
            Ok(&lhs - &rhs)
        })?,
        check("[K3,K+] = +K+", "laguerre", params.clone(), max_degree, |x| {
            Ok(&commutator(k3, k_plus, x)? - &apply(k_plus, x)?)
        })?,
        check("[K3,K-] = -K-", "laguerre", params, max_degree, |x| {
            Ok(&commutator(k3, k_minus, x)? + &apply(k_minus, x)?)
        })?,
    ])
}

/// `[K-, K~+] = 1` with `K~+ = (D + lambda)^{-1} x`.
pub fn check_laguerre_pair(lambda: &BigRational, max_degree: usize) -> Result<IdentityCheck> {
    let km = LadderOp::KMinus { lambda: lambda.clone() };
    let kt = LadderOp::KTildePlus { lambda: lambda.clone() };
    check(
        "[K-,K~+] = 1",
        "laguerre",
        format!("lambda={lambda}"),
        max_degree,
        |x| Ok(&commutator(&km, &kt, x)? - x),
    )
}

/// `[K-, K~+] = 1` for the hypergeometric-class pair.
pub fn check_hyp_pair(b: &BigRational, c: &BigRational, max_degree: usize) -> Result<IdentityCheck> {
    let km = LadderOp::HypKMinus {
        b: b.clone(),
        c: c.clone(),
    };
    let kt = LadderOp::HypKTildePlus {
        b: b.clone(),
        c: c.clone(),
    };
    check(
        "[K-,K~+] = 1",
        "hypergeometric",
        format!("b={b},c={c}"),
        max_degree,
        |x| Ok(&commutator(&km, &kt, x)? - x),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::ratio;

    #[test]
    fn all_identities_hold() {
        for lambda in [rat(0), ratio(1, 2), rat(1), ratio(5, 2)] {
            for c in check_su11(&Su11Generators::new(&lambda), &lambda, 30).unwrap() {
                assert!(c.pass, "{c:?}");
            }
            assert!(check_laguerre_pair(&lambda, 30).unwrap().pass);
        }
        for (b, c) in [(rat(4), ratio(5, 2)), (rat(12), ratio(5, 2)), (rat(7), rat(3))] {
            assert!(check_hyp_pair(&b, &c, 30).unwrap().pass);
        }
    }

    #[test]
    fn mismatched_k3_is_caught() {
        let lambda = ratio(3, 2);
        let mut gens = Su11Generators::new(&lambda);
        gens.k3 = LadderOp::K3 {
            lambda: &lambda + rat(1),
        };
        let checks = check_su11(&gens, &lambda, 5).unwrap();
        assert!(!checks[0].pass);
        assert_eq!(checks[0].first_failure, Some(0));
        // A shifted K3 still commutes correctly with K+ and K-.
        assert!(checks[1].pass && checks[2].pass);
    }
}
