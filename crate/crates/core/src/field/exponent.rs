//! Integer exponents written as rational expressions in powers of σ.
//!
//! Coefficient formulas like a^{(σ^n − σ)/(σ^t − 1)} denote an ordinary
//! integer exponent once σ is read as q^s. The quotient is evaluated in
//! arbitrary precision and reduced modulo the multiplicative group order.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Σ c_i σ^{e_i} with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaExponent {
    /// Pairs (coefficient, power of σ).
    pub terms: Vec<(i64, u32)>,
}

impl SigmaExponent {
    pub fn new(terms: &[(i64, u32)]) -> Self {
        SigmaExponent {
            terms: terms.to_vec(),
        }
    }

    /// σ^a − σ^b.
    pub fn diff(a: u32, b: u32) -> Self {
        Self::new(&[(1, a), (-1, b)])
    }

    pub fn constant(c: i64) -> Self {
        Self::new(&[(c, 0)])
    }

    pub fn evaluate(&self, q: u64, s: u32) -> BigInt {
        let sigma = BigInt::from(q).pow(s);
        self.terms
            .iter()
            .map(|&(c, e)| BigInt::from(c) * sigma.pow(e))
            .sum()
    }
}

/// Evaluates num/den at σ = q^s and reduces the quotient mod `group_order`.
///
/// Negative quotients are mapped to their least non-negative residue.
pub fn exponent_reduce(
    num: &SigmaExponent,
    den: &SigmaExponent,
    q: u64,
    s: u32,
    group_order: &BigUint,
) -> Result<BigUint> {
    let n = num.evaluate(q, s);
    let d = den.evaluate(q, s);
    if d.is_zero() {
        return Err(Error::NonIntegerExponent("zero denominator".into()));
    }
    let (quot, rem) = n.div_rem(&d);
    if !rem.is_zero() {
        return Err(Error::NonIntegerExponent(format!(
            "{n} / {d} leaves remainder {rem}"
        )));
    }
    if group_order.is_zero() {
        return Err(Error::NonIntegerExponent("zero group order".into()));
    }
    let modulus = BigInt::from_biguint(Sign::Plus, group_order.clone());
    let r = quot.mod_floor(&modulus);
    Ok(r.to_biguint().unwrap_or_else(BigUint::one))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(q: u64, n: u32) -> BigUint {
        BigUint::from(q).pow(n) - 1u32
    }

    #[test]
    fn zero_numerator() {
        let r = exponent_reduce(
            &SigmaExponent::diff(1, 1),
            &SigmaExponent::diff(3, 0),
            2,
            1,
            &order(2, 7),
        )
        .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn tri_exponent_at_n7() {
        let r = exponent_reduce(
            &SigmaExponent::diff(7, 1),
            &SigmaExponent::diff(3, 0),
            2,
            1,
            &order(2, 7),
        )
        .unwrap();
        assert_eq!(r, BigUint::from(18u32));
    }

    #[test]
    fn group_order_multiples_vanish() {
        let r = exponent_reduce(
            &SigmaExponent::new(&[(5, 4), (-5, 0)]),
            &SigmaExponent::constant(1),
            2,
            1,
            &order(2, 4),
        )
        .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn negative_quotient_wraps() {
        // −(σ^4 − σ^2)/(σ^2 − 1) at q = 2 is −4 ≡ 3 mod 7 in GF(8)*
        let r = exponent_reduce(
            &SigmaExponent::new(&[(-1, 4), (1, 2)]),
            &SigmaExponent::diff(2, 0),
            2,
            1,
            &order(2, 3),
        )
        .unwrap();
        assert_eq!(r, BigUint::from(3u32));
    }

    #[test]
    fn remainder_is_an_error() {
        let e = exponent_reduce(
            &SigmaExponent::diff(3, 0),
            &SigmaExponent::diff(2, 0),
            2,
            1,
            &order(2, 3),
        );
        assert!(matches!(e, Err(Error::NonIntegerExponent(_))));
    }

    #[test]
    fn large_exponents_exceed_u64() {
        // σ^40 at q = 3, s = 2 is 3^80, far beyond 64 bits
        let v = SigmaExponent::new(&[(1, 40)]).evaluate(3, 2);
        assert!(v.bits() > 64);
        let r = exponent_reduce(
            &SigmaExponent::new(&[(1, 40)]),
            &SigmaExponent::constant(1),
            3,
            2,
            &order(3, 4),
        )
        .unwrap();
        // 3^80 = 81^20 ≡ 1 mod 80
        assert_eq!(r, BigUint::one());
    }
}
