//! Closed-form bound calculators: Gaussian binomials, the Johnson-like
//! radius threshold, the Singleton-like bound, and the m-threshold for the
//! C_j codes.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of r-dimensional subspaces of GF(q)^n; zero when r > n.
pub fn gaussian_binomial(n: u32, r: u32, q: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    // row[j] = [i j]_q, updated with [i j] = [i-1 j-1] + q^j [i-1 j]
    let q = BigUint::from(q);
    let mut row = vec![BigUint::zero(); r as usize + 1];
    row[0] = BigUint::one();
    for i in 1..=n as usize {
        for j in (1..=i.min(r as usize)).rev() {
            let qj = q.pow(j as u32);
            row[j] = &row[j - 1] + qj * &row[j];
        }
    }
    row[r as usize].clone()
}

/// Smallest integer ≥ num/den for den > 0.
pub fn ceil_div(num: &BigUint, den: &BigUint) -> BigUint {
    (num + den - BigUint::one()) / den
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JohnsonRadius {
    pub m: u32,
    pub n: u32,
    pub h: u32,
    pub epsilon: f64,
    pub radicand: f64,
    /// (m+n)/2 − sqrt((m+n)²/4 − m(n−h+1−ε)).
    pub threshold: f64,
    /// Smallest integer τ satisfying τ ≥ threshold.
    pub first_integer_radius: u32,
}

/// The radius threshold beyond which codes containing a Gabidulin subcode
/// cannot be list decoded in polynomial time.
pub fn johnson_like_radius(m: u32, n: u32, h: u32, epsilon: f64) -> Result<JohnsonRadius> {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::ParamViolation(format!(
            "epsilon = {epsilon} must lie in [0, 1)"
        )));
    }
    if !(h <= n && n <= m) {
        return Err(Error::ParamViolation(format!(
            "need h ≤ n ≤ m, got h={h}, n={n}, m={m}"
        )));
    }
    let (mf, nf, hf) = (m as f64, n as f64, h as f64);
    let half = (mf + nf) / 2.0;
    let radicand = half * half - mf * (nf - hf + 1.0 - epsilon);
    // the exact sign test, in integers scaled by 4, when ε = 0
    let negative = if epsilon == 0.0 {
        let s = (m as i128 + n as i128).pow(2);
        s < 4 * m as i128 * (n as i128 - h as i128 + 1)
    } else {
        radicand < 0.0
    };
    if negative {
        return Err(Error::NegativeRadicand(radicand));
    }
    let threshold = half - radicand.max(0.0).sqrt();
    // τ ≥ A − √D  ⟺  A − τ ≤ 0  or  (A − τ)² ≤ D
    let satisfies = |tau: i64| -> bool {
        if epsilon == 0.0 {
            let a2 = m as i128 + n as i128 - 2 * tau as i128;
            let d4 = (m as i128 + n as i128).pow(2) - 4 * m as i128 * (n as i128 - h as i128 + 1);
            a2 <= 0 || a2 * a2 <= d4
        } else {
            let a = half - tau as f64;
            a <= 0.0 || a * a <= radicand
        }
    };
    let mut tau = threshold.ceil().max(0.0) as i64;
    while tau > 0 && satisfies(tau - 1) {
        tau -= 1;
    }
    while !satisfies(tau) {
        tau += 1;
    }
    Ok(JohnsonRadius {
        m,
        n,
        h,
        epsilon,
        radicand,
        threshold,
        first_integer_radius: tau as u32,
    })
}

/// Exponent of the Singleton-like bound |C| ≤ q^{max(m,n)(min(m,n)−d+1)}.
pub fn singleton_exponent(m: u32, n: u32, d: u32) -> i64 {
    let (lo, hi) = (m.min(n) as i64, m.max(n) as i64);
    hi * (lo - d as i64 + 1)
}

/// Smallest m strictly above the threshold under which the C_j codes are
/// known to be non-MRD.
pub fn cj_mbound(q: u64, s: u32, k: u32) -> Result<u32> {
    if q <= 5 {
        return Err(Error::ParamViolation(format!("q = {q} must exceed 5")));
    }
    if k < 3 {
        return Err(Error::ParamViolation(format!("k = {k} must be at least 3")));
    }
    if k == 3 {
        return Ok(12 * s + 3);
    }
    let threshold =
        13.0 * s as f64 * k as f64 / 3.0 + (13.0 * 2f64.powf(10.0 / 3.0)).ln() / (q as f64).ln();
    Ok(threshold.floor() as u32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(5, 0, 2), BigUint::one());
        assert_eq!(gaussian_binomial(2, 1, 2), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(3, 1, 3), BigUint::from(13u32));
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::zero());
    }

    #[test]
    fn johnson_examples() {
        let j = johnson_like_radius(8, 8, 2, 0.0).unwrap();
        assert!((j.threshold - (8.0 - 8f64.sqrt())).abs() < 1e-9);
        assert_eq!(j.first_integer_radius, 6);
        for n in 2..20 {
            let j = johnson_like_radius(n, n, n, 0.0).unwrap();
            assert!((j.threshold - (n as f64 - ((n * n - n) as f64).sqrt())).abs() < 1e-9);
            assert_eq!(j.first_integer_radius, 1);
        }
    }

    #[test]
    fn johnson_negative_radicand() {
        // (m+n)²/4 = 16 < m(n−h+1) = 4·5 = 20
        assert!(matches!(
            johnson_like_radius(4, 4, 0, 0.0),
            Err(Error::NegativeRadicand(_))
        ));
        // zero radicand is admissible
        let j = johnson_like_radius(4, 4, 1, 0.0).unwrap();
        assert_eq!(j.threshold, 4.0);
        assert!(matches!(
            johnson_like_radius(4, 5, 1, 0.0),
            Err(Error::ParamViolation(_))
        ));
    }

    #[test]
    fn cj_thresholds() {
        assert_eq!(cj_mbound(7, 1, 3).unwrap(), 15);
        assert_eq!(cj_mbound(7, 2, 3).unwrap(), 27);
        assert!(matches!(cj_mbound(4, 1, 3), Err(Error::ParamViolation(_))));
        assert!(matches!(cj_mbound(7, 1, 2), Err(Error::ParamViolation(_))));
        // k = 4, s = 1, q = 7: 52/3 + log_7(13·2^{10/3}) ≈ 17.33 + 2.51
        assert_eq!(cj_mbound(7, 1, 4).unwrap(), 20);
    }

    #[test]
    fn singleton_exponent_values() {
        assert_eq!(singleton_exponent(4, 4, 3), 8);
        assert_eq!(singleton_exponent(8, 4, 4), 8);
    }
}
