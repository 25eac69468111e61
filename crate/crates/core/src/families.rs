//! Enumerable families of σ-subspace polynomials and the transforms that
//! preserve the maximum-kernel property.
//!
//! Families are defined at a level GF(q^n) with n | m and materialised as
//! polynomials over the ambient field GF(q^m). Since gcd(s, m) = 1, a member
//! keeps its kernel dimension when re-read in the larger field.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_div, gaussian_binomial};
use crate::error::{Error, Result};
use crate::field::{exponent_reduce, Coords, Field, FieldElement, SigmaExponent};
use crate::linalg::EchelonEnumerator;
use crate::sigma_poly::SigmaPoly;
use crate::subspace::FqSubspace;

/// Input description of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// x^{σ^t} − a x with N_{q^n/q^t}(a) = 1.
    Binomial {
        n: u32,
        t: u32,
    },
    /// Σ_i β^{σ^{it} − σ^{n−t}} x^{σ^{it}} for β ∈ GF(q^n)*.
    Trace {
        n: u32,
        t: u32,
    },
    /// x^{σ^t} − b x^σ − a x with n = t(t−1)+1.
    Tri1 {
        n: u32,
        t: u32,
    },
    Tri1Hat {
        n: u32,
        t: u32,
    },
    /// x^{σ^t} − b x^σ − a x with n = t²−1, q and t powers of two.
    Tri2 {
        n: u32,
        t: u32,
    },
    Tri2Hat {
        n: u32,
        t: u32,
    },
    /// The single polynomial x + Σ_{i<k} x^{σ^{t p_i}}, n = t p_k.
    HuangF {
        t: u32,
        k: u32,
        r: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    /// The shifted adjoint of [`FamilySpec::HuangF`].
    HuangG {
        t: u32,
        k: u32,
        r: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    /// β-rescalings of the Huang polynomial.
    Q {
        t: u32,
        k: u32,
        r: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    /// β-rescalings of the Huang adjoint.
    QPrime {
        t: u32,
        k: u32,
        r: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    /// Largest group of subspace polynomials with kernels in span(points)
    /// agreeing on their top g coefficients.
    Pigeonhole {
        points: Vec<Coords>,
        r: u32,
        g: u32,
    },
    /// Shifted adjoints (x-coefficient normalised away) of another family.
    ShiftedAdjoint {
        of: Box<FamilySpec>,
    },
}

#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    /// Level n of the defining subfield (the span dimension for pigeonhole).
    pub level: u32,
    pub sigma_degree: usize,
    /// Closed-form size; a lower bound for pigeonhole families.
    pub expected_size: BigUint,
    pub size_is_lower_bound: bool,
    pub members: Vec<SigmaPoly>,
    /// Extra construction data (pigeonhole grouping key and counts).
    pub pigeonhole: Option<PigeonholeTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PigeonholeTrace {
    pub subspaces: u64,
    pub groups: u64,
    /// Shared top-g coefficients of the chosen group, low-to-high.
    pub key: Vec<Coords>,
    /// How many groups reached the maximum size.
    pub tied_groups: u64,
}

impl Family {
    pub fn actual_size(&self) -> usize {
        self.members.len()
    }

    /// Whether every member is monic with kernel dimension equal to its
    /// σ-degree; non-monic members (hat families) are held to the kernel
    /// condition only.
    pub fn all_max_kernel(&self) -> bool {
        self.members.iter().all(|p| p.has_max_kernel())
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ParamViolation(msg.into())
}

fn check_level(field: &Field, n: u32) -> Result<()> {
    if n == 0 || !field.m().is_multiple_of(n) {
        return Err(violation(format!(
            "level n = {n} must divide m = {}",
            field.m()
        )));
    }
    Ok(())
}

fn is_power_of(mut v: u64, p: u64) -> bool {
    if v == 0 {
        return false;
    }
    while v.is_multiple_of(p) {
        v /= p;
    }
    v == 1
}

fn q_pow(field: &Field, e: u32) -> BigUint {
    BigUint::from(field.q()).pow(e)
}

fn nonzero_level_elements(field: &Field, n: u32) -> Vec<FieldElement> {
    field
        .subfield_elements(n)
        .into_iter()
        .filter(|a| !a.is_zero())
        .collect()
}

/// f_α(x) = α^{σ^k} f(α^{−1} x): kernel α·ker f, same monomial support.
pub fn scale_transform(f: &SigmaPoly, alpha: FieldElement) -> Result<SigmaPoly> {
    let field = f.field();
    let inv = field.inv(alpha).ok_or(Error::ZeroScalar)?;
    let k = f.sigma_degree().ok_or(Error::ZeroPolynomial)?;
    let lead = field.frobenius(alpha, k as i64);
    let c: Vec<_> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &a)| field.mul(lead, field.mul(a, field.frobenius(inv, i as i64))))
        .collect();
    Ok(SigmaPoly::new(field, &c))
}

/// p_i = 1 + q' + … + q'^i with q' = p^r.
fn huang_p(p: u32, r: u32, i: u32) -> u64 {
    let qp = (p as u64).pow(r);
    (0..=i).map(|e| qp.pow(e)).sum()
}

fn huang_params(field: &Field, t: u32, k: u32, r: u32, n: Option<u32>) -> Result<(u32, Vec<u64>)> {
    if t == 0 || k == 0 {
        return Err(violation("t and k must be positive"));
    }
    let p_i: Vec<u64> = (0..=k).map(|i| huang_p(field.p(), r, i)).collect();
    let level = t as u64 * p_i[k as usize];
    if level > u32::MAX as u64 {
        return Err(violation("n = t·p_k overflows"));
    }
    let level = level as u32;
    if let Some(n) = n {
        if n != level {
            return Err(violation(format!("n = {n} differs from t·p_k = {level}")));
        }
    }
    check_level(field, level)?;
    Ok((level, p_i))
}

fn huang_f(field: &Field, t: u32, p_i: &[u64], k: u32) -> SigmaPoly {
    let top = t as usize * p_i[k as usize - 1] as usize;
    let mut c = vec![FieldElement::ZERO; top + 1];
    c[0] = FieldElement::ONE;
    for &pi in &p_i[..k as usize] {
        let e = t as usize * pi as usize;
        c[e] = field.add(c[e], FieldElement::ONE);
    }
    SigmaPoly::new(field, &c)
}

/// Members β^{−σ^K} f(βx) over β ∈ GF(q^n)*, deduplicated keeping the
/// first β in canonical order.
fn rescalings(f: &SigmaPoly, n: u32) -> Result<Vec<SigmaPoly>> {
    let field = f.field();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for beta in nonzero_level_elements(field, n) {
        let inv = field.inv(beta).expect("nonzero");
        let p = scale_transform(f, inv)?;
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

fn tri_members(
    field: &Field,
    n: u32,
    t: u32,
    norm_target: FieldElement,
    b_exponent: (SigmaExponent, SigmaExponent),
    negate_b: bool,
    hat: bool,
) -> Result<Vec<SigmaPoly>> {
    let order = q_pow(field, n) - 1u32;
    let e = exponent_reduce(&b_exponent.0, &b_exponent.1, field.q(), field.s(), &order)?;
    let mut out = Vec::new();
    for a in nonzero_level_elements(field, n) {
        if field.rel_norm(a, n, 1)? != norm_target {
            continue;
        }
        let mut b = field.pow_big(a, &e);
        if negate_b {
            b = field.neg(b);
        }
        out.push(tri_poly(field, t, a, b, hat));
    }
    Ok(out)
}

fn tri_poly(field: &Field, t: u32, a: FieldElement, b: FieldElement, hat: bool) -> SigmaPoly {
    let t = t as usize;
    let mut c = vec![FieldElement::ZERO; t + 1];
    if hat {
        // x + (−b)^{σ^{t−1}} x^{σ^{t−1}} + (−a)^{σ^t} x^{σ^t}
        c[0] = FieldElement::ONE;
        c[t - 1] = field.add(c[t - 1], field.frobenius(field.neg(b), t as i64 - 1));
        c[t] = field.frobenius(field.neg(a), t as i64);
    } else {
        c[t] = FieldElement::ONE;
        c[1] = field.neg(b);
        c[0] = field.add(c[0], field.neg(a));
    }
    SigmaPoly::new(field, &c)
}

/// Enumerates the family described by `spec` over `field`.
pub fn generate(field: &Field, spec: &FamilySpec) -> Result<Family> {
    let q = field.q();
    let size_ratio = |n: u32, t: u32| (q_pow(field, n) - 1u32) / (q_pow(field, t) - 1u32);
    let (level, degree, expected, members) = match spec {
        FamilySpec::Binomial { n, t } => {
            let (n, t) = (*n, *t);
            check_level(field, n)?;
            if !(1 <= t && t < n && n % t == 0) {
                return Err(violation(format!(
                    "need 1 ≤ t ≤ n−1 and t | n, got t={t}, n={n}"
                )));
            }
            let mut members = Vec::new();
            for a in nonzero_level_elements(field, n) {
                if field.rel_norm(a, n, t)? == FieldElement::ONE {
                    let mut c = vec![FieldElement::ZERO; t as usize + 1];
                    c[0] = field.neg(a);
                    c[t as usize] = FieldElement::ONE;
                    members.push(SigmaPoly::new(field, &c));
                }
            }
            (n, t as usize, size_ratio(n, t), members)
        }
        FamilySpec::Trace { n, t } => {
            let (n, t) = (*n, *t);
            check_level(field, n)?;
            if !(1 <= t && t <= n && n % t == 0) {
                return Err(violation(format!(
                    "need 1 ≤ t ≤ n and t | n, got t={t}, n={n}"
                )));
            }
            let mut seen = HashSet::new();
            let mut members = Vec::new();
            for beta in nonzero_level_elements(field, n) {
                let shift = field
                    .inv(field.frobenius(beta, (n - t) as i64))
                    .expect("nonzero");
                let mut c = vec![FieldElement::ZERO; (n - t) as usize + 1];
                for i in 0..n / t {
                    let e = (i * t) as usize;
                    c[e] = field.mul(field.frobenius(beta, e as i64), shift);
                }
                let p = SigmaPoly::new(field, &c);
                if seen.insert(p.clone()) {
                    members.push(p);
                }
            }
            (n, (n - t) as usize, size_ratio(n, t), members)
        }
        FamilySpec::Tri1 { n, t } | FamilySpec::Tri1Hat { n, t } => {
            let (n, t) = (*n, *t);
            if t < 2 || n != t * (t - 1) + 1 {
                return Err(violation(format!(
                    "need t ≥ 2 and n = t(t−1)+1, got t={t}, n={n}"
                )));
            }
            if !is_power_of((t - 1) as u64, field.p() as u64) {
                return Err(violation(format!(
                    "t−1 = {} is not a power of p = {}",
                    t - 1,
                    field.p()
                )));
            }
            check_level(field, n)?;
            let target = if (t - 1) % 2 == 0 {
                field.one()
            } else {
                field.neg(field.one())
            };
            // b = −a^{(σ^n − σ)/(σ^t − 1) + 1}; without the extra factor of a
            // only a = 1 yields a maximum kernel
            let num = SigmaExponent::new(&[(1, n), (1, t), (-1, 1), (-1, 0)]);
            let den = SigmaExponent::diff(t, 0);
            let hat = matches!(spec, FamilySpec::Tri1Hat { .. });
            let members = tri_members(field, n, t, target, (num, den), true, hat)?;
            (n, t as usize, size_ratio(n, 1), members)
        }
        FamilySpec::Tri2 { n, t } | FamilySpec::Tri2Hat { n, t } => {
            let (n, t) = (*n, *t);
            if field.p() != 2 {
                return Err(violation(format!("q = {q} must be a power of 2")));
            }
            if t < 2 || !t.is_power_of_two() || n != t * t - 1 {
                return Err(violation(format!(
                    "need t a power of 2 and n = t²−1, got t={t}, n={n}"
                )));
            }
            check_level(field, n)?;
            // b = a^{−(σ^{t²} − σ^t)/(σ^t − 1)}
            let num = SigmaExponent::new(&[(-1, t * t), (1, t)]);
            let den = SigmaExponent::diff(t, 0);
            let hat = matches!(spec, FamilySpec::Tri2Hat { .. });
            let members = tri_members(field, n, t, field.one(), (num, den), false, hat)?;
            (n, t as usize, size_ratio(n, 1), members)
        }
        FamilySpec::HuangF { t, k, r, n } | FamilySpec::HuangG { t, k, r, n } => {
            let (level, p_i) = huang_params(field, *t, *k, *r, *n)?;
            let f = huang_f(field, *t, &p_i, *k);
            let f = if matches!(spec, FamilySpec::HuangG { .. }) {
                f.shifted_adjoint()?
            } else {
                f
            };
            let deg = f.sigma_degree().expect("nonzero");
            (level, deg, BigUint::one(), vec![f])
        }
        FamilySpec::Q { t, k, r, n } | FamilySpec::QPrime { t, k, r, n } => {
            let (level, p_i) = huang_params(field, *t, *k, *r, *n)?;
            let f = huang_f(field, *t, &p_i, *k);
            let f = if matches!(spec, FamilySpec::QPrime { .. }) {
                f.shifted_adjoint()?
            } else {
                f
            };
            let deg = f.sigma_degree().expect("nonzero");
            (level, deg, size_ratio(level, *t), rescalings(&f, level)?)
        }
        FamilySpec::Pigeonhole { points, r, g } => {
            let pts = points
                .iter()
                .map(|c| field.from_coords(c))
                .collect::<Result<Vec<_>>>()?;
            let (members, trace) = pigeonhole_family(field, &pts, *r as usize, *g as usize)?;
            let n = pts.len() as u32;
            let bound = ceil_div(
                &gaussian_binomial(n, *r, q),
                &BigUint::from(q).pow(field.m() * (g - 1)),
            );
            return Ok(Family {
                spec: spec.clone(),
                level: n,
                sigma_degree: *r as usize,
                expected_size: bound,
                size_is_lower_bound: true,
                members,
                pigeonhole: Some(trace),
            });
        }
        FamilySpec::ShiftedAdjoint { of } => {
            let inner = generate(field, of)?;
            let members = inner
                .members
                .iter()
                .map(SigmaPoly::shifted_adjoint)
                .collect::<Result<Vec<_>>>()?;
            return Ok(Family {
                spec: spec.clone(),
                members,
                ..inner
            });
        }
    };
    Ok(Family {
        spec: spec.clone(),
        level,
        sigma_degree: degree,
        expected_size: expected,
        size_is_lower_bound: false,
        members,
        pigeonhole: None,
    })
}

/// Groups the Moore polynomials of all r-dimensional subspaces of span(S) by
/// their top g coefficients and returns the largest group. Ties go to the
/// smallest key in canonical element order.
pub fn pigeonhole_family(
    field: &Field,
    points: &[FieldElement],
    r: usize,
    g: usize,
) -> Result<(Vec<SigmaPoly>, PigeonholeTrace)> {
    let n = points.len();
    if !(1 <= g && g <= r && r < n && n <= field.m() as usize) {
        return Err(violation(format!(
            "need 1 ≤ g ≤ r < n ≤ m, got g={g}, r={r}, n={n}, m={}",
            field.m()
        )));
    }
    if FqSubspace::from_elements(field, points).dim() != n {
        return Err(Error::DependentPoints);
    }
    let scalars = field.base_elements().to_vec();
    let mut groups: BTreeMap<Vec<FieldElement>, Vec<SigmaPoly>> = BTreeMap::new();
    let mut count = 0u64;
    for rows in EchelonEnumerator::new(&scalars, n, r) {
        let basis: Vec<FieldElement> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(points)
                    .fold(FieldElement::ZERO, |acc, (&c, &a)| {
                        field.add(acc, field.mul(c, a))
                    })
            })
            .collect();
        let s = SigmaPoly::moore(field, &basis)?;
        let key: Vec<FieldElement> = (r + 1 - g..=r).map(|i| s.coeff(i)).collect();
        groups.entry(key).or_default().push(s);
        count += 1;
    }
    let best = groups.values().map(Vec::len).max().unwrap_or(0);
    let tied = groups.values().filter(|v| v.len() == best).count() as u64;
    let n_groups = groups.len() as u64;
    let (key, members) = groups
        .into_iter()
        .find(|(_, v)| v.len() == best)
        .expect("at least one subspace");
    Ok((
        members,
        PigeonholeTrace {
            subspaces: count,
            groups: n_groups,
            key: key.iter().map(|&c| field.coords(c)).collect(),
            tied_groups: tied,
        },
    ))
}

/// Expected size as a machine integer, when it fits.
pub fn expected_size_u64(f: &Family) -> Option<u64> {
    f.expected_size.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, m: u32) -> Field {
        Field::from_params(p, 1, m, 1).unwrap()
    }

    fn roots(f: &SigmaPoly) -> usize {
        f.field()
            .elements()
            .filter(|&c| f.evaluate(c).is_zero())
            .count()
    }

    #[test]
    fn binomials_q2_n4_t2() {
        let f = gf(2, 4);
        let fam = generate(&f, &FamilySpec::Binomial { n: 4, t: 2 }).unwrap();
        assert_eq!(fam.actual_size(), 5);
        assert_eq!(fam.expected_size, BigUint::from(5u32));
        assert!(fam
            .members
            .iter()
            .all(|p| roots(p) == 4 && p.is_subspace_poly()));
    }

    #[test]
    fn binomial_kernels_distinct_over_gf4() {
        let f = gf(2, 2);
        let fam = generate(&f, &FamilySpec::Binomial { n: 2, t: 1 }).unwrap();
        assert_eq!(fam.actual_size(), 3);
        let kernels: HashSet<_> = fam.members.iter().map(|p| p.kernel().unwrap()).collect();
        assert_eq!(kernels.len(), 3);
        assert!(matches!(
            generate(&f, &FamilySpec::Binomial { n: 2, t: 2 }),
            Err(Error::ParamViolation(_))
        ));
    }

    #[test]
    fn trace_family_sizes() {
        let f = gf(2, 6);
        let fam = generate(&f, &FamilySpec::Trace { n: 6, t: 3 }).unwrap();
        assert_eq!(fam.actual_size(), 9);
        assert!(fam
            .members
            .iter()
            .all(|p| p.is_subspace_poly() && p.sigma_degree() == Some(3)));
        let full = generate(&f, &FamilySpec::Trace { n: 6, t: 6 }).unwrap();
        assert_eq!(full.actual_size(), 1);
    }

    #[test]
    fn tri1_q2_t3_n7() {
        let f = gf(2, 7);
        let fam = generate(&f, &FamilySpec::Tri1 { n: 7, t: 3 }).unwrap();
        assert_eq!(fam.actual_size(), 127);
        let bad: Vec<_> = fam
            .members
            .iter()
            .filter(|p| !p.is_subspace_poly())
            .collect();
        assert!(
            bad.is_empty(),
            "{} of 127 fail: {:?}",
            bad.len(),
            bad.first()
        );
    }

    #[test]
    fn tri1_other_frobenius_steps() {
        for s in [2, 3] {
            let f = Field::from_params(2, 1, 7, s).unwrap();
            let fam = generate(&f, &FamilySpec::Tri1 { n: 7, t: 3 }).unwrap();
            assert!(
                fam.members.iter().all(SigmaPoly::is_subspace_poly),
                "s = {s}"
            );
        }
        let f4 = Field::from_params(2, 2, 7, 1).unwrap();
        let fam = generate(&f4, &FamilySpec::Tri1 { n: 7, t: 3 }).unwrap();
        assert_eq!(fam.actual_size(), (4usize.pow(7) - 1) / 3);
        assert!(fam
            .members
            .iter()
            .step_by(97)
            .all(SigmaPoly::is_subspace_poly));
    }

    #[test]
    fn tri1_small_t() {
        // t = 2 (t − 1 = 1 = 2^0), n = 3
        let f = gf(2, 3);
        let fam = generate(&f, &FamilySpec::Tri1 { n: 3, t: 2 }).unwrap();
        assert_eq!(fam.actual_size(), 7);
        assert!(fam.members.iter().all(SigmaPoly::is_subspace_poly));
        let hat = generate(&f, &FamilySpec::Tri1Hat { n: 3, t: 2 }).unwrap();
        assert!(hat.all_max_kernel());
    }

    #[test]
    fn tri_param_violations() {
        let f = gf(2, 8);
        assert!(matches!(
            generate(&f, &FamilySpec::Tri1 { n: 8, t: 3 }),
            Err(Error::ParamViolation(_))
        ));
        let f3 = gf(3, 3);
        assert!(matches!(
            generate(&f3, &FamilySpec::Tri2 { n: 3, t: 2 }),
            Err(Error::ParamViolation(_))
        ));
    }

    #[test]
    fn tri2_q2_t2() {
        let f = gf(2, 3);
        for spec in [
            FamilySpec::Tri2 { n: 3, t: 2 },
            FamilySpec::Tri2Hat { n: 3, t: 2 },
        ] {
            let fam = generate(&f, &spec).unwrap();
            assert_eq!(fam.actual_size(), 7);
            assert!(fam.members.iter().all(|p| roots(p) == 4));
        }
    }

    #[test]
    fn huang_r0_is_relative_trace() {
        let f = gf(2, 6);
        let fam = generate(
            &f,
            &FamilySpec::HuangF {
                t: 2,
                k: 2,
                r: 0,
                n: Some(6),
            },
        )
        .unwrap();
        let h = &fam.members[0];
        assert_eq!(h.support(), vec![0, 2, 4]);
        for a in f.elements() {
            assert_eq!(h.evaluate(a), f.rel_trace(a, 6, 2).unwrap());
        }
    }

    #[test]
    fn huang_q2_r1_n7() {
        let f = gf(2, 7);
        let fam = generate(
            &f,
            &FamilySpec::HuangF {
                t: 1,
                k: 2,
                r: 1,
                n: None,
            },
        )
        .unwrap();
        let h = &fam.members[0];
        assert_eq!(h.support(), vec![0, 1, 3]);
        assert_eq!(roots(h), 8);
        let g = generate(
            &f,
            &FamilySpec::HuangG {
                t: 1,
                k: 2,
                r: 1,
                n: None,
            },
        )
        .unwrap();
        assert!(g.members[0].is_subspace_poly());
        assert!(matches!(
            generate(
                &f,
                &FamilySpec::HuangF {
                    t: 1,
                    k: 2,
                    r: 1,
                    n: Some(6)
                }
            ),
            Err(Error::ParamViolation(_))
        ));
    }

    #[test]
    fn scale_transform_kernel() {
        let f = gf(2, 4);
        let p = SigmaPoly::new(&f, &[f.one(), f.one()]);
        let g = f.primitive();
        let s = scale_transform(&p, g).unwrap();
        let ker: Vec<_> = f.elements().filter(|&c| s.evaluate(c).is_zero()).collect();
        let mut expect = vec![f.zero(), g];
        expect.sort();
        assert_eq!(ker, expect);
        assert_eq!(scale_transform(&p, f.one()).unwrap(), p);
        assert!(matches!(
            scale_transform(&p, f.zero()),
            Err(Error::ZeroScalar)
        ));
    }

    #[test]
    fn pigeonhole_small() {
        let f = gf(2, 4);
        let pts = f.q_basis();
        let (all, trace) = pigeonhole_family(&f, &pts, 2, 1).unwrap();
        assert_eq!(all.len(), 35);
        assert_eq!(trace.groups, 1);
        let (grp, _) = pigeonhole_family(&f, &pts, 2, 2).unwrap();
        assert!(grp.len() >= 3);
        let span = FqSubspace::from_elements(&f, &pts);
        for p in &grp {
            assert!(p.kernel().unwrap().is_subspace_of(&f, &span).unwrap());
        }
        assert!(matches!(
            pigeonhole_family(&f, &pts, 2, 3),
            Err(Error::ParamViolation(_))
        ));
    }
}
