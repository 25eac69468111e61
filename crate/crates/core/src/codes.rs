//! Rank-metric codes given as spaces of σ-polynomials and their evaluation
//! codes in GF(q^m)^n.
//!
//! A code is a sum of independent slots. A free slot contributes c·x^{σ^i}
//! for any c ∈ GF(q^m); a linked slot contributes f1(a)·x + f2(a)·x^{σ^k}
//! for a ∈ GF(q^m) and additive maps f1, f2. Every supported code is thus
//! additive and has exactly (q^m)^{slots} elements.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::singleton_exponent;
use crate::error::{Error, Result};
use crate::field::{Coords, ElementSpec, Field, FieldElement, FieldSpec};
use crate::linalg::{self, Matrix};
use crate::sigma_poly::SigmaPoly;
use crate::subspace::FqSubspace;

/// Additive map GF(q^m) → GF(q^m) used in the linked slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapSpec {
    Zero,
    Identity,
    /// a ↦ η a^{q^h}
    EtaQPow {
        eta: ElementSpec,
        h: u32,
    },
    /// a ↦ η a^{p^h}
    EtaPPow {
        eta: ElementSpec,
        h: u32,
    },
    /// a ↦ η (ζa + (ζa)^{q^{m/2}}), m even
    HalfTrace {
        eta: ElementSpec,
        zeta: ElementSpec,
    },
    /// GF(p)-matrix acting on the prime-field coordinates (column vector).
    Matrix {
        rows: Vec<Vec<u32>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdditiveMap {
    Zero,
    Identity,
    EtaQPow {
        eta: FieldElement,
        h: u32,
    },
    EtaPPow {
        eta: FieldElement,
        h: u32,
    },
    HalfTrace {
        eta: FieldElement,
        zeta: FieldElement,
    },
    Matrix(Vec<Vec<u32>>),
}

impl AdditiveMap {
    pub fn resolve(field: &Field, spec: &MapSpec) -> Result<Self> {
        Ok(match spec {
            MapSpec::Zero => AdditiveMap::Zero,
            MapSpec::Identity => AdditiveMap::Identity,
            MapSpec::EtaQPow { eta, h } => AdditiveMap::EtaQPow {
                eta: field.resolve(eta)?,
                h: *h,
            },
            MapSpec::EtaPPow { eta, h } => AdditiveMap::EtaPPow {
                eta: field.resolve(eta)?,
                h: *h,
            },
            MapSpec::HalfTrace { eta, zeta } => {
                if !field.m().is_multiple_of(2) {
                    return Err(Error::ParamViolation("half-trace map needs m even".into()));
                }
                AdditiveMap::HalfTrace {
                    eta: field.resolve(eta)?,
                    zeta: field.resolve(zeta)?,
                }
            }
            MapSpec::Matrix { rows } => {
                let d = field.coords(FieldElement::ZERO).0.len();
                if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                    return Err(Error::DimensionMismatch(format!(
                        "map matrix must be {d}×{d}"
                    )));
                }
                if rows.iter().flatten().any(|&c| c >= field.p()) {
                    return Err(Error::Malformed(
                        "matrix entries must be reduced mod p".into(),
                    ));
                }
                AdditiveMap::Matrix(rows.clone())
            }
        })
    }

    pub fn apply(&self, field: &Field, a: FieldElement) -> FieldElement {
        match self {
            AdditiveMap::Zero => FieldElement::ZERO,
            AdditiveMap::Identity => a,
            AdditiveMap::EtaQPow { eta, h } => field.mul(*eta, field.pow(a, field.q().pow(*h))),
            AdditiveMap::EtaPPow { eta, h } => {
                field.mul(*eta, field.pow(a, (field.p() as u64).pow(*h)))
            }
            AdditiveMap::HalfTrace { eta, zeta } => {
                let za = field.mul(*zeta, a);
                let half = field.q().pow(field.m() / 2);
                field.mul(*eta, field.add(za, field.pow(za, half)))
            }
            AdditiveMap::Matrix(rows) => {
                let p = field.p() as u64;
                let x = field.coords(a).0;
                let y: Vec<u32> = rows
                    .iter()
                    .map(|r| {
                        (r.iter()
                            .zip(&x)
                            .map(|(&c, &v)| c as u64 * v as u64)
                            .sum::<u64>()
                            % p) as u32
                    })
                    .collect();
                field.from_coords(&Coords(y)).expect("reduced coordinates")
            }
        }
    }

    fn is_zero_map(&self) -> bool {
        matches!(self, AdditiveMap::Zero)
    }

    /// GF(q^m)-linear maps: those commuting with scalar multiplication.
    fn is_scalar(&self) -> Option<FieldElement> {
        match self {
            AdditiveMap::Zero => Some(FieldElement::ZERO),
            AdditiveMap::Identity => Some(FieldElement::ONE),
            _ => None,
        }
    }

    fn is_bijective(&self, field: &Field) -> bool {
        match self {
            AdditiveMap::Zero => false,
            AdditiveMap::Identity => true,
            AdditiveMap::EtaQPow { eta, .. } | AdditiveMap::EtaPPow { eta, .. } => !eta.is_zero(),
            _ => field
                .elements()
                .skip(1)
                .all(|a| !self.apply(field, a).is_zero()),
        }
    }
}

/// Which σ-polynomial space a code is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CodeSpec {
    /// Σ_{i<k} a_i x^{σ^i}
    Gabidulin { k: u32 },
    /// {f^{σ^j} : f Gabidulin of dimension h}, i.e. support [j, j+h−1].
    PowerGabidulin { h: u32, j: u32 },
    /// f1(a) x + Σ_{0<i<k} a_i x^{σ^i} + f2(a) x^{σ^k}
    H { k: u32, f1: MapSpec, f2: MapSpec },
    /// H with f1 = id and f2(a) = η a^{q^h}.
    TwistedSheekey {
        k: u32,
        eta: ElementSpec,
        h_twist: u32,
    },
    /// Σ_{i<k, i≠j} a_i x^{σ^i}
    Cj { k: u32, j: u32 },
}

/// Evaluation points of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointsSpec {
    Explicit {
        points: Vec<Coords>,
    },
    /// The first n vectors 1, x, …, x^{n−1} of the fixed GF(q)-basis.
    Standard {
        n: u32,
    },
    /// β·(1, γ, …, γ^{n−1}) with γ a primitive element of GF(q^n).
    SubfieldBasis {
        n: u32,
        beta: ElementSpec,
    },
}

impl PointsSpec {
    pub fn resolve(&self, field: &Field) -> Result<Vec<FieldElement>> {
        match self {
            PointsSpec::Explicit { points } => {
                points.iter().map(|c| field.from_coords(c)).collect()
            }
            PointsSpec::Standard { n } => {
                if *n > field.m() {
                    return Err(Error::ParamViolation(format!(
                        "n = {n} exceeds m = {}",
                        field.m()
                    )));
                }
                Ok(field.q_basis().into_iter().take(*n as usize).collect())
            }
            PointsSpec::SubfieldBasis { n, beta } => {
                let beta = field.resolve(beta)?;
                subfield_basis_points(field, *n, beta)
            }
        }
    }
}

/// A complete code description: field, polynomial space and points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRequest {
    pub field: FieldSpec,
    pub code: CodeSpec,
    pub points: PointsSpec,
    /// Declared minimum distance, for codes too large to brute-force.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
}

impl CodeRequest {
    pub fn build(&self, field_limit: u64) -> Result<EvalCode> {
        let field = Field::with_limit(&self.field, field_limit)?;
        let points = self.points.resolve(&field)?;
        EvalCode::build(&field, &self.code, &points)
    }
}

/// β·(1, γ, …, γ^{n−1}): a GF(q)-basis of β·GF(q^n).
pub fn subfield_basis_points(
    field: &Field,
    n: u32,
    beta: FieldElement,
) -> Result<Vec<FieldElement>> {
    if n == 0 || !field.m().is_multiple_of(n) {
        return Err(Error::ParamViolation(format!(
            "n = {n} must divide m = {}",
            field.m()
        )));
    }
    if beta.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let gamma = field.subfield_primitive(n);
    Ok((0..n as u64)
        .map(|i| field.mul(beta, field.pow(gamma, i)))
        .collect())
}

#[derive(Clone, Debug)]
enum Slot {
    Free(usize),
    Linked {
        f1: AdditiveMap,
        f2: AdditiveMap,
        top: usize,
    },
}

/// A code of σ-polynomials together with n GF(q)-independent points.
#[derive(Clone, Debug)]
pub struct EvalCode {
    field: Field,
    spec: CodeSpec,
    slots: Vec<Slot>,
    points: Vec<FieldElement>,
    /// frob[i][j] = σ^i(α_j)
    frob: Vec<Vec<FieldElement>>,
    max_degree: usize,
    mrd_condition: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDistance {
    pub d: u32,
    pub enumerated: u128,
    /// Slot parameters of one codeword of minimum weight.
    pub witness: Vec<Coords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonReport {
    /// log_q of the bound q^{max(m,n)(min(m,n)−d+1)}.
    pub bound_exponent: i64,
    /// log_q |C|.
    pub size_exponent: i64,
    pub is_mrd: bool,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub holds: bool,
    /// "structural" when read off the slot layout, "generators" when every
    /// additive generator of the subcode was tested for membership.
    pub method: String,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ParamViolation(msg.into())
}

/// GF(q)-rank of the entries of v.
pub fn rank_weight(field: &Field, v: &[FieldElement]) -> usize {
    if field.q() == 2 {
        // XOR basis on the packed GF(2) coordinates
        let mut basis = [0u32; 32];
        let mut rank = 0;
        for &x in v {
            let mut x = field.binary_coords(x).expect("q = 2");
            while x != 0 {
                let top = 31 - x.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = x;
                    rank += 1;
                    break;
                }
                x ^= basis[top];
            }
        }
        return rank;
    }
    let rows: Matrix = v.iter().map(|&a| field.q_coords(a)).collect();
    linalg::rank(field, &rows)
}

pub fn rank_distance(field: &Field, u: &[FieldElement], v: &[FieldElement]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let diff: Vec<_> = u.iter().zip(v).map(|(&a, &b)| field.sub(a, b)).collect();
    Ok(rank_weight(field, &diff))
}

impl EvalCode {
    pub fn build(field: &Field, spec: &CodeSpec, points: &[FieldElement]) -> Result<Self> {
        let n = points.len();
        let m = field.m() as usize;
        if n == 0 || n > m {
            return Err(violation(format!("need 1 ≤ n ≤ m, got n = {n}, m = {m}")));
        }
        if points.iter().any(|&a| !field.contains(a)) {
            return Err(Error::FieldMismatch(
                "evaluation point outside the field".into(),
            ));
        }
        if FqSubspace::from_elements(field, points).dim() != n {
            return Err(Error::DependentPoints);
        }
        let slots = match spec {
            CodeSpec::Gabidulin { k } => {
                if *k as usize > m - 1 && *k > 0 {
                    return Err(violation(format!("k = {k} must be at most m−1")));
                }
                (0..*k as usize).map(Slot::Free).collect::<Vec<_>>()
            }
            CodeSpec::PowerGabidulin { h, j } => {
                if *h == 0 || (h + j) as usize > m {
                    return Err(violation(format!(
                        "need h ≥ 1 and j ≤ m−h, got h={h}, j={j}"
                    )));
                }
                (*j as usize..(j + h) as usize).map(Slot::Free).collect()
            }
            CodeSpec::H { k, f1, f2 } => {
                let f1 = AdditiveMap::resolve(field, f1)?;
                let f2 = AdditiveMap::resolve(field, f2)?;
                Self::linked_slots(field, *k as usize, f1, f2)?
            }
            CodeSpec::TwistedSheekey { k, eta, h_twist } => {
                let eta = field.resolve(eta)?;
                let f2 = AdditiveMap::EtaQPow { eta, h: *h_twist };
                Self::linked_slots(field, *k as usize, AdditiveMap::Identity, f2)?
            }
            CodeSpec::Cj { k, j } => {
                if *k < 3 || *j < 1 || *j > k - 2 || *k as usize > m - 1 {
                    return Err(violation(format!(
                        "need k ≥ 3, 1 ≤ j ≤ k−2 and k ≤ m−1, got k={k}, j={j}, m={m}"
                    )));
                }
                (0..*k as usize)
                    .filter(|&i| i != *j as usize)
                    .map(Slot::Free)
                    .collect()
            }
        };
        let max_degree = slots
            .iter()
            .map(|s| match s {
                Slot::Free(p) => *p,
                Slot::Linked { f2, top, .. } if !f2.is_zero_map() => *top,
                Slot::Linked { .. } => 0,
            })
            .max()
            .unwrap_or(0);
        if !slots.is_empty() && max_degree >= n {
            return Err(violation(format!(
                "σ-degree {max_degree} ≥ n = {n}: evaluation would not be injective"
            )));
        }
        let frob = (0..=max_degree)
            .map(|i| {
                points
                    .iter()
                    .map(|&a| field.frobenius(a, i as i64))
                    .collect()
            })
            .collect();
        let mrd_condition = slots.iter().find_map(|s| match s {
            Slot::Linked { f1, f2, top } => Some(mrd_condition(field, f1, f2, *top)),
            Slot::Free(_) => None,
        });
        Ok(EvalCode {
            field: field.clone(),
            spec: spec.clone(),
            slots,
            points: points.to_vec(),
            frob,
            max_degree,
            mrd_condition,
        })
    }

    fn linked_slots(
        field: &Field,
        k: usize,
        f1: AdditiveMap,
        f2: AdditiveMap,
    ) -> Result<Vec<Slot>> {
        let m = field.m() as usize;
        if k == 0 || k > m - 1 {
            return Err(violation(format!("need 1 ≤ k ≤ m−1, got k = {k}")));
        }
        // |Im f1 × Im f2| = q^m, read as: a ↦ (f1(a), f2(a)) is injective
        let collapsed = field
            .elements()
            .skip(1)
            .find(|&a| f1.apply(field, a).is_zero() && f2.apply(field, a).is_zero());
        if let Some(a) = collapsed {
            return Err(violation(format!(
                "a ↦ (f1(a), f2(a)) is not injective (kills {})",
                field.pretty(a)
            )));
        }
        let mut slots = vec![Slot::Linked { f1, f2, top: k }];
        slots.extend((1..k).map(Slot::Free));
        Ok(slots)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    /// Largest σ-degree occurring in the code.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// log_q |C| = m · slots.
    pub fn size_exponent(&self) -> u64 {
        self.field.m() as u64 * self.slots.len() as u64
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.order()).pow(self.slots.len() as u32)
    }

    /// Outcome of N(f1(a)) ≠ (−1)^{mk} N(f2(a)) for all a ≠ 0; `None` for
    /// codes without a linked slot.
    pub fn mrd_condition(&self) -> Option<bool> {
        self.mrd_condition
    }

    /// Whether the code is closed under GF(q^m)-scalars.
    pub fn is_fqm_linear(&self) -> bool {
        self.slots.iter().all(|s| match s {
            Slot::Free(_) => true,
            Slot::Linked { f1, f2, .. } => f1.is_scalar().is_some() && f2.is_scalar().is_some(),
        })
    }

    /// Positions where any coefficient is reachable with all others zero.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .slots
            .iter()
            .filter_map(|s| match s {
                Slot::Free(p) => Some(*p),
                Slot::Linked { f1, f2, top } => {
                    if f2.is_zero_map() && f1.is_bijective(&self.field) {
                        Some(0)
                    } else if f1.is_zero_map() && f2.is_bijective(&self.field) {
                        Some(*top)
                    } else {
                        None
                    }
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn decode_index(&self, mut idx: u128) -> Vec<FieldElement> {
        let n = self.field.order() as u128;
        (0..self.slots.len())
            .map(|_| {
                let v = (idx % n) as u32;
                idx /= n;
                FieldElement::from_index(v)
            })
            .collect()
    }

    /// The σ-polynomial with the given slot parameters.
    pub fn poly(&self, params: &[FieldElement]) -> SigmaPoly {
        let f = &self.field;
        let mut c = vec![FieldElement::ZERO; self.max_degree.max(1) + 1];
        for (slot, &a) in self.slots.iter().zip(params) {
            match slot {
                Slot::Free(p) => c[*p] = f.add(c[*p], a),
                Slot::Linked { f1, f2, top } => {
                    c[0] = f.add(c[0], f1.apply(f, a));
                    if !f2.is_zero_map() {
                        c[*top] = f.add(c[*top], f2.apply(f, a));
                    }
                }
            }
        }
        SigmaPoly::new(f, &c)
    }

    /// Evaluation vector (f(α_1), …, f(α_n)) of any σ-polynomial.
    pub fn evaluate_poly(&self, p: &SigmaPoly) -> Vec<FieldElement> {
        self.points.iter().map(|&a| p.evaluate(a)).collect()
    }

    /// Codeword with the given slot parameters.
    pub fn codeword(&self, params: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut w = vec![FieldElement::ZERO; self.n()];
        let mut axpy = |c: FieldElement, row: &[FieldElement]| {
            if c.is_zero() {
                return;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, y));
            }
        };
        for (slot, &a) in self.slots.iter().zip(params) {
            match slot {
                Slot::Free(p) => axpy(a, &self.frob[*p]),
                Slot::Linked { f1, f2, top } => {
                    axpy(f1.apply(f, a), &self.frob[0]);
                    if !f2.is_zero_map() {
                        axpy(f2.apply(f, a), &self.frob[*top]);
                    }
                }
            }
        }
        w
    }

    /// Streams every codeword in index order (slot 0 varies fastest).
    pub fn codewords(&self) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
        let total = self.total_words();
        (0..total).map(move |i| self.codeword(&self.decode_index(i)))
    }

    /// Codeword number `i` in the enumeration order of [`Self::codewords`].
    pub fn codeword_at(&self, i: u128) -> Vec<FieldElement> {
        self.codeword(&self.decode_index(i))
    }

    /// |C ∩ B_radius(center)| by a parallel scan of the whole code.
    pub fn ball_count(&self, center: &[FieldElement], radius: usize, budget: u128) -> Result<u64> {
        if center.len() != self.n() {
            return Err(Error::LengthMismatch {
                left: center.len(),
                right: self.n(),
            });
        }
        let total = self.total_words();
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget,
            });
        }
        let f = &self.field;
        Ok((0..total)
            .into_par_iter()
            .filter(|&i| {
                let c = self.codeword_at(i);
                let diff: Vec<_> = c.iter().zip(center).map(|(&a, &b)| f.sub(a, b)).collect();
                rank_weight(f, &diff) <= radius
            })
            .count() as u64)
    }

    /// |C| as u128 (saturating).
    pub fn total_words(&self) -> u128 {
        (self.field.order() as u128)
            .checked_pow(self.slots.len() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Exact minimum rank distance by weight enumeration.
    ///
    /// GF(q^m)-linear codes are scanned projectively (first nonzero slot
    /// parameter equal to 1); other additive codes over all nonzero words.
    pub fn min_distance(&self, budget: u128) -> Result<MinDistance> {
        if self.slots.is_empty() {
            return Err(Error::DegenerateCode("code has a single codeword".into()));
        }
        let big_n = self.field.order() as u128;
        let s = self.slots.len() as u32;
        let projective = self.is_fqm_linear();
        let needed = if projective {
            (0..s)
                .map(|i| big_n.saturating_pow(i))
                .fold(0u128, u128::saturating_add)
        } else {
            big_n.saturating_pow(s) - 1
        };
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let params_of = |i: u128| -> Vec<FieldElement> {
            if !projective {
                return self.decode_index(i + 1);
            }
            // block L holds words whose first nonzero slot is L (set to 1);
            // blocks are ordered by L descending so sizes grow geometrically
            let mut rest = i;
            for lead in (0..s as usize).rev() {
                let block = big_n.pow(s - 1 - lead as u32);
                if rest < block {
                    let mut p = vec![FieldElement::ZERO; s as usize];
                    p[lead] = FieldElement::ONE;
                    let mut r = rest;
                    for x in p.iter_mut().skip(lead + 1) {
                        *x = FieldElement::from_index((r % big_n) as u32);
                        r /= big_n;
                    }
                    return p;
                }
                rest -= block;
            }
            unreachable!("index within the projective count")
        };
        let best = (0..needed)
            .into_par_iter()
            .map(|i| (rank_weight(&self.field, &self.codeword(&params_of(i))), i))
            .min()
            .expect("nonempty scan");
        Ok(MinDistance {
            d: best.0 as u32,
            enumerated: needed,
            witness: params_of(best.1)
                .iter()
                .map(|&c| self.field.coords(c))
                .collect(),
        })
    }

    pub fn singleton_check(&self, d: Option<u32>) -> SingletonReport {
        let (m, n) = (self.field.m(), self.n() as u32);
        // a one-word code has no distance; use the largest possible one
        let d = d.unwrap_or(m.min(n));
        let bound_exponent = singleton_exponent(m, n, d);
        let size_exponent = self.size_exponent() as i64;
        SingletonReport {
            bound_exponent,
            size_exponent,
            is_mrd: !self.slots.is_empty() && bound_exponent == size_exponent,
            defect: bound_exponent - size_exponent,
        }
    }

    /// Slot parameters and columns for the GF(q^m)-linear part, plus the
    /// index of a linked slot that must be scanned.
    fn linear_columns(&self) -> (Vec<Vec<FieldElement>>, Option<usize>) {
        let f = &self.field;
        let mut cols = Vec::new();
        let mut scan = None;
        for (idx, slot) in self.slots.iter().enumerate() {
            match slot {
                Slot::Free(p) => cols.push(self.frob[*p].clone()),
                Slot::Linked { f1, f2, top } => match (f1.is_scalar(), f2.is_scalar()) {
                    (Some(c1), Some(c2)) => cols.push(
                        (0..self.n())
                            .map(|j| {
                                let hi = if c2.is_zero() {
                                    FieldElement::ZERO
                                } else {
                                    self.frob[*top][j]
                                };
                                f.add(f.mul(c1, self.frob[0][j]), f.mul(c2, hi))
                            })
                            .collect(),
                    ),
                    _ => scan = Some(idx),
                },
            }
        }
        (cols, scan)
    }

    /// Membership of an arbitrary word, decided from the code's definition.
    pub fn contains_word(&self, w: &[FieldElement]) -> Result<bool> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.n(),
            });
        }
        let f = &self.field;
        let (cols, scan) = self.linear_columns();
        let solvable = |rhs: &[FieldElement]| -> bool {
            if cols.is_empty() {
                return rhs.iter().all(|x| x.is_zero());
            }
            let a: Matrix = (0..self.n())
                .map(|j| cols.iter().map(|c| c[j]).collect())
                .collect();
            linalg::solve(f, &a, rhs).is_some()
        };
        match scan {
            None => Ok(solvable(w)),
            Some(idx) => {
                let Slot::Linked { f1, f2, top } = &self.slots[idx] else {
                    unreachable!("scan slot is linked")
                };
                Ok(f.elements().any(|a| {
                    let (c0, ck) = (f1.apply(f, a), f2.apply(f, a));
                    let rhs: Vec<_> = (0..self.n())
                        .map(|j| {
                            let part =
                                f.add(f.mul(c0, self.frob[0][j]), f.mul(ck, self.frob[*top][j]));
                            f.sub(w[j], part)
                        })
                        .collect();
                    solvable(&rhs)
                }))
            }
        }
    }

    /// Membership of a σ-polynomial in the code's polynomial space.
    pub fn contains_poly(&self, p: &SigmaPoly) -> bool {
        let f = &self.field;
        let mut coeffs = p.canonical_key();
        for slot in &self.slots {
            if let Slot::Free(pos) = slot {
                coeffs[*pos] = FieldElement::ZERO;
            }
        }
        let linked = self.slots.iter().find_map(|s| match s {
            Slot::Linked { f1, f2, top } => Some((f1, f2, *top)),
            Slot::Free(_) => None,
        });
        match linked {
            None => coeffs.iter().all(|c| c.is_zero()),
            Some((f1, f2, top)) => {
                let (c0, ck) = (coeffs[0], coeffs[top]);
                coeffs[0] = FieldElement::ZERO;
                coeffs[top] = FieldElement::ZERO;
                coeffs.iter().all(|c| c.is_zero())
                    && f.elements()
                        .any(|a| f1.apply(f, a) == c0 && f2.apply(f, a) == ck)
            }
        }
    }

    /// Whether the code contains (G_{m,h,σ})^{σ^j}, the polynomials with
    /// support in [j, j+h−1].
    pub fn contains_power_gabidulin(&self, h: usize, j: usize) -> Containment {
        let m = self.field.m() as usize;
        if h == 0 {
            return Containment {
                holds: true,
                method: "structural".into(),
            };
        }
        if j + h > m {
            return Containment {
                holds: false,
                method: "structural".into(),
            };
        }
        let free = self.free_positions();
        if (j..j + h).all(|i| free.contains(&i)) {
            return Containment {
                holds: true,
                method: "structural".into(),
            };
        }
        // the subcode is GF(p)-spanned by monomials e·x^{σ^i}, e running over
        // the prime-field basis of GF(q^m)
        let f = &self.field;
        let degree = f.coords(FieldElement::ZERO).0.len();
        let holds = (j..j + h).all(|i| {
            (0..degree).all(|e| {
                let mut c = vec![0u32; degree];
                c[e] = 1;
                let unit = f.from_coords(&Coords(c)).expect("basis vector");
                self.contains_poly(&SigmaPoly::monomial(f, i, unit))
            })
        });
        Containment {
            holds,
            method: "generators".into(),
        }
    }
}

fn mrd_condition(field: &Field, f1: &AdditiveMap, f2: &AdditiveMap, k: usize) -> bool {
    let m = field.m();
    let sign = if (m as usize * k).is_multiple_of(2) {
        field.one()
    } else {
        field.neg(field.one())
    };
    field.elements().skip(1).all(|a| {
        let n1 = field.rel_norm(f1.apply(field, a), m, 1).expect("m | m");
        let n2 = field.rel_norm(f2.apply(field, a), m, 1).expect("m | m");
        n1 != field.mul(sign, n2)
    })
}
