//! Exact arithmetic in GF(q^m), q = p^ell, with the Frobenius generator
//! σ: x ↦ x^{q^s} and relative trace/norm maps onto intermediate fields.
//!
//! The whole tower lives in one table-driven field of order p^{ell·m}.
//! Elements are packed integers: the coordinate vector (c_0, ..., c_{D-1})
//! with respect to the power basis of the modulus maps to Σ c_i p^i. A
//! subfield GF(q^r) is never given its own representation; membership is the
//! Frobenius fixed-point test a^{q^r} = a.

mod exponent;
mod gfp_poly;

pub use exponent::{exponent_reduce, SigmaExponent};

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default refusal threshold for q^m.
pub const DESK_SCALE_ORDER: u64 = 1 << 20;
/// Absolute ceiling, reachable only with an explicit override.
pub const HARD_ORDER_LIMIT: u64 = 1 << 24;

/// An element of GF(q^m), stored as its packed coordinate integer.
///
/// The derived order (numeric order of the packed value) is the canonical
/// total order used for tie-breaking and deduplication.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn from_index(v: u32) -> Self {
        FieldElement(v)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Wire form of an element: coordinates over GF(p), low-to-high.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coords(pub Vec<u32>);

/// User-facing field request; the modulus is searched when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub ell: u32,
    pub m: u32,
    #[serde(default = "one")]
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldSpec {
    pub fn new(p: u32, ell: u32, m: u32, s: u32) -> Self {
        FieldSpec {
            p,
            ell,
            m,
            s,
            modulus: None,
        }
    }
}

/// Fully resolved parameters of the tower GF(p) ⊆ GF(q) ⊆ GF(q^m).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u32,
    pub ell: u32,
    pub m: u32,
    pub s: u32,
    /// Monic irreducible of degree m·ell over GF(p), low-to-high.
    pub modulus: Vec<u32>,
}

impl FieldParams {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.ell)
    }

    pub fn degree(&self) -> u32 {
        self.m * self.ell
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.degree())
    }
}

impl From<&FieldParams> for FieldSpec {
    fn from(p: &FieldParams) -> Self {
        FieldSpec {
            p: p.p,
            ell: p.ell,
            m: p.m,
            s: p.s,
            modulus: Some(p.modulus.clone()),
        }
    }
}

struct Inner {
    params: FieldParams,
    q: u64,
    order: u32,
    digits: usize,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// q^j mod (order - 1), j in 0..m
    q_pow_mod: Vec<u64>,
    primitive: FieldElement,
    /// Sorted elements of the prime-power subfield GF(q).
    base_elements: Vec<FieldElement>,
    /// Trace-dual of the basis 1, x, ..., x^{m-1}; empty when ell = 1.
    dual_basis: Vec<FieldElement>,
}

/// A finite field GF(q^m) with its distinguished Frobenius generator.
///
/// Cloning is cheap; all tables are shared.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.0.params;
        write!(f, "GF({}^({}*{}), s={})", p.p, p.ell, p.m, p.s)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.params == other.0.params
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Digit-array arithmetic used only while building the tables.
struct Builder<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl Builder<'_> {
    fn unpack(&self, mut v: u32, d: usize) -> Vec<u32> {
        (0..d)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn pack(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn mul_x(&self, c: &mut [u32]) {
        let d = c.len();
        let top = c[d - 1];
        c.rotate_right(1);
        c[0] = 0;
        if top != 0 {
            for (ci, &mi) in c.iter_mut().zip(self.modulus.iter()) {
                let sub = (top as u64 * mi as u64 % self.p as u64) as u32;
                *ci = (*ci + self.p - sub) % self.p;
            }
        }
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = a.len();
        let mut acc = vec![0u32; d];
        for i in (0..d).rev() {
            self.mul_x(&mut acc);
            if b[i] != 0 {
                for k in 0..d {
                    acc[k] = ((acc[k] as u64 + b[i] as u64 * a[k] as u64) % self.p as u64) as u32;
                }
            }
        }
        acc
    }

    fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let d = a.len();
        let mut acc = vec![0u32; d];
        acc[0] = 1;
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Field {
    /// Builds GF(q^m) refusing orders above [`DESK_SCALE_ORDER`].
    pub fn new(spec: &FieldSpec) -> Result<Field> {
        Self::with_limit(spec, DESK_SCALE_ORDER)
    }

    /// Convenience constructor with the canonical modulus.
    pub fn from_params(p: u32, ell: u32, m: u32, s: u32) -> Result<Field> {
        Self::new(&FieldSpec::new(p, ell, m, s))
    }

    pub fn with_limit(spec: &FieldSpec, limit: u64) -> Result<Field> {
        let limit = limit.min(HARD_ORDER_LIMIT);
        let FieldSpec { p, ell, m, s, .. } = *spec;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        if ell == 0 || m == 0 {
            return Err(Error::InvalidField("ell and m must be positive".into()));
        }
        if s == 0 || gcd(s as u64, m as u64) != 1 {
            return Err(Error::InvalidField(format!(
                "gcd(s = {s}, m = {m}) must be 1"
            )));
        }
        let d = ell
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidField("degree overflow".into()))?;
        let order =
            (p as u64)
                .checked_pow(d)
                .filter(|&o| o <= limit)
                .ok_or(Error::FieldTooLarge {
                    order: (p as f64).powi(d as i32).min(u64::MAX as f64) as u64,
                    limit,
                })?;
        let modulus = match &spec.modulus {
            Some(f) => {
                if f.len() != d as usize + 1 || f[d as usize] != 1 || f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus must be monic of degree {d} with coefficients below {p}"
                    )));
                }
                if !gfp_poly::is_irreducible(f, p) {
                    return Err(Error::InvalidField("modulus is reducible".into()));
                }
                f.clone()
            }
            None => gfp_poly::smallest_irreducible(p, d),
        };
        let params = FieldParams {
            p,
            ell,
            m,
            s,
            modulus,
        };
        Ok(Field(Arc::new(Self::build_tables(params, order as u32))))
    }

    fn build_tables(params: FieldParams, order: u32) -> Inner {
        let d = params.degree() as usize;
        let b = Builder {
            p: params.p,
            modulus: &params.modulus,
        };
        let group = (order - 1) as u64;
        let factors = prime_factors(group);
        // smallest primitive element in the packed order
        let primitive = if order == 2 {
            1
        } else {
            (2..order)
                .find(|&v| {
                    let c = b.unpack(v, d);
                    factors.iter().all(|&r| {
                        let t = b.pow(&c, group / r);
                        !(t[0] == 1 && t[1..].iter().all(|&x| x == 0))
                    })
                })
                .expect("multiplicative group is cyclic")
        };
        let g = b.unpack(primitive, d);
        let g_support: Vec<(usize, u32)> = g
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let mut exp = vec![0u32; group as usize];
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            let v = b.pack(&cur);
            *slot = v;
            log[v as usize] = i as u32;
            // cur <- cur * g, using the sparse support of g
            let mut next = vec![0u32; d];
            let mut shifted = cur.clone();
            let mut deg = 0;
            for &(k, c) in &g_support {
                while deg < k {
                    b.mul_x(&mut shifted);
                    deg += 1;
                }
                for t in 0..d {
                    next[t] =
                        ((next[t] as u64 + c as u64 * shifted[t] as u64) % params.p as u64) as u32;
                }
            }
            cur = next;
        }
        let q = params.q();
        let q_pow_mod = (0..params.m)
            .map(|j| gfp_poly::pow_mod(q, j as u64, group.max(1)))
            .collect();
        let mut inner = Inner {
            params,
            q,
            order,
            digits: d,
            exp,
            log,
            q_pow_mod,
            primitive: FieldElement(primitive),
            base_elements: Vec::new(),
            dual_basis: Vec::new(),
        };
        let field = Field(Arc::new(inner));
        let base = field.subfield_elements(1);
        let dual = if field.0.params.ell == 1 {
            Vec::new()
        } else {
            field.compute_dual_basis()
        };
        inner = Arc::try_unwrap(field.0)
            .ok()
            .expect("sole owner during construction");
        inner.base_elements = base;
        inner.dual_basis = dual;
        inner
    }

    pub fn params(&self) -> &FieldParams {
        &self.0.params
    }

    pub fn p(&self) -> u32 {
        self.0.params.p
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn m(&self) -> u32 {
        self.0.params.m
    }

    pub fn s(&self) -> u32 {
        self.0.params.s
    }

    /// Number of elements q^m.
    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn primitive(&self) -> FieldElement {
        self.0.primitive
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.0.order).map(FieldElement)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.0.order
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!(
                "element index {} outside {:?}",
                a.0, self
            )))
        }
    }

    // ---- coordinates ----

    pub fn coords(&self, a: FieldElement) -> Coords {
        let p = self.p();
        let mut v = a.0;
        Coords(
            (0..self.0.digits)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    c
                })
                .collect(),
        )
    }

    pub fn from_coords(&self, c: &Coords) -> Result<FieldElement> {
        let p = self.p();
        if c.0.len() > self.0.digits {
            return Err(Error::FieldMismatch(format!(
                "{} coordinates for a field of degree {}",
                c.0.len(),
                self.0.digits
            )));
        }
        if let Some(bad) = c.0.iter().find(|&&x| x >= p) {
            return Err(Error::FieldMismatch(format!(
                "coordinate {bad} not reduced mod {p}"
            )));
        }
        Ok(FieldElement(
            c.0.iter().rev().fold(0, |acc, &x| acc * p + x),
        ))
    }

    /// Embeds an integer of GF(p) as a field element.
    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p() as i64) as u32)
    }

    // ---- arithmetic ----

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p();
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut scale = 1u32;
        while x != 0 || y != 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p();
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut scale = 1u32;
        while x != 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let group = self.0.exp.len();
        let mut e = self.0.log[a.0 as usize] as usize + self.0.log[b.0 as usize] as usize;
        if e >= group {
            e -= group;
        }
        FieldElement(self.0.exp[e])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let group = self.0.exp.len();
        let l = self.0.log[a.0 as usize] as usize;
        Some(FieldElement(self.0.exp[(group - l) % group]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let bi = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    /// Checked binary operation; validates membership of both operands.
    pub fn arith(&self, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let group = self.0.exp.len() as u128;
        let l = self.0.log[a.0 as usize] as u128;
        FieldElement(self.0.exp[(l * (e as u128 % group) % group) as usize])
    }

    /// Discrete logarithm to the base [`Field::primitive`]; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// Short human-readable form: `0`, `1`, or `g^k`.
    pub fn pretty(&self, a: FieldElement) -> String {
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "g".into(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// a^e for an arbitrary-precision exponent, reduced mod q^m - 1 first.
    pub fn pow_big(&self, a: FieldElement, e: &BigUint) -> FieldElement {
        if e.bits() == 0 {
            return FieldElement::ONE;
        }
        let group = BigUint::from(self.0.exp.len() as u64);
        let reduced = (e % &group).to_u64().expect("reduced below group order");
        if reduced == 0 {
            // a nonzero a lands on 1; zero stays zero
            return if a.0 == 0 {
                FieldElement::ZERO
            } else {
                FieldElement::ONE
            };
        }
        self.pow(a, reduced)
    }

    /// a^{q^e} for 0 ≤ e < m.
    fn frob_q(&self, a: FieldElement, e: u32) -> FieldElement {
        if a.0 == 0 || e == 0 {
            return a;
        }
        let group = self.0.exp.len() as u128;
        let l = self.0.log[a.0 as usize] as u128;
        let mult = self.0.q_pow_mod[(e % self.m()) as usize] as u128;
        FieldElement(self.0.exp[(l * mult % group) as usize])
    }

    /// σ^i(a) = a^{q^{s·i mod m}}; i may be negative.
    pub fn frobenius(&self, a: FieldElement, i: i64) -> FieldElement {
        let m = self.m() as i64;
        let e = (self.s() as i64 * i.rem_euclid(m)).rem_euclid(m);
        self.frob_q(a, e as u32)
    }

    // ---- subfields, trace, norm ----

    /// Whether `a` lies in GF(q^r). Requires r | m for a meaningful answer.
    pub fn in_subfield(&self, a: FieldElement, r: u32) -> bool {
        self.frob_q(a, r % self.m()) == a
    }

    /// Elements of GF(q^r) ⊆ GF(q^m) in canonical order.
    pub fn subfield_elements(&self, r: u32) -> Vec<FieldElement> {
        assert!(
            r >= 1 && self.m().is_multiple_of(r),
            "GF(q^{r}) is not a subfield"
        );
        let sub_order = self.q().pow(r);
        let group = self.0.exp.len() as u64;
        let step = group / (sub_order - 1);
        let mut out: Vec<FieldElement> = std::iter::once(FieldElement::ZERO)
            .chain((0..sub_order - 1).map(|i| FieldElement(self.0.exp[(i * step) as usize])))
            .collect();
        out.sort_unstable();
        out
    }

    /// A generator of GF(q^r)*.
    pub fn subfield_primitive(&self, r: u32) -> FieldElement {
        let sub_order = self.q().pow(r);
        let step = self.0.exp.len() as u64 / (sub_order - 1);
        FieldElement(self.0.exp[step as usize % self.0.exp.len()])
    }

    /// The elements of GF(q), sorted.
    pub fn base_elements(&self) -> &[FieldElement] {
        &self.0.base_elements
    }

    fn check_levels(&self, n: u32, r: u32) -> Result<()> {
        if n == 0 || !self.m().is_multiple_of(n) {
            return Err(Error::NonDivisorDegree { n: self.m(), r: n });
        }
        if r == 0 || !n.is_multiple_of(r) {
            return Err(Error::NonDivisorDegree { n, r });
        }
        Ok(())
    }

    /// Tr_{q^n/q^r}(a) = Σ_{i<n/r} a^{q^{ir}} for a ∈ GF(q^n).
    pub fn rel_trace(&self, a: FieldElement, n: u32, r: u32) -> Result<FieldElement> {
        self.check_levels(n, r)?;
        self.check(a)?;
        if !self.in_subfield(a, n) {
            return Err(Error::NotInSubfield(n));
        }
        Ok((0..n / r).fold(FieldElement::ZERO, |acc, i| {
            self.add(acc, self.frob_q(a, i * r))
        }))
    }

    /// N_{q^n/q^r}(a) = a^{(q^n-1)/(q^r-1)} for a ∈ GF(q^n).
    pub fn rel_norm(&self, a: FieldElement, n: u32, r: u32) -> Result<FieldElement> {
        self.check_levels(n, r)?;
        self.check(a)?;
        if !self.in_subfield(a, n) {
            return Err(Error::NotInSubfield(n));
        }
        let q = self.q();
        Ok(self.pow(a, (q.pow(n) - 1) / (q.pow(r) - 1)))
    }

    /// Absolute trace Tr_{q^m/q}.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        (0..self.m()).fold(FieldElement::ZERO, |acc, i| {
            self.add(acc, self.frob_q(a, i))
        })
    }

    // ---- GF(q)-coordinates ----

    /// The fixed GF(q)-basis 1, x, ..., x^{m-1} of GF(q^m).
    pub fn q_basis(&self) -> Vec<FieldElement> {
        let x = if self.0.digits == 1 {
            // GF(p) itself: the only basis vector is 1
            return vec![FieldElement::ONE];
        } else {
            FieldElement(self.p())
        };
        let mut out = Vec::with_capacity(self.m() as usize);
        let mut cur = FieldElement::ONE;
        for _ in 0..self.m() {
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out
    }

    fn compute_dual_basis(&self) -> Vec<FieldElement> {
        let basis = self.q_basis();
        let m = basis.len();
        // Gram matrix over GF(q), augmented with the identity
        let mut rows: Vec<Vec<FieldElement>> = (0..m)
            .map(|i| {
                let mut row: Vec<FieldElement> = (0..m)
                    .map(|j| self.trace(self.mul(basis[i], basis[j])))
                    .collect();
                row.extend((0..m).map(|j| {
                    if i == j {
                        FieldElement::ONE
                    } else {
                        FieldElement::ZERO
                    }
                }));
                row
            })
            .collect();
        let pivots = crate::linalg::rref(self, &mut rows);
        assert_eq!(
            &pivots[..],
            &(0..m).collect::<Vec<_>>()[..],
            "trace form is non-degenerate"
        );
        (0..m)
            .map(|j| {
                (0..m).fold(FieldElement::ZERO, |acc, k| {
                    self.add(acc, self.mul(rows[j][m + k], basis[k]))
                })
            })
            .collect()
    }

    /// Coordinates of `a` over GF(q) in [`Field::q_basis`]; the entries are
    /// elements of the subfield GF(q).
    pub fn q_coords(&self, a: FieldElement) -> Vec<FieldElement> {
        if self.0.params.ell == 1 {
            let p = self.p();
            let mut v = a.0;
            return (0..self.0.digits)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    FieldElement(c)
                })
                .collect();
        }
        self.0
            .dual_basis
            .iter()
            .map(|&d| self.trace(self.mul(a, d)))
            .collect()
    }

    pub fn from_q_coords(&self, c: &[FieldElement]) -> FieldElement {
        if self.0.params.ell == 1 {
            let p = self.p();
            return FieldElement(c.iter().rev().fold(0, |acc, x| acc * p + x.0));
        }
        self.q_basis()
            .iter()
            .zip(c)
            .fold(FieldElement::ZERO, |acc, (&b, &x)| {
                self.add(acc, self.mul(b, x))
            })
    }

    /// Bit-packed GF(2) coordinates, available when q = 2.
    pub(crate) fn binary_coords(&self, a: FieldElement) -> Option<u32> {
        (self.q() == 2).then_some(a.0)
    }

    /// Parse the shorthand forms accepted in specs: explicit coordinates,
    /// or a power of the primitive element.
    pub fn resolve(&self, e: &ElementSpec) -> Result<FieldElement> {
        match e {
            ElementSpec::Coords(c) => self.from_coords(c),
            ElementSpec::One => Ok(FieldElement::ONE),
            ElementSpec::Primitive => Ok(self.primitive()),
            ElementSpec::PrimitivePower { power } => Ok(self.pow(self.primitive(), *power)),
        }
    }
}

/// An element given in a spec file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Coords(Coords),
    PrimitivePower {
        power: u64,
    },
    #[serde(with = "unit_primitive")]
    Primitive,
    #[serde(with = "unit_one")]
    One,
}

macro_rules! unit_keyword {
    ($modname:ident, $word:literal) => {
        mod $modname {
            use serde::{de::Error, Deserialize, Deserializer, Serializer};
            pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str($word)
            }
            pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
                let s = String::deserialize(d)?;
                if s == $word {
                    Ok(())
                } else {
                    Err(D::Error::custom(concat!("expected \"", $word, "\"")))
                }
            }
        }
    };
}
unit_keyword!(unit_primitive, "primitive");
unit_keyword!(unit_one, "one");

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}
