//! σ-linearized polynomials Σ a_i x^{σ^i} over GF(q^m), taken modulo
//! x^{σ^m} − x so that they correspond one-to-one with GF(q)-linear maps.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Coords, Field, FieldElement};
use crate::linalg::{self, Matrix};
use crate::subspace::FqSubspace;

#[derive(Clone)]
pub struct SigmaPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for SigmaPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for SigmaPoly {}

impl Hash for SigmaPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl SigmaPoly {
    /// Builds Σ coeffs[i] x^{σ^i}, folding indices ≥ m back via σ^m = id.
    pub fn new(field: &Field, coeffs: &[FieldElement]) -> Self {
        let m = field.m() as usize;
        let mut c = vec![FieldElement::ZERO; m.min(coeffs.len())];
        for (i, &a) in coeffs.iter().enumerate() {
            c[i % m] = field.add(c[i % m], a);
        }
        let mut p = SigmaPoly {
            field: field.clone(),
            coeffs: c,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(field: &Field) -> Self {
        SigmaPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    /// The identity map x.
    pub fn identity(field: &Field) -> Self {
        Self::monomial(field, 0, FieldElement::ONE)
    }

    /// c·x^{σ^i}.
    pub fn monomial(field: &Field, i: usize, c: FieldElement) -> Self {
        let mut v = vec![FieldElement::ZERO; i + 1];
        v[i] = c;
        Self::new(field, &v)
    }

    pub fn from_wire(field: &Field, coeffs: &[Coords]) -> Result<Self> {
        let c = coeffs
            .iter()
            .map(|c| field.from_coords(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, &c))
    }

    pub fn to_wire(&self) -> Vec<Coords> {
        self.coeffs.iter().map(|&c| self.field.coords(c)).collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// σ-degree; `None` for the zero polynomial.
    pub fn sigma_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&FieldElement::ONE)
    }

    /// Indices i with a_i ≠ 0.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    /// Coefficients padded to length m; the total order used for
    /// canonical choices.
    pub fn canonical_key(&self) -> Vec<FieldElement> {
        let mut k = self.coeffs.clone();
        k.resize(self.field.m() as usize, FieldElement::ZERO);
        k
    }

    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|i| {
                let mono = match i {
                    0 => "x".to_string(),
                    1 => "x^σ".to_string(),
                    _ => format!("x^σ{i}"),
                };
                match self.coeffs[i] {
                    FieldElement::ONE => mono,
                    c => format!("{}·{mono}", self.field.pretty(c)),
                }
            })
            .collect();
        terms.join(" + ")
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                "polynomials over different fields".into(),
            ));
        }
        Ok(())
    }

    /// Σ a_i σ^i(x).
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(FieldElement::ZERO, |acc, (i, &c)| {
                f.add(acc, f.mul(c, f.frobenius(x, i as i64)))
            })
    }

    /// Checked evaluation that rejects elements outside the field.
    pub fn evaluate_checked(&self, x: FieldElement) -> Result<FieldElement> {
        if !self.field.contains(x) {
            return Err(Error::FieldMismatch(format!(
                "element index {} outside the field",
                x.index()
            )));
        }
        Ok(self.evaluate(x))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c: Vec<_> = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(&self.field, &c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let c: Vec<_> = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        Self::new(&self.field, &c)
    }

    /// The map x ↦ c·f(x).
    pub fn scalar_mul(&self, c: FieldElement) -> Self {
        let v: Vec<_> = self.coeffs.iter().map(|&a| self.field.mul(c, a)).collect();
        Self::new(&self.field, &v)
    }

    /// f ∘ g: the coefficient a_i b_j^{σ^i} lands on x^{σ^{i+j mod m}}.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_same(g)?;
        let f = &self.field;
        let m = f.m() as usize;
        let mut c = vec![FieldElement::ZERO; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % m;
                c[k] = f.add(c[k], f.mul(a, f.frobenius(b, i as i64)));
            }
        }
        Ok(Self::new(f, &c))
    }

    /// f(x)^{σ^j} = Σ a_i^{σ^j} x^{σ^{i+j}}, i.e. x^{σ^j} ∘ f.
    pub fn sigma_power(&self, j: usize) -> Self {
        let f = &self.field;
        let mut c = vec![FieldElement::ZERO; self.coeffs.len() + j];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i + j] = f.frobenius(a, j as i64);
        }
        Self::new(f, &c)
    }

    /// f̂ = Σ a_i^{σ^{m−i}} x^{σ^{m−i}}, the adjoint under Tr(x·y).
    pub fn adjoint(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.field;
        let m = f.m() as usize;
        let mut c = vec![FieldElement::ZERO; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let k = (m - i) % m;
            c[k] = f.add(c[k], f.frobenius(a, k as i64));
        }
        Ok(Self::new(f, &c))
    }

    /// g = f̂^{σ^k} = Σ_{i ≤ k} a_{k−i}^{σ^i} x^{σ^i} where k = deg_σ f.
    pub fn shifted_adjoint(&self) -> Result<Self> {
        let k = self.sigma_degree().ok_or(Error::ZeroPolynomial)?;
        let f = &self.field;
        let c: Vec<_> = (0..=k)
            .map(|i| f.frobenius(self.coeffs[k - i], i as i64))
            .collect();
        Ok(Self::new(f, &c))
    }

    /// Matrix of the GF(q)-linear map: row j holds the coordinates of
    /// f(b_j) for the fixed basis b_j.
    pub fn map_matrix(&self) -> Matrix {
        let f = &self.field;
        f.q_basis()
            .into_iter()
            .map(|b| f.q_coords(self.evaluate(b)))
            .collect()
    }

    /// ker f as a subspace of GF(q)^m.
    pub fn kernel(&self) -> Result<FqSubspace> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.field;
        let a = self.map_matrix();
        let m = a.len();
        // x·A = 0 ⟺ Aᵀ·xᵀ = 0
        let at: Matrix = (0..m).map(|c| (0..m).map(|r| a[r][c]).collect()).collect();
        let ns = linalg::nullspace(f, &at, m);
        FqSubspace::span(f, m, &ns)
    }

    pub fn kernel_dim(&self) -> usize {
        match self.kernel() {
            Ok(k) => k.dim(),
            Err(_) => self.field.m() as usize,
        }
    }

    /// dim Im f = m − dim ker f.
    pub fn rank(&self) -> usize {
        self.field.m() as usize - self.kernel_dim()
    }

    /// Monic with kernel dimension equal to the σ-degree.
    pub fn is_subspace_poly(&self) -> bool {
        match self.sigma_degree() {
            Some(k) => self.is_monic() && self.kernel_dim() == k,
            None => false,
        }
    }

    /// Kernel dimension equal to the σ-degree, without the monic condition.
    pub fn has_max_kernel(&self) -> bool {
        self.sigma_degree().is_some_and(|k| self.kernel_dim() == k)
    }

    /// The monic σ-polynomial of σ-degree r vanishing exactly on
    /// span_{GF(q)}(basis), via Moore-matrix cofactors.
    pub fn moore(field: &Field, basis: &[FieldElement]) -> Result<Self> {
        let r = basis.len();
        if r >= field.m() as usize {
            return Err(Error::ParamViolation(format!(
                "subspace dimension {r} must be below m = {}",
                field.m()
            )));
        }
        // moore[i][j] = u_j^{σ^i}, i in 0..=r
        let moore: Matrix = (0..=r)
            .map(|i| {
                basis
                    .iter()
                    .map(|&u| field.frobenius(u, i as i64))
                    .collect()
            })
            .collect();
        let minor = |skip: usize| -> Matrix {
            moore
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, row)| row.clone())
                .collect()
        };
        let lead = linalg::determinant(field, &minor(r));
        if lead.is_zero() {
            return Err(Error::DependentBasis);
        }
        let coeffs: Vec<_> = (0..=r)
            .map(|i| {
                let d = field
                    .div(linalg::determinant(field, &minor(i)), lead)
                    .expect("lead is nonzero");
                if (r - i) % 2 == 1 {
                    field.neg(d)
                } else {
                    d
                }
            })
            .collect();
        Ok(Self::new(field, &coeffs))
    }

    /// Moore polynomial of a subspace of GF(q^m) given in q-coordinates.
    pub fn moore_subspace(field: &Field, u: &FqSubspace) -> Result<Self> {
        if u.ambient_dim() != field.m() as usize {
            return Err(Error::AmbientMismatch {
                left: u.ambient_dim(),
                right: field.m() as usize,
            });
        }
        Self::moore(field, &u.basis_elements(field))
    }
}
