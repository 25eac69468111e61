//! GF(q)-subspaces of GF(q)^N in canonical reduced row-echelon form.
//!
//! Two subspaces are equal iff their stored bases are equal, so the type can
//! be hashed and used as a grouping key.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{self, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FqSubspace {
    ambient: usize,
    rows: Matrix,
}

impl FqSubspace {
    /// Span of `rows`; entries must lie in GF(q).
    pub fn span(f: &Field, ambient: usize, rows: &[Vec<FieldElement>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: bad.len(),
            });
        }
        let mut m = rows.to_vec();
        let r = linalg::rref(f, &mut m).len();
        m.truncate(r);
        Ok(FqSubspace { ambient, rows: m })
    }

    pub fn zero(ambient: usize) -> Self {
        FqSubspace {
            ambient,
            rows: Vec::new(),
        }
    }

    /// The GF(q)-span of elements of GF(q^m), in coordinates of the fixed
    /// basis returned by [`Field::q_basis`].
    pub fn from_elements(f: &Field, elems: &[FieldElement]) -> Self {
        let rows: Matrix = elems.iter().map(|&a| f.q_coords(a)).collect();
        Self::span(f, f.m() as usize, &rows).expect("coordinate rows have length m")
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.rows
    }

    /// Basis rows read back as elements of GF(q^m).
    pub fn basis_elements(&self, f: &Field) -> Vec<FieldElement> {
        self.rows.iter().map(|r| f.from_q_coords(r)).collect()
    }

    pub fn contains_vector(&self, f: &Field, v: &[FieldElement]) -> bool {
        let mut m = self.rows.clone();
        m.push(v.to_vec());
        linalg::rank(f, &m) == self.dim()
    }

    pub fn contains_element(&self, f: &Field, a: FieldElement) -> bool {
        self.contains_vector(f, &f.q_coords(a))
    }

    pub fn sum(&self, f: &Field, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::span(f, self.ambient, &rows)
    }

    pub fn intersection_dim(&self, f: &Field, other: &Self) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum(f, other)?.dim())
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Self) -> Result<bool> {
        Ok(self.sum(f, other)?.dim() == other.dim())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// All vectors of the subspace (q^dim of them); for tests and small scans.
    pub fn vectors(&self, f: &Field) -> Vec<Vec<FieldElement>> {
        let scalars = f.base_elements();
        let mut out = vec![vec![FieldElement::ZERO; self.ambient]];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * scalars.len());
            for v in &out {
                for &c in scalars {
                    next.push(
                        v.iter()
                            .zip(row)
                            .map(|(&x, &y)| f.add(x, f.mul(c, y)))
                            .collect(),
                    );
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_ignores_spanning_set() {
        let f = Field::from_params(2, 1, 4, 1).unwrap();
        let g = f.primitive();
        let a = FqSubspace::from_elements(&f, &[f.one(), g]);
        let b = FqSubspace::from_elements(&f, &[f.add(f.one(), g), g, f.zero()]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains_element(&f, f.add(f.one(), g)));
        assert!(!a.contains_element(&f, f.mul(g, g)));
    }

    #[test]
    fn intersection_by_dimension_formula() {
        let f = Field::from_params(2, 1, 4, 1).unwrap();
        let g = f.primitive();
        let a = FqSubspace::from_elements(&f, &[f.one(), g]);
        let b = FqSubspace::from_elements(&f, &[g, f.mul(g, g)]);
        assert_eq!(a.intersection_dim(&f, &b).unwrap(), 1);
        assert_eq!(a.vectors(&f).len(), 4);
    }

    #[test]
    fn ambient_mismatch() {
        let f = Field::from_params(2, 1, 4, 1).unwrap();
        assert!(matches!(
            FqSubspace::zero(3).sum(&f, &FqSubspace::zero(4)),
            Err(Error::AmbientMismatch { .. })
        ));
    }
}
