//! Dense linear algebra over a finite field.
//!
//! The same routines serve GF(q) (entries drawn from the subfield) and
//! GF(q^m), since both live inside one [`Field`].

use crate::field::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Reduces `rows` in place to reduced row-echelon form and returns the pivot
/// columns. Nonzero rows come first, in pivot order; trailing rows are zero.
pub fn rref(f: &Field, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of the right null space {x : A x = 0}, one vector per free column.
pub fn nullspace(f: &Field, rows: &[Vec<FieldElement>], ncols: usize) -> Matrix {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElement::ZERO; ncols];
        v[free] = FieldElement::ONE;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(m[i][free]);
        }
        out.push(v);
    }
    out
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(f: &Field, a: &[Vec<FieldElement>]) -> FieldElement {
    let n = a.len();
    if n == 0 {
        return FieldElement::ONE;
    }
    let mut m = a.to_vec();
    let mut sign_flip = false;
    let mut prev = FieldElement::ONE;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return FieldElement::ZERO,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = f.sub(f.mul(m[i][j], m[k][k]), f.mul(m[i][k], m[k][j]));
                m[i][j] = f
                    .div(num, prev)
                    .expect("Bareiss divisor is a nonzero pivot");
            }
        }
        prev = m[k][k];
    }
    let d = m[n - 1][n - 1];
    if sign_flip {
        f.neg(d)
    } else {
        d
    }
}

/// Some solution of A x = b, if one exists.
pub fn solve(f: &Field, a: &[Vec<FieldElement>], b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![FieldElement::ZERO; ncols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][ncols];
    }
    Some(x)
}

/// Streams every r-dimensional subspace of GF(q)^n as its reduced
/// row-echelon basis, grouped by pivot pattern.
pub struct EchelonEnumerator {
    scalars: Vec<FieldElement>,
    n: usize,
    r: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    counter: Vec<usize>,
    done_pattern: bool,
}

impl EchelonEnumerator {
    /// `scalars` lists the elements of GF(q), zero first.
    pub fn new(scalars: &[FieldElement], n: usize, r: usize) -> Self {
        let pivots = (r <= n).then(|| (0..r).collect::<Vec<_>>());
        let mut e = EchelonEnumerator {
            scalars: scalars.to_vec(),
            n,
            r,
            pivots,
            free: Vec::new(),
            counter: Vec::new(),
            done_pattern: false,
        };
        e.reset_pattern();
        e
    }

    fn reset_pattern(&mut self) {
        self.free.clear();
        if let Some(p) = &self.pivots {
            for (i, &pc) in p.iter().enumerate() {
                for c in pc + 1..self.n {
                    if !p.contains(&c) {
                        self.free.push((i, c));
                    }
                }
            }
        }
        self.counter = vec![0; self.free.len()];
        self.done_pattern = false;
    }

    fn next_pivots(&mut self) {
        let Some(p) = self.pivots.as_mut() else {
            return;
        };
        let (n, r) = (self.n, self.r);
        let mut i = r;
        while i > 0 {
            i -= 1;
            if p[i] < n - r + i {
                p[i] += 1;
                for k in i + 1..r {
                    p[k] = p[k - 1] + 1;
                }
                self.reset_pattern();
                return;
            }
        }
        self.pivots = None;
    }
}

impl Iterator for EchelonEnumerator {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        loop {
            let pivots = self.pivots.as_ref()?;
            if self.done_pattern {
                self.next_pivots();
                continue;
            }
            let mut rows = vec![vec![FieldElement::ZERO; self.n]; self.r];
            for (i, &pc) in pivots.iter().enumerate() {
                rows[i][pc] = FieldElement::ONE;
            }
            for (k, &(i, c)) in self.free.iter().enumerate() {
                rows[i][c] = self.scalars[self.counter[k]];
            }
            // advance the odometer
            let q = self.scalars.len();
            let mut k = 0;
            loop {
                if k == self.counter.len() {
                    self.done_pattern = true;
                    break;
                }
                self.counter[k] += 1;
                if self.counter[k] < q {
                    break;
                }
                self.counter[k] = 0;
                k += 1;
            }
            return Some(rows);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(p: u32, m: u32) -> Field {
        Field::from_params(p, 1, m, 1).unwrap()
    }

    #[test]
    fn echelon_counts_match_gaussian_binomials() {
        let f = gf(2, 4);
        let scalars = f.base_elements().to_vec();
        let counts: Vec<usize> = (0..=4)
            .map(|r| EchelonEnumerator::new(&scalars, 4, r).count())
            .collect();
        assert_eq!(counts, vec![1, 15, 35, 15, 1]);
        let f3 = gf(3, 3);
        let s3 = f3.base_elements().to_vec();
        assert_eq!(EchelonEnumerator::new(&s3, 3, 1).count(), 13);
    }

    #[test]
    fn echelon_bases_are_distinct_and_reduced() {
        let f = gf(2, 4);
        let scalars = f.base_elements().to_vec();
        let all: Vec<Matrix> = EchelonEnumerator::new(&scalars, 4, 2).collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for m in &all {
            let mut c = m.clone();
            rref(&f, &mut c);
            assert_eq!(&c, m);
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let f = gf(3, 2);
        let els: Vec<_> = f.elements().collect();
        let mut seed = 7usize;
        for _ in 0..50 {
            let mut a = vec![vec![FieldElement::ZERO; 3]; 3];
            for row in a.iter_mut() {
                for x in row.iter_mut() {
                    seed = seed.wrapping_mul(1103515245).wrapping_add(12345) % 65536;
                    *x = els[seed % els.len()];
                }
            }
            let minor = |r: usize, c: usize| {
                let rows: Vec<_> = (0..3).filter(|&i| i != r).collect();
                let cols: Vec<_> = (0..3).filter(|&j| j != c).collect();
                f.sub(
                    f.mul(a[rows[0]][cols[0]], a[rows[1]][cols[1]]),
                    f.mul(a[rows[0]][cols[1]], a[rows[1]][cols[0]]),
                )
            };
            let expect = f.add(
                f.sub(f.mul(a[0][0], minor(0, 0)), f.mul(a[0][1], minor(0, 1))),
                f.mul(a[0][2], minor(0, 2)),
            );
            assert_eq!(determinant(&f, &a), expect);
        }
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = gf(2, 3);
        let a = vec![
            vec![FieldElement::ONE, FieldElement::ONE, FieldElement::ZERO],
            vec![FieldElement::ZERO, FieldElement::ONE, FieldElement::ONE],
        ];
        let ns = nullspace(&f, &a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(FieldElement::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = gf(2, 2);
        let a = vec![
            vec![FieldElement::ONE, FieldElement::ONE],
            vec![FieldElement::ONE, FieldElement::ONE],
        ];
        assert!(solve(&f, &a, &[FieldElement::ONE, FieldElement::ZERO]).is_none());
        let x = solve(&f, &a, &[FieldElement::ONE, FieldElement::ONE]).unwrap();
        assert_eq!(f.add(x[0], x[1]), FieldElement::ONE);
    }
}
