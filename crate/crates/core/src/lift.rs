//! Lifting rank-metric codewords to constant-dimension subspace codes.
//!
//! A vector v ∈ GF(q^m)^n is read as the n×m matrix X over GF(q) whose row
//! i holds the coordinates of v_i; its lift is rowspace[I_n | X] inside
//! GF(q)^{n+m}.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{rank_distance, EvalCode};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::subspace::FqSubspace;
use crate::witness::{code_of_report, words_of_report, WitnessReport};

/// How vectors become matrices, echoed into reports.
pub const CONVENTION: &str =
    "rows indexed by evaluation points: I(X) = rowspace[I_n | X], X ∈ GF(q)^{n×m}";

/// rowspace[I_n | X] for an n×m matrix X over GF(q).
pub fn lift_matrix(field: &Field, x: &[Vec<FieldElement>]) -> Result<FqSubspace> {
    let n = x.len();
    let m = x.first().map_or(0, Vec::len);
    if n == 0 || x.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch(
            "lift needs a non-empty rectangular matrix".into(),
        ));
    }
    if x.iter().flatten().any(|&a| !field.in_subfield(a, 1)) {
        return Err(Error::DimensionMismatch(
            "matrix entries must lie in GF(q)".into(),
        ));
    }
    let rows: Matrix = x
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![FieldElement::ZERO; n];
            row[i] = FieldElement::ONE;
            row.extend_from_slice(r);
            row
        })
        .collect();
    FqSubspace::span(field, n + m, &rows)
}

/// Lift of a vector through its coordinate matrix.
pub fn lift(field: &Field, v: &[FieldElement]) -> Result<FqSubspace> {
    let x: Matrix = v.iter().map(|&a| field.q_coords(a)).collect();
    lift_matrix(field, &x)
}

/// d_s(U, V) = dim U + dim V − 2 dim(U ∩ V).
pub fn subspace_distance(field: &Field, u: &FqSubspace, v: &FqSubspace) -> Result<usize> {
    let sum = u.sum(field, v)?.dim();
    Ok(2 * sum - u.dim() - v.dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedParams {
    /// Ambient dimension n+m.
    pub ambient: u32,
    /// Number of codewords M_s.
    pub size: u64,
    /// Minimum subspace distance d_s.
    pub d_s: u32,
    /// Common dimension n of the lifted subspaces.
    pub dim: u32,
    /// Minimum rank distance d_R seen over the same pairs.
    pub d_r: u32,
    pub pairs_checked: u64,
    /// d_s(I(A), I(B)) = 2 rk(A − B) on every pair.
    pub distance_law_holds: bool,
    pub all_distinct: bool,
    pub convention: String,
}

/// Lifts every codeword and checks the distance law on all pairs.
pub fn lift_code(code: &EvalCode, pair_budget: u128) -> Result<LiftedParams> {
    let f = code.field();
    let size = code.total_words();
    if size < 2 {
        return Err(Error::DegenerateCode("fewer than two codewords".into()));
    }
    let pairs = size * (size - 1) / 2;
    if pairs > pair_budget {
        return Err(Error::BudgetExceeded {
            needed: pairs,
            budget: pair_budget,
        });
    }
    let words: Vec<_> = code.codewords().collect();
    let lifts = words
        .par_iter()
        .map(|w| lift(f, w))
        .collect::<Result<Vec<_>>>()?;
    // (d_s, d_R, law) per pair, reduced in parallel
    let (d_s, d_r, law) = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..words.len()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let ds = subspace_distance(f, &lifts[i], &lifts[j]).expect("same ambient");
            let dr = rank_distance(f, &words[i], &words[j]).expect("same length");
            (ds, dr, ds == 2 * dr)
        })
        .reduce(
            || (usize::MAX, usize::MAX, true),
            |a, b| (a.0.min(b.0), a.1.min(b.1), a.2 && b.2),
        );
    let distinct: std::collections::HashSet<_> = lifts.iter().collect();
    Ok(LiftedParams {
        ambient: (code.n() + f.m() as usize) as u32,
        size: size as u64,
        d_s: d_s as u32,
        dim: code.n() as u32,
        d_r: d_r as u32,
        pairs_checked: pairs as u64,
        distance_law_holds: law,
        all_distinct: distinct.len() == lifts.len(),
        convention: CONVENTION.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftBallCheck {
    pub holds: bool,
    /// Subspace radius 2τ.
    pub subspace_radius: u32,
    /// Listed words whose lift lies within the subspace radius.
    pub lifted_list_lower_bound: u64,
    /// Indices of listed words whose lift falls outside.
    pub outside: Vec<usize>,
    pub convention: String,
}

/// Checks that every listed codeword's lift lies within subspace distance
/// 2·radius of the lifted witness, so the rank list injects into the
/// subspace list.
pub fn verify_lift_ball(report: &WitnessReport) -> Result<LiftBallCheck> {
    let code = code_of_report(report)?;
    let f = code.field();
    let (w, list) = words_of_report(f, report)?;
    let center = lift(f, &w)?;
    let radius = 2 * report.radius as usize;
    let outside: Vec<usize> = list
        .par_iter()
        .enumerate()
        .filter_map(|(i, c)| {
            let l = lift(f, c).ok()?;
            let ds = subspace_distance(f, &center, &l).ok()?;
            (ds > radius).then_some(i)
        })
        .collect();
    Ok(LiftBallCheck {
        holds: outside.is_empty(),
        subspace_radius: radius as u32,
        lifted_list_lower_bound: (list.len() - outside.len()) as u64,
        outside,
        convention: CONVENTION.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::CodeSpec;

    #[test]
    fn zero_matrix_lifts_to_identity_block() {
        let f = Field::from_params(2, 1, 2, 1).unwrap();
        let u = lift(&f, &[f.zero(), f.zero()]).unwrap();
        assert_eq!(u.dim(), 2);
        assert_eq!(u.basis()[0], vec![f.one(), f.zero(), f.zero(), f.zero()]);
        assert_eq!(subspace_distance(&f, &u, &u).unwrap(), 0);
    }

    #[test]
    fn gabidulin_k1_n2_parameters() {
        let f = Field::from_params(2, 1, 2, 1).unwrap();
        let c = EvalCode::build(&f, &CodeSpec::Gabidulin { k: 1 }, &f.q_basis()).unwrap();
        let p = lift_code(&c, 1000).unwrap();
        assert_eq!((p.ambient, p.size, p.d_s, p.dim), (4, 4, 4, 2));
        assert!(p.distance_law_holds && p.all_distinct);
    }

    #[test]
    fn entries_outside_base_field_rejected() {
        let f = Field::from_params(2, 1, 2, 1).unwrap();
        let g = f.primitive();
        assert!(matches!(
            lift_matrix(&f, &[vec![g]]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            lift_matrix(&f, &[]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
