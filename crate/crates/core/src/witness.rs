//! Constructive witnesses against efficient list decoding.
//!
//! Each builder produces a word w outside the code together with a list of
//! codewords inside the ball of the stated radius around w, then rechecks
//! every claim about the list directly on the vectors.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_div, gaussian_binomial};
use crate::codes::{
    rank_distance, subfield_basis_points, CodeSpec, Containment, EvalCode, PointsSpec,
};
use crate::error::{Error, Result};
use crate::families::{self, pigeonhole_family, FamilySpec, PigeonholeTrace};
use crate::field::{Coords, Field, FieldElement, FieldSpec, HARD_ORDER_LIMIT};
use crate::sigma_poly::SigmaPoly;
use crate::subspace::FqSubspace;
use crate::SCHEMA_VERSION;

/// Default cap on brute-force enumerations (codewords or weights).
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum WitnessMode {
    /// Arbitrary independent points; pigeonhole family of radius τ.
    GeneralBasis { h: u32, j: u32, tau: u32 },
    /// Points a basis of β·GF(q^n); family inside Pol_{l,h}.
    SubfieldBasis {
        l: u32,
        h: u32,
        j: u32,
        family: FamilySpec,
    },
    /// As above with a family inside P̂ol_{l,h}.
    SubfieldBasisHat {
        l: u32,
        h: u32,
        j: u32,
        family: FamilySpec,
    },
}

impl WitnessMode {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessMode::GeneralBasis { .. } => "general_basis",
            WitnessMode::SubfieldBasis { .. } => "subfield_basis",
            WitnessMode::SubfieldBasisHat { .. } => "subfield_basis_hat",
        }
    }
}

/// Complete, replayable input of a witness construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub field: FieldSpec,
    pub code: CodeSpec,
    pub points: PointsSpec,
    /// Minimum distance to assume when the code is too large to brute-force.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub witness: WitnessMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceSource {
    BruteForce,
    Declared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChecks {
    pub w_outside_code: bool,
    pub all_in_code: bool,
    pub all_within_radius: bool,
    /// Every listed word sits at distance exactly `radius`.
    pub all_at_exact_radius: bool,
    pub pairwise_distinct: bool,
    pub meets_bound: bool,
    /// |C ∩ B_radius(w)| from a full scan, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhaustive_ball: Option<u64>,
}

impl WitnessChecks {
    pub fn passed(&self, list_len: usize, bound: u64) -> bool {
        self.w_outside_code
            && self.all_in_code
            && self.all_within_radius
            && self.pairwise_distinct
            && self.meets_bound
            && self
                .exhaustive_ball
                .is_none_or(|c| c >= list_len as u64 && c >= bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    /// Coefficients of the chosen R, low-to-high.
    pub r: Vec<Coords>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    pub family_size: u64,
    /// Frobenius power σ^shift applied to every family member.
    pub shift: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Coords>,
    /// Support window [window_start, window_start + window_len − 1] of the
    /// Gabidulin subcode that holds the differences R − P.
    pub window_start: u32,
    pub window_len: u32,
    pub containment: Containment,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pigeonhole: Option<PigeonholeTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub schema_version: u32,
    pub mode: String,
    pub field: FieldSpec,
    pub code: CodeSpec,
    pub points: Vec<Coords>,
    pub d: u32,
    pub d_source: DistanceSource,
    pub radius: u32,
    pub w: Vec<Coords>,
    pub list: Vec<Vec<Coords>>,
    pub bound: u64,
    pub verified: bool,
    pub checks: WitnessChecks,
    pub trace: ConstructionTrace,
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisViolation(msg.into())
}

/// Largest radius at which unique decoding is guaranteed.
pub fn unique_radius(d: u32) -> u32 {
    d.saturating_sub(1) / 2
}

/// Exact minimum distance when affordable, else the declared value.
pub fn resolve_distance(
    code: &EvalCode,
    declared: Option<u32>,
    budget: u128,
) -> Result<(u32, DistanceSource)> {
    match code.min_distance(budget) {
        Ok(md) => match declared {
            Some(d) if d != md.d => Err(hypothesis(format!(
                "declared d = {d} but exhaustive enumeration gives d = {}",
                md.d
            ))),
            _ => Ok((md.d, DistanceSource::BruteForce)),
        },
        Err(Error::BudgetExceeded { .. }) if declared.is_some() => {
            Ok((declared.unwrap(), DistanceSource::Declared))
        }
        Err(e) => Err(e),
    }
}

fn require_containment(code: &EvalCode, h: usize, start: usize) -> Result<Containment> {
    let c = code.contains_power_gabidulin(h, start);
    if !c.holds {
        return Err(hypothesis(format!(
            "the code does not contain the Gabidulin subcode with σ-support [{start}, {}]",
            start + h - 1
        )));
    }
    Ok(c)
}

/// Sorts transformed members, picks the first as R and lists c_{R−P}.
struct Assembled {
    r: SigmaPoly,
    w: Vec<FieldElement>,
    list: Vec<Vec<FieldElement>>,
}

fn assemble(code: &EvalCode, mut members: Vec<SigmaPoly>) -> Result<Assembled> {
    members.sort_by_key(SigmaPoly::canonical_key);
    members.dedup();
    let r = members
        .first()
        .cloned()
        .ok_or_else(|| hypothesis("the family is empty"))?;
    let mut list = Vec::with_capacity(members.len());
    for p in &members {
        let diff = r.sub(p)?;
        if !code.contains_poly(&diff) {
            return Err(Error::ContainmentFailure(format!(
                "R − P = {} is not in the code",
                diff.pretty()
            )));
        }
        list.push(code.evaluate_poly(&diff));
    }
    let w = code.evaluate_poly(&r);
    Ok(Assembled { r, w, list })
}

/// Rechecks a candidate list on the vectors themselves.
pub fn check_words(
    code: &EvalCode,
    w: &[FieldElement],
    list: &[Vec<FieldElement>],
    radius: u32,
    bound: u64,
    exhaustive_budget: Option<u128>,
) -> Result<WitnessChecks> {
    let field = code.field();
    let w_outside_code = !code.contains_word(w)?;
    let per_word = list
        .par_iter()
        .map(|c| Ok((code.contains_word(c)?, rank_distance(field, w, c)?)))
        .collect::<Result<Vec<(bool, usize)>>>()?;
    let distinct: HashSet<&Vec<FieldElement>> = list.iter().collect();
    let exhaustive_ball = match exhaustive_budget {
        Some(b) => Some(code.ball_count(w, radius as usize, b)?),
        None => None,
    };
    Ok(WitnessChecks {
        w_outside_code,
        all_in_code: per_word.iter().all(|x| x.0),
        all_within_radius: per_word.iter().all(|x| x.1 <= radius as usize),
        all_at_exact_radius: per_word.iter().all(|x| x.1 == radius as usize),
        pairwise_distinct: distinct.len() == list.len(),
        meets_bound: list.len() as u64 >= bound,
        exhaustive_ball,
    })
}

#[allow(clippy::too_many_arguments)]
fn finish(
    code: &EvalCode,
    mode: &str,
    field_spec: &FieldSpec,
    d: u32,
    d_source: DistanceSource,
    radius: u32,
    bound: u64,
    a: Assembled,
    trace: ConstructionTrace,
) -> Result<WitnessReport> {
    let f = code.field();
    let checks = check_words(code, &a.w, &a.list, radius, bound, None)?;
    let verified = checks.passed(a.list.len(), bound);
    let mut field = field_spec.clone();
    field.modulus = Some(f.params().modulus.clone());
    Ok(WitnessReport {
        schema_version: SCHEMA_VERSION,
        mode: mode.into(),
        field,
        code: code.spec().clone(),
        points: code.points().iter().map(|&a| f.coords(a)).collect(),
        d,
        d_source,
        radius,
        w: a.w.iter().map(|&x| f.coords(x)).collect(),
        list: a
            .list
            .iter()
            .map(|v| v.iter().map(|&x| f.coords(x)).collect())
            .collect(),
        bound,
        verified,
        checks,
        trace: ConstructionTrace {
            r: a.r.to_wire(),
            ..trace
        },
    })
}

/// Witness for codes containing a power of a Gabidulin code, evaluated on
/// arbitrary independent points.
pub fn build_witness_general(
    code: &EvalCode,
    field_spec: &FieldSpec,
    d: u32,
    d_source: DistanceSource,
    h: u32,
    j: u32,
    tau: u32,
) -> Result<WitnessReport> {
    let f = code.field();
    let n = code.n() as u32;
    let lo = unique_radius(d) + 1;
    if !(lo <= tau && tau + 1 <= d) {
        return Err(hypothesis(format!(
            "⌊(d−1)/2⌋+1 ≤ τ ≤ d−1 fails: need {lo} ≤ τ = {tau} ≤ {}",
            d as i64 - 1
        )));
    }
    if j >= tau {
        return Err(hypothesis(format!("j < τ fails: j = {j}, τ = {tau}")));
    }
    if h == 0 {
        return Err(hypothesis("h ≥ 1 fails"));
    }
    if h + tau > n {
        return Err(hypothesis(format!(
            "g = n−h−τ+1 ≥ 1 fails: n = {n}, h = {h}, τ = {tau}"
        )));
    }
    let containment = require_containment(code, h as usize, j as usize)?;
    let r = (n - tau) as usize;
    let g = (n - h - tau + 1) as usize;
    let (members, ph) = pigeonhole_family(f, code.points(), r, g)?;
    let family_size = members.len() as u64;
    let shifted: Vec<_> = members.iter().map(|p| p.sigma_power(j as usize)).collect();
    let assembled = assemble(code, shifted)?;
    let q = BigUint::from(f.q());
    let bound = ceil_div(
        &gaussian_binomial(n, n - tau, f.q()),
        &q.pow(f.m() * (n - tau - h)),
    );
    let bound = bound
        .to_u64()
        .ok_or_else(|| Error::Malformed("bound overflows u64".into()))?;
    finish(
        code,
        "general_basis",
        field_spec,
        d,
        d_source,
        tau,
        bound,
        assembled,
        ConstructionTrace {
            r: Vec::new(),
            family: None,
            family_size,
            shift: j,
            beta: None,
            window_start: j,
            window_len: h,
            containment,
            pigeonhole: Some(ph),
        },
    )
}

/// β with span(points) = β·GF(q^n), or an error naming the failure.
pub fn subfield_beta(code: &EvalCode) -> Result<FieldElement> {
    let f = code.field();
    let n = code.n() as u32;
    if !f.m().is_multiple_of(n) {
        return Err(hypothesis(format!("n | m fails: n = {n}, m = {}", f.m())));
    }
    let beta = code.points()[0];
    let expected = FqSubspace::from_elements(f, &subfield_basis_points(f, n, beta)?);
    if FqSubspace::from_elements(f, code.points()) != expected {
        return Err(hypothesis(format!(
            "the points do not form a basis of β·GF(q^{n})"
        )));
    }
    Ok(beta)
}

fn check_family_support(fam: &families::Family, n: u32, l: u32, h: u32, hat: bool) -> Result<()> {
    if fam.level != n {
        return Err(hypothesis(format!(
            "family defined over GF(q^{}) but n = {n}",
            fam.level
        )));
    }
    for p in &fam.members {
        let f = p.field();
        let (anchor, allowed): (usize, Box<dyn Fn(usize) -> bool>) = if hat {
            let lo = (l - h + 1) as usize;
            (
                0,
                Box::new(move |i| i == 0 || (lo..=l as usize).contains(&i)),
            )
        } else {
            (
                l as usize,
                Box::new(move |i| i == l as usize || i < h as usize),
            )
        };
        let outside = p.support().into_iter().find(|&i| !allowed(i));
        if p.coeff(anchor) != f.one() || outside.is_some() || p.sigma_degree() > Some(l as usize) {
            let set = if hat { "P̂ol" } else { "Pol" };
            return Err(Error::FamilyNotInPol(format!(
                "{} ∉ {set}_{{{l},{h}}}",
                p.pretty()
            )));
        }
        if p.coeffs().iter().any(|&c| !f.in_subfield(c, n)) {
            return Err(Error::FamilyNotInPol(format!(
                "{} has coefficients outside GF(q^{n})",
                p.pretty()
            )));
        }
        if p.kernel_dim() != l as usize {
            return Err(hypothesis(format!(
                "{} is not a σ-subspace polynomial of σ-degree {l}",
                p.pretty()
            )));
        }
    }
    Ok(())
}

fn build_subfield(
    code: &EvalCode,
    field_spec: &FieldSpec,
    d: u32,
    d_source: DistanceSource,
    (l, h, j): (u32, u32, u32),
    family: &FamilySpec,
    hat: bool,
) -> Result<WitnessReport> {
    let f = code.field();
    let n = code.n() as u32;
    let beta = subfield_beta(code)?;
    let ur = unique_radius(d);
    if !(n as i64 - d as i64 + 1 <= l as i64 && l + ur + 1 <= n) {
        return Err(hypothesis(format!(
            "n−d+1 ≤ l ≤ n−⌊(d−1)/2⌋−1 fails: need {} ≤ l = {l} ≤ {}",
            n as i64 - d as i64 + 1,
            n as i64 - ur as i64 - 1
        )));
    }
    if h == 0 || l < h {
        return Err(hypothesis(format!("1 ≤ h ≤ l fails: h = {h}, l = {l}")));
    }
    let start = if hat {
        if (j as i64) >= n as i64 - 2 * l as i64 + h as i64 - 1 {
            return Err(hypothesis(format!(
                "j < n−2l+h−1 fails: j = {j}, n−2l+h−1 = {}",
                n as i64 - 2 * l as i64 + h as i64 - 1
            )));
        }
        l - h + 1 + j
    } else {
        if j >= n - l {
            return Err(hypothesis(format!(
                "j < n−l fails: j = {j}, n−l = {}",
                n - l
            )));
        }
        j
    };
    let containment = require_containment(code, h as usize, start as usize)?;
    let fam = families::generate(f, family)?;
    check_family_support(&fam, n, l, h, hat)?;
    let shifted = fam
        .members
        .iter()
        .map(|p| Ok(families::scale_transform(p, beta)?.sigma_power(j as usize)))
        .collect::<Result<Vec<_>>>()?;
    let assembled = assemble(code, shifted)?;
    let bound = assembled.list.len() as u64;
    finish(
        code,
        if hat {
            "subfield_basis_hat"
        } else {
            "subfield_basis"
        },
        field_spec,
        d,
        d_source,
        n - l,
        bound,
        assembled,
        ConstructionTrace {
            r: Vec::new(),
            family: Some(family.clone()),
            family_size: fam.members.len() as u64,
            shift: j,
            beta: Some(f.coords(beta)),
            window_start: start,
            window_len: h,
            containment,
            pigeonhole: None,
        },
    )
}

/// Witness from a family of subspace polynomials inside Pol_{l,h}.
pub fn build_witness_subfield(
    code: &EvalCode,
    field_spec: &FieldSpec,
    d: u32,
    d_source: DistanceSource,
    l: u32,
    h: u32,
    j: u32,
    family: &FamilySpec,
) -> Result<WitnessReport> {
    build_subfield(code, field_spec, d, d_source, (l, h, j), family, false)
}

/// Witness from a family inside P̂ol_{l,h}.
pub fn build_witness_subfield_hat(
    code: &EvalCode,
    field_spec: &FieldSpec,
    d: u32,
    d_source: DistanceSource,
    l: u32,
    h: u32,
    j: u32,
    family: &FamilySpec,
) -> Result<WitnessReport> {
    build_subfield(code, field_spec, d, d_source, (l, h, j), family, true)
}

/// Builds the field, code and report described by `spec`.
pub fn build_from_spec(
    spec: &WitnessSpec,
    field_limit: u64,
    budget: u128,
) -> Result<WitnessReport> {
    let field = Field::with_limit(&spec.field, field_limit)?;
    let points = spec.points.resolve(&field)?;
    let code = EvalCode::build(&field, &spec.code, &points)?;
    build_for_code(&code, &spec.field, spec.d, &spec.witness, budget)
}

pub fn build_for_code(
    code: &EvalCode,
    field_spec: &FieldSpec,
    declared_d: Option<u32>,
    mode: &WitnessMode,
    budget: u128,
) -> Result<WitnessReport> {
    let (d, src) = resolve_distance(code, declared_d, budget)?;
    match mode {
        WitnessMode::GeneralBasis { h, j, tau } => {
            build_witness_general(code, field_spec, d, src, *h, *j, *tau)
        }
        WitnessMode::SubfieldBasis { l, h, j, family } => {
            build_witness_subfield(code, field_spec, d, src, *l, *h, *j, family)
        }
        WitnessMode::SubfieldBasisHat { l, h, j, family } => {
            build_witness_subfield_hat(code, field_spec, d, src, *l, *h, *j, family)
        }
    }
}

/// Rebuilds the code of a report (fields are rebuilt up to the hard cap,
/// since the report already carries an accepted modulus).
pub fn code_of_report(report: &WitnessReport) -> Result<EvalCode> {
    let field = Field::with_limit(&report.field, HARD_ORDER_LIMIT)?;
    let points = report
        .points
        .iter()
        .map(|c| field.from_coords(c))
        .collect::<Result<Vec<_>>>()?;
    EvalCode::build(&field, &report.code, &points)
}

/// Decoded w and list of a report.
pub fn words_of_report(
    field: &Field,
    report: &WitnessReport,
) -> Result<(Vec<FieldElement>, Vec<Vec<FieldElement>>)> {
    let dec = |v: &[Coords]| {
        v.iter()
            .map(|c| field.from_coords(c))
            .collect::<Result<Vec<_>>>()
    };
    let w = dec(&report.w)?;
    let list = report
        .list
        .iter()
        .map(|v| dec(v))
        .collect::<Result<Vec<_>>>()?;
    Ok((w, list))
}

/// Independently rechecks a report; `exhaustive_budget` adds a full ball scan.
pub fn verify_report(
    report: &WitnessReport,
    exhaustive_budget: Option<u128>,
) -> Result<WitnessChecks> {
    let code = code_of_report(report)?;
    let (w, list) = words_of_report(code.field(), report)?;
    check_words(
        &code,
        &w,
        &list,
        report.radius,
        report.bound,
        exhaustive_budget,
    )
}
