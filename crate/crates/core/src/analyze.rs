//! Evaluates the arithmetic hypotheses of the list-decodability results for
//! a concrete code and emits a runnable witness recipe for each one that
//! applies.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_div, cj_mbound, gaussian_binomial};
use crate::codes::{CodeSpec, EvalCode, MapSpec};
use crate::families::FamilySpec;
use crate::witness::{subfield_beta, unique_radius, WitnessMode};

/// Pigeonhole recipes enumerate this many subspaces at most.
pub const RECIPE_SUBSPACE_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub theorem: String,
    pub applicable: bool,
    /// First hypothesis that failed, for inapplicable claims.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_hypothesis: Option<String>,
    /// The integer parameter t (or τ) the claim was instantiated with.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Not efficiently list decodable at any radius ≥ this value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius_threshold: Option<u32>,
    /// Not efficiently list decodable at any radius beyond unique decoding.
    pub at_all: bool,
    /// Guaranteed list size of the recipe's witness (decimal).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub list_size_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_recipe: Option<WitnessMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Claim {
    fn fail(theorem: &str, why: impl Into<String>) -> Self {
        Claim {
            theorem: theorem.into(),
            applicable: false,
            failed_hypothesis: Some(why.into()),
            t: None,
            radius_threshold: None,
            at_all: false,
            list_size_bound: None,
            witness_recipe: None,
            note: None,
        }
    }

    fn hit(
        theorem: &str,
        t: u32,
        radius: u32,
        bound: BigUint,
        recipe: Option<WitnessMode>,
    ) -> Self {
        Claim {
            theorem: theorem.into(),
            applicable: true,
            failed_hypothesis: None,
            t: Some(t),
            radius_threshold: Some(radius),
            at_all: false,
            list_size_bound: Some(bound.to_string()),
            witness_recipe: recipe,
            note: None,
        }
    }
}

/// Flat CSV row of a claim; the recipe is embedded as JSON.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimRow {
    pub theorem: String,
    pub applicable: bool,
    pub failed_hypothesis: String,
    pub t: String,
    pub radius_threshold: String,
    pub at_all: bool,
    pub list_size_bound: String,
    pub witness_recipe: String,
    pub note: String,
}

impl From<&Claim> for ClaimRow {
    fn from(c: &Claim) -> Self {
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        ClaimRow {
            theorem: c.theorem.clone(),
            applicable: c.applicable,
            failed_hypothesis: c.failed_hypothesis.clone().unwrap_or_default(),
            t: opt(c.t),
            radius_threshold: opt(c.radius_threshold),
            at_all: c.at_all,
            list_size_bound: c.list_size_bound.clone().unwrap_or_default(),
            witness_recipe: c
                .witness_recipe
                .as_ref()
                .map(|r| serde_json::to_string(r).expect("plain data"))
                .unwrap_or_default(),
            note: c.note.clone().unwrap_or_default(),
        }
    }
}

struct Ctx<'a> {
    code: &'a EvalCode,
    n: u32,
    m: u32,
    q: u64,
    p: u32,
    d: u32,
    /// ⌊(d−1)/2⌋
    ur: u32,
    subfield: Result<(), String>,
}

impl Ctx<'_> {
    fn ratio(&self, t: u32) -> BigUint {
        let q = BigUint::from(self.q);
        (q.pow(self.n) - 1u32) / (q.pow(t) - 1u32)
    }

    /// Smallest j < limit with (G_h)^{σ^j} inside the code.
    fn shift(&self, h: u32, limit: u32) -> Option<u32> {
        (0..limit).find(|&j| {
            self.code
                .contains_power_gabidulin(h as usize, j as usize)
                .holds
        })
    }

    /// Witness through the trace family: radius t, Pol_{n−t, n−2t+1},
    /// shift j < t−1.
    fn trace_route(&self, t: u32) -> Result<WitnessMode, String> {
        let h = self.n as i64 - 2 * t as i64 + 1;
        if h <= 0 {
            return Err(format!(
                "n−2t+1 = {h} ≤ 0 leaves no Gabidulin subcode to use"
            ));
        }
        let h = h as u32;
        match self.shift(h, t.saturating_sub(1)) {
            Some(j) => Ok(WitnessMode::SubfieldBasis {
                l: self.n - t,
                h,
                j,
                family: FamilySpec::Trace { n: self.n, t },
            }),
            None => Err(format!(
                "no shift j < t−1 = {} with (G_{{n,{h}}})^{{σ^j}} inside the code",
                t as i64 - 1
            )),
        }
    }

    fn require_subfield(&self, theorem: &str) -> Option<Claim> {
        self.subfield
            .as_ref()
            .err()
            .map(|e| Claim::fail(theorem, e.clone()))
    }

    fn divisors(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n).filter(move |t| self.n.is_multiple_of(*t))
    }
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

/// The theorem identifiers reported by [`analyze_decodability`].
pub const THEOREMS: [&str; 12] = [
    "gabidulin_subcode_pigeonhole",
    "binomial_family",
    "trace_family",
    "trinomial_family_1",
    "trinomial_family_2",
    "huang_family",
    "huang_adjoint_family",
    "gabidulin_at_all",
    "h_code_mrd_distance",
    "h_code_reduced_distance",
    "cj_code",
    "cj_code_k_minus_2",
];

/// One claim per known result, in the order of [`THEOREMS`].
pub fn analyze_decodability(code: &EvalCode, d: u32) -> Vec<Claim> {
    let f = code.field();
    let ctx = Ctx {
        code,
        n: code.n() as u32,
        m: f.m(),
        q: f.q(),
        p: f.p(),
        d,
        ur: unique_radius(d),
        subfield: subfield_beta(code).map(|_| ()).map_err(|e| e.to_string()),
    };
    vec![
        pigeonhole_claim(&ctx),
        binomial_claim(&ctx),
        trace_claim(&ctx),
        tri_claim(&ctx, false),
        tri_claim(&ctx, true),
        huang_claim(&ctx, false),
        huang_claim(&ctx, true),
        gabidulin_claim(&ctx),
        h_code_claim(&ctx, true),
        h_code_claim(&ctx, false),
        cj_claim(&ctx),
        cj_k2_claim(&ctx),
    ]
}

fn pigeonhole_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[0];
    let lo = c.ur + 1;
    if d_too_small(c) {
        return Claim::fail(id, format!("no τ with {lo} ≤ τ ≤ d−1 = {}", c.d as i64 - 1));
    }
    for tau in lo..c.d {
        // the widest window for any admissible shift
        let best = (0..tau)
            .filter_map(|j| {
                (1..=c.n.saturating_sub(tau))
                    .rev()
                    .find(|&h| {
                        c.code
                            .contains_power_gabidulin(h as usize, j as usize)
                            .holds
                    })
                    .map(|h| (h, j))
            })
            .max_by_key(|&(h, j)| (h, std::cmp::Reverse(j)));
        let Some((h, j)) = best else { continue };
        let subspaces = gaussian_binomial(c.n, c.n - tau, c.q);
        let bound = ceil_div(&subspaces, &BigUint::from(c.q).pow(c.m * (c.n - tau - h)));
        let mut claim = Claim::hit(id, tau, tau, bound, None);
        if subspaces <= BigUint::from(RECIPE_SUBSPACE_BUDGET) {
            claim.witness_recipe = Some(WitnessMode::GeneralBasis { h, j, tau });
        } else {
            claim.note = Some(format!("{subspaces} subspaces exceed the recipe budget"));
        }
        return claim;
    }
    Claim::fail(
        id,
        format!(
            "no τ in [{lo}, {}] with a Gabidulin subcode (G_h)^{{σ^j}}, j < τ, h ≤ n−τ",
            c.d - 1
        ),
    )
}

fn d_too_small(c: &Ctx) -> bool {
    c.ur + 1 > c.d.saturating_sub(1)
}

fn binomial_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[1];
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    let lo = (c.n as i64 - c.d as i64 + 1).max(1) as u32;
    let hi = c.n as i64 - c.ur as i64 - 1;
    if (lo as i64) > hi {
        return Claim::fail(id, format!("no t with n−d+1 ≤ t ≤ n−⌊(d−1)/2⌋−1 = {hi}"));
    }
    let mut last = String::from("no divisor t of n in range");
    for t in (lo..=hi as u32)
        .rev()
        .filter(|&t| c.n.is_multiple_of(t) && t < c.n)
    {
        match c.shift(1, c.n - t) {
            Some(j) => {
                let mut claim = Claim::hit(
                    id,
                    t,
                    c.n - t,
                    c.ratio(t),
                    Some(WitnessMode::SubfieldBasis {
                        l: t,
                        h: 1,
                        j,
                        family: FamilySpec::Binomial { n: c.n, t },
                    }),
                );
                claim.at_all = c.n.is_multiple_of(2) && c.d + 1 == c.n;
                return claim;
            }
            None => {
                last = format!(
                    "no shift j < n−t = {} with (G_{{n,1}})^{{σ^j}} inside the code",
                    c.n - t
                )
            }
        }
    }
    Claim::fail(id, last)
}

fn trace_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[2];
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if d_too_small(c) {
        return Claim::fail(id, "no t with ⌊(d−1)/2⌋+1 ≤ t ≤ d−1");
    }
    let lo = c.ur + 1;
    let mut last = format!("no divisor t of n in [{lo}, {}]", c.d - 1);
    for t in c.divisors().filter(|&t| lo <= t && t < c.d) {
        match c.trace_route(t) {
            Ok(recipe) => {
                let mut claim = Claim::hit(id, t, t, c.ratio(t), Some(recipe));
                claim.at_all = t == lo;
                return claim;
            }
            Err(e) => last = e,
        }
    }
    Claim::fail(id, last)
}

fn tri_claim(c: &Ctx, second: bool) -> Claim {
    let id = THEOREMS[if second { 4 } else { 3 }];
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    let t = if second {
        if c.p != 2 {
            return Claim::fail(id, "q is not a power of 2");
        }
        match (2..=c.n + 1).find(|&t| t * t == c.n + 1) {
            Some(t) if t.is_power_of_two() => t,
            _ => return Claim::fail(id, "n = t²−1 with t a power of 2 has no solution"),
        }
    } else {
        match (2..=c.n).find(|&t| t * (t - 1) + 1 == c.n) {
            Some(t) if is_power_of((t - 1) as u64, c.p as u64) => t,
            Some(t) => return Claim::fail(id, format!("t−1 = {} is not a power of p", t - 1)),
            None => return Claim::fail(id, "n = t(t−1)+1 has no solution"),
        }
    };
    if !(c.n as i64 - c.d as i64 + 1 <= t as i64 && t + c.ur + 1 <= c.n) {
        return Claim::fail(id, format!("n−d+1 ≤ t ≤ n−⌊(d−1)/2⌋−1 fails for t = {t}"));
    }
    let Some(j) = c.shift(2, c.n - t) else {
        return Claim::fail(
            id,
            "no shift j < n−t with (G_{n,2})^{σ^j} inside the code".to_string(),
        );
    };
    let family = if second {
        FamilySpec::Tri2 { n: c.n, t }
    } else {
        FamilySpec::Tri1 { n: c.n, t }
    };
    Claim::hit(
        id,
        t,
        c.n - t,
        c.ratio(1),
        Some(WitnessMode::SubfieldBasis {
            l: t,
            h: 2,
            j,
            family,
        }),
    )
}

fn huang_claim(c: &Ctx, adjoint: bool) -> Claim {
    let id = THEOREMS[if adjoint { 6 } else { 5 }];
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if d_too_small(c) {
        return Claim::fail(id, "no radius with ⌊(d−1)/2⌋+1 ≤ tq'^k ≤ d−1");
    }
    let lo = c.ur + 1;
    let p = c.p as u64;
    let mut best: Option<(u32, Claim)> = None;
    let mut last = String::from("no (t, k, r) with n = t·p_k and ⌊(d−1)/2⌋+1 ≤ tq'^k ≤ d−1");
    let mut r = 0u32;
    while p.pow(r) <= c.n as u64 {
        let qp = p.pow(r);
        let pk = |i: i64| -> u64 {
            if i < 0 {
                0
            } else {
                (0..=i as u32).map(|e| qp.pow(e)).sum()
            }
        };
        let mut k = 1i64;
        while pk(k) <= c.n as u64 {
            if (c.n as u64).is_multiple_of(pk(k)) {
                let t = (c.n as u64 / pk(k)) as u32;
                let radius = t as u64 * qp.pow(k as u32);
                let h = if adjoint {
                    t as u64 * (pk(k - 1) - 1) + 1
                } else {
                    t as u64 * pk(k - 2) + 1
                };
                if (lo as u64) <= radius && radius < c.d as u64 {
                    let radius = radius as u32;
                    match c.shift(h as u32, radius) {
                        Some(j) if best.as_ref().is_none_or(|b| radius < b.0) => {
                            let family = if adjoint {
                                FamilySpec::QPrime {
                                    t,
                                    k: k as u32,
                                    r,
                                    n: Some(c.n),
                                }
                            } else {
                                FamilySpec::Q {
                                    t,
                                    k: k as u32,
                                    r,
                                    n: Some(c.n),
                                }
                            };
                            let recipe = WitnessMode::SubfieldBasis {
                                l: t * pk(k - 1) as u32,
                                h: h as u32,
                                j,
                                family,
                            };
                            let claim = Claim::hit(id, t, radius, c.ratio(t), Some(recipe));
                            best = Some((radius, claim));
                        }
                        Some(_) => {}
                        None => {
                            last = format!(
                                "no shift j < {radius} with (G_{{n,{h}}})^{{σ^j}} inside the code"
                            )
                        }
                    }
                }
            }
            k += 1;
        }
        r += 1;
    }
    match best {
        Some((_, mut claim)) => {
            claim.note = Some("family size is a lower bound; rescalings are deduplicated".into());
            claim
        }
        None => Claim::fail(id, last),
    }
}

fn gabidulin_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[7];
    let k = match c.code.spec() {
        CodeSpec::Gabidulin { k } => *k,
        CodeSpec::PowerGabidulin { h, j: 0 } => *h,
        _ => return Claim::fail(id, "the code is not a generalized Gabidulin code"),
    };
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if k > c.n {
        return Claim::fail(id, "k ≤ n fails");
    }
    trace_based(c, id, |t| c.ur + 1 <= t && t < c.d, |t| c.d == 2 * t)
}

/// Smallest admissible t with a trace-route recipe.
fn trace_based(
    c: &Ctx,
    id: &str,
    admissible: impl Fn(u32) -> bool,
    at_all: impl Fn(u32) -> bool,
) -> Claim {
    let mut last = String::from("no divisor t of n satisfies the radius conditions");
    for t in c.divisors().filter(|&t| admissible(t)) {
        match c.trace_route(t) {
            Ok(recipe) => {
                let mut claim = Claim::hit(id, t, t, c.ratio(t), Some(recipe));
                claim.at_all = at_all(t);
                return claim;
            }
            Err(e) => last = format!("t = {t}: {e}"),
        }
    }
    Claim::fail(id, last)
}

fn h_code_claim(c: &Ctx, mrd_distance: bool) -> Claim {
    let id = THEOREMS[if mrd_distance { 8 } else { 9 }];
    let k = match c.code.spec() {
        CodeSpec::H { k, f2, .. } if *f2 != MapSpec::Zero => *k,
        CodeSpec::TwistedSheekey { k, .. } => *k,
        _ => return Claim::fail(id, "the code is not H(f1, f2) with f2 ≠ 0"),
    };
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if k > c.n {
        return Claim::fail(id, "k ≤ n fails");
    }
    distance_split(c, id, k, mrd_distance)
}

/// Shared body of the results for d = n−k+1 and d = n−k.
fn distance_split(c: &Ctx, id: &str, k: u32, mrd_distance: bool) -> Claim {
    let lo = c.ur + 1;
    if mrd_distance {
        if c.d + k != c.n + 1 {
            return Claim::fail(id, format!("d = n−k+1 fails: d = {}", c.d));
        }
        let extra = (c.n - k) % 2;
        trace_based(c, id, |t| lo + extra <= t && t < c.d, |t| c.d + 1 == 2 * t)
    } else {
        if c.d + k != c.n {
            return Claim::fail(id, format!("d = n−k fails: d = {}", c.d));
        }
        trace_based(c, id, |t| lo < t && t < c.d, |_| false)
    }
}

fn cj_note(c: &Ctx, k: u32) -> Option<String> {
    cj_mbound(c.q, c.code.field().s(), k)
        .ok()
        .map(|mb| format!("m-threshold for d(C_j) = m−k is {mb}; m = {}", c.m))
}

fn cj_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[10];
    let CodeSpec::Cj { k, j } = c.code.spec().clone() else {
        return Claim::fail(id, "the code is not C_j");
    };
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if k > c.n {
        return Claim::fail(id, "k ≤ n fails");
    }
    let big_m = j.max(k - j - 1);
    // 2t ≥ n−j+1 when M = j, else 2t ≥ n−k+j+2
    let need = if big_m == j {
        c.n as i64 - j as i64 + 1
    } else {
        c.n as i64 - k as i64 + j as i64 + 2
    };
    let lo = c.ur + 1;
    let mut claim = trace_based(
        c,
        id,
        |t| 2 * t as i64 >= need && lo <= t && t < c.d,
        |_| false,
    );
    claim.note = cj_note(c, k);
    claim
}

fn cj_k2_claim(c: &Ctx) -> Claim {
    let id = THEOREMS[11];
    let CodeSpec::Cj { k, j } = c.code.spec().clone() else {
        return Claim::fail(id, "the code is not C_j");
    };
    if j + 2 != k {
        return Claim::fail(id, "j = k−2 fails");
    }
    if let Some(f) = c.require_subfield(id) {
        return f;
    }
    if k > c.n {
        return Claim::fail(id, "k ≤ n fails");
    }
    let mrd = c.d + k == c.n + 1;
    let mut claim = distance_split(c, id, k, mrd);
    claim.note = cj_note(c, k);
    claim
}
