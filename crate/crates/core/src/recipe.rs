//! Reproducible experiment recipes and the run report they produce.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{gaussian_binomial, johnson_like_radius, JohnsonRadius};
use crate::codes::{CodeSpec, EvalCode, PointsSpec, SingletonReport};
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::field::{Field, FieldSpec, DESK_SCALE_ORDER, HARD_ORDER_LIMIT};
use crate::lift::{verify_lift_ball, LiftBallCheck};
use crate::witness::{build_for_code, verify_report, WitnessMode, WitnessReport, DEFAULT_BUDGET};
use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    /// Recheck the constructed list only.
    Constructive,
    /// Additionally scan the whole code for the ball around w.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRecipe {
    pub name: String,
    pub field: FieldSpec,
    pub code: CodeSpec,
    pub points: PointsSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub witness: WitnessMode,
    pub verification: Verification,
}

/// Bundled recipes as (name, JSON source).
pub const BUNDLED: [(&str, &str); 5] = [
    (
        "gabidulin_n4_binomial",
        include_str!("../recipes/gabidulin_n4_binomial.json"),
    ),
    (
        "gabidulin_n4_general",
        include_str!("../recipes/gabidulin_n4_general.json"),
    ),
    (
        "gabidulin_m8_n4_binomial_beta",
        include_str!("../recipes/gabidulin_m8_n4_binomial_beta.json"),
    ),
    (
        "power_gabidulin_n4_trace_hat",
        include_str!("../recipes/power_gabidulin_n4_trace_hat.json"),
    ),
    (
        "gabidulin_q3_n3_general",
        include_str!("../recipes/gabidulin_q3_n3_general.json"),
    ),
];

pub fn bundled(name: &str) -> Option<ExperimentRecipe> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| serde_json::from_str(src).expect("bundled recipes parse"))
}

/// Guards applied to a run.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub field_order: u64,
    pub budget: u128,
}

impl Limits {
    pub fn desk() -> Self {
        Limits {
            field_order: DESK_SCALE_ORDER,
            budget: DEFAULT_BUDGET,
        }
    }

    /// Lifted guards for `--force`.
    pub fn forced() -> Self {
        Limits {
            field_order: HARD_ORDER_LIMIT,
            budget: u128::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub spec: FamilySpec,
    pub expected_size: String,
    pub actual_size: u64,
    pub all_max_kernel: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub singleton: SingletonReport,
    /// Radius threshold for codes with a Gabidulin subcode of dimension h.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub johnson: Option<JohnsonRadius>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub johnson_note: Option<String>,
    /// [n, n−radius]_q in decimal.
    pub gaussian_binomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub codewords: String,
    pub list_size: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball_scan: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_clock_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub recipe: ExperimentRecipe,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySummary>,
    pub bounds: BoundsSummary,
    pub witness: WitnessReport,
    pub lift: LiftBallCheck,
    pub counters: Counters,
    /// Witness and lift checks all passed.
    pub verified: bool,
    /// Wall-clock data, kept apart so the rest replays byte-for-byte.
    pub timing: Timing,
}

pub fn run(recipe: &ExperimentRecipe, limits: Limits) -> Result<RunReport> {
    let start = Instant::now();
    let field = Field::with_limit(&recipe.field, limits.field_order)?;
    let points = recipe.points.resolve(&field)?;
    let code = EvalCode::build(&field, &recipe.code, &points)?;
    let mut witness = build_for_code(
        &code,
        &recipe.field,
        recipe.d,
        &recipe.witness,
        limits.budget,
    )?;
    if recipe.verification == Verification::Exhaustive {
        let checks = verify_report(&witness, Some(limits.budget))?;
        witness.verified = checks.passed(witness.list.len(), witness.bound);
        witness.checks = checks;
    }
    let family = match &recipe.witness {
        WitnessMode::SubfieldBasis { family, .. }
        | WitnessMode::SubfieldBasisHat { family, .. } => {
            let fam = families::generate(&field, family)?;
            Some(FamilySummary {
                spec: family.clone(),
                expected_size: fam.expected_size.to_string(),
                actual_size: fam.actual_size() as u64,
                all_max_kernel: fam.all_max_kernel(),
            })
        }
        WitnessMode::GeneralBasis { .. } => None,
    };
    let n = code.n() as u32;
    let (johnson, johnson_note) =
        match johnson_like_radius(field.m(), n, witness.trace.window_len, 0.0) {
            Ok(j) => (Some(j), None),
            Err(e) => (None, Some(e.to_string())),
        };
    let bounds = BoundsSummary {
        singleton: code.singleton_check(Some(witness.d)),
        johnson,
        johnson_note,
        gaussian_binomial: gaussian_binomial(n, n - witness.radius, field.q()).to_string(),
    };
    let lift = verify_lift_ball(&witness)?;
    let verified = witness.verified && lift.holds;
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        recipe: recipe.clone(),
        family,
        bounds,
        counters: Counters {
            codewords: code.size().to_string(),
            list_size: witness.list.len() as u64,
            ball_scan: witness.checks.exhaustive_ball,
        },
        witness,
        lift,
        verified,
        timing: Timing {
            wall_clock_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    })
}

/// Parses a recipe given as a bundled name or JSON text.
pub fn parse_recipe(text_or_name: &str) -> Result<ExperimentRecipe> {
    if let Some(r) = bundled(text_or_name.trim()) {
        return Ok(r);
    }
    serde_json::from_str(text_or_name).map_err(|e| Error::Malformed(format!("recipe: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_recipes_parse_and_verify() {
        for (name, _) in BUNDLED {
            let r = bundled(name).unwrap();
            assert_eq!(r.name, name);
            let report = run(&r, Limits::desk()).unwrap();
            assert!(report.verified, "{name}");
            assert!(report.witness.list.len() as u64 >= report.witness.bound);
        }
    }

    #[test]
    fn replay_is_identical_apart_from_timing() {
        let r = bundled("gabidulin_n4_general").unwrap();
        let mut a = run(&r, Limits::desk()).unwrap();
        let mut b = run(&r, Limits::desk()).unwrap();
        a.timing.wall_clock_ms = 0.0;
        b.timing.wall_clock_ms = 0.0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
