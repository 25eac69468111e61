//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Reference values are recomputed here by brute force.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankwitness::analyze::analyze_decodability;
use rankwitness::bounds::{gaussian_binomial, johnson_like_radius};
use rankwitness::codes::{rank_distance, rank_weight, CodeSpec, EvalCode, PointsSpec};
use rankwitness::families::{self, FamilySpec};
use rankwitness::field::ElementSpec;
use rankwitness::lift::{lift, lift_code, subspace_distance, verify_lift_ball};
use rankwitness::recipe::{self, Limits, RunReport};
use rankwitness::sigma_poly::SigmaPoly;
use rankwitness::witness::{build_for_code, verify_report, words_of_report, WitnessReport};
use rankwitness::{Error, Field, FieldElement, FieldSpec};

type Outcome = Result<String, String>;

/// (name, check, runtime limit in seconds)
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Σ a_i x^{q^{s i}} by repeated q^s-th powers.
fn eval_naive(f: &Field, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    let qs = f.q().pow(f.s());
    let mut xp = x;
    let mut acc = f.zero();
    for &a in coeffs {
        acc = f.add(acc, f.mul(a, xp));
        xp = f.pow(xp, qs);
    }
    acc
}

fn root_count(f: &Field, coeffs: &[FieldElement]) -> u64 {
    f.elements()
        .filter(|&x| eval_naive(f, coeffs, x).is_zero())
        .count() as u64
}

fn family_cases() -> Vec<(FieldSpec, FamilySpec, u64)> {
    vec![
        (
            FieldSpec::new(2, 1, 4, 1),
            FamilySpec::Binomial { n: 4, t: 2 },
            5,
        ),
        (
            FieldSpec::new(2, 1, 4, 1),
            FamilySpec::Trace { n: 4, t: 2 },
            5,
        ),
        (
            FieldSpec::new(2, 1, 7, 1),
            FamilySpec::Tri1 { n: 7, t: 3 },
            127,
        ),
        (
            FieldSpec::new(2, 1, 3, 1),
            FamilySpec::Tri2 { n: 3, t: 2 },
            7,
        ),
        (
            FieldSpec::new(2, 1, 7, 1),
            FamilySpec::Q {
                t: 1,
                k: 2,
                r: 1,
                n: Some(7),
            },
            127,
        ),
    ]
}

fn c1_family_sizes() -> Outcome {
    let mut sizes = Vec::new();
    for (fs, spec, want) in family_cases() {
        let f = Field::new(&fs).map_err(err)?;
        let fam = families::generate(&f, &spec).map_err(err)?;
        let got = fam.actual_size() as u64;
        ensure(got == want && fam.expected_size == want.into(), || {
            format!(
                "{spec:?}: {got} members, closed form {}, want {want}",
                fam.expected_size
            )
        })?;
        sizes.push(got.to_string());
    }
    Ok(format!("sizes {}", sizes.join(", ")))
}

fn c2_max_kernel() -> Outcome {
    let mut total = 0;
    for (fs, spec, _) in family_cases() {
        let f = Field::new(&fs).map_err(err)?;
        let fam = families::generate(&f, &spec).map_err(err)?;
        for p in &fam.members {
            let c = p.coeffs();
            let deg = c.iter().rposition(|a| !a.is_zero()).ok_or("zero member")?;
            ensure(c[deg] == f.one(), || {
                format!("{spec:?}: member {} not monic", p.pretty())
            })?;
            let roots = root_count(&f, c);
            ensure(roots == f.q().pow(deg as u32), || {
                format!("{spec:?}: {} has {roots} roots, σ-degree {deg}", p.pretty())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} members, all maximum kernel"))
}

/// Brute-force ball around w over the whole code: (count within radius, closest distance).
fn scan_ball(report: &WitnessReport, code: &EvalCode) -> Result<(u64, usize), String> {
    let f = code.field();
    let (w, _) = words_of_report(f, report).map_err(err)?;
    let mut count = 0;
    let mut closest = usize::MAX;
    for c in code.codewords() {
        let d = rank_weight(
            f,
            &c.iter()
                .zip(&w)
                .map(|(&a, &b)| f.sub(a, b))
                .collect::<Vec<_>>(),
        );
        closest = closest.min(d);
        if d <= report.radius as usize {
            count += 1;
        }
    }
    Ok((count, closest))
}

fn run_bundled(name: &str) -> Result<RunReport, String> {
    let r = recipe::bundled(name).ok_or_else(|| format!("no recipe {name}"))?;
    recipe::run(&r, Limits::desk()).map_err(err)
}

fn code_of(fs: &FieldSpec, spec: CodeSpec, points: PointsSpec) -> Result<EvalCode, String> {
    let f = Field::new(fs).map_err(err)?;
    let pts = points.resolve(&f).map_err(err)?;
    EvalCode::build(&f, &spec, &pts).map_err(err)
}

fn code3() -> Result<EvalCode, String> {
    code_of(
        &FieldSpec::new(2, 1, 4, 1),
        CodeSpec::Gabidulin { k: 2 },
        PointsSpec::Standard { n: 4 },
    )
}

fn code4a() -> Result<EvalCode, String> {
    code_of(
        &FieldSpec::new(2, 1, 4, 1),
        CodeSpec::Gabidulin { k: 1 },
        PointsSpec::Standard { n: 4 },
    )
}

fn code4b() -> Result<EvalCode, String> {
    code_of(
        &FieldSpec::new(2, 1, 8, 1),
        CodeSpec::Gabidulin { k: 1 },
        PointsSpec::SubfieldBasis {
            n: 4,
            beta: ElementSpec::Primitive,
        },
    )
}

fn c3_witness_gabidulin() -> Outcome {
    let run = run_bundled("gabidulin_n4_general")?;
    let rep = &run.witness;
    let code = code3()?;
    // [4 2]_2 / 2^{4(4-2-2)}, by the product formula
    let want = (15 * 7) / 3;
    ensure(
        gaussian_binomial(4, 2, 2) == 35u32.into() && want == 35,
        || "Gaussian binomial".into(),
    )?;
    ensure(rep.radius == 2 && rep.bound == want, || {
        format!("radius {}, bound {}", rep.radius, rep.bound)
    })?;
    ensure(code.total_words() == 256, || {
        format!("{} codewords", code.total_words())
    })?;
    let (count, closest) = scan_ball(rep, &code)?;
    ensure(closest > 0, || "w lies in the code".into())?;
    ensure(rep.list.len() as u64 >= want, || {
        format!("list {}", rep.list.len())
    })?;
    ensure(count >= want, || format!("exhaustive ball {count}"))?;
    let f = code.field();
    let (w, list) = words_of_report(f, rep).map_err(err)?;
    for c in &list {
        ensure(rank_distance(f, c, &w).map_err(err)? == 2, || {
            "listed word not at distance 2".into()
        })?;
    }
    let distinct: HashSet<_> = list.iter().collect();
    ensure(distinct.len() == list.len(), || {
        "duplicate listed words".into()
    })?;
    Ok(format!(
        "list {}, exhaustive ball {count} of 256, bound {want}",
        list.len()
    ))
}

fn c4_witness_binomial() -> Outcome {
    let mut out = Vec::new();
    for (name, code) in [
        ("gabidulin_n4_binomial", code4a()?),
        ("gabidulin_m8_n4_binomial_beta", code4b()?),
    ] {
        let run = run_bundled(name)?;
        let rep = &run.witness;
        let f = code.field();
        ensure(rep.d == 4 && rep.radius == 2, || {
            format!("{name}: d {}, radius {}", rep.d, rep.radius)
        })?;
        if f.m() == 8 {
            let beta = rep.trace.beta.as_ref().ok_or("no β in trace")?;
            ensure(f.from_coords(beta).map_err(err)? != f.one(), || {
                "β = 1".into()
            })?;
            // the points span β·GF(16) and not GF(16)
            let sub: HashSet<_> = f.subfield_elements(4).into_iter().collect();
            ensure(!code.points().iter().all(|a| sub.contains(a)), || {
                "points inside GF(16)".into()
            })?;
        }
        let (count, closest) = scan_ball(rep, &code)?;
        ensure(closest > 0, || format!("{name}: w in code"))?;
        ensure(count >= 5, || format!("{name}: exhaustive ball {count}"))?;
        out.push(format!("m={}: {count}", f.m()));
    }
    Ok(format!("exhaustive balls {}", out.join(", ")))
}

fn c5_unique_decoding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut summary = Vec::new();
    for (label, code, d) in [
        ("(3)", code3()?, 3u32),
        ("(4) m=4", code4a()?, 4),
        ("(4) m=8", code4b()?, 4),
    ] {
        let r = ((d - 1) / 2) as usize;
        for _ in 0..20 {
            let i = rng.gen_range(0..code.total_words());
            let c = code.codeword_at(i);
            let n = code.ball_count(&c, r, 1 << 20).map_err(err)?;
            ensure(n == 1, || {
                format!("{label}: ball of radius {r} holds {n} codewords")
            })?;
        }
        summary.push(format!("{label} r={r}"));
    }
    Ok(format!("20 balls each: {}", summary.join(", ")))
}

fn c6_mrd() -> Outcome {
    let mut out = Vec::new();
    for (p, n, m, k) in [(2u32, 3u32, 3u32, 1u32), (2, 4, 4, 2), (3, 3, 3, 2)] {
        let code = code_of(
            &FieldSpec::new(p, 1, m, 1),
            CodeSpec::Gabidulin { k },
            PointsSpec::Standard { n },
        )?;
        let f = code.field();
        let oracle = code
            .codewords()
            .filter(|c| c.iter().any(|a| !a.is_zero()))
            .map(|c| rank_weight(f, &c))
            .min()
            .ok_or("no nonzero codeword")?;
        let md = code.min_distance(1 << 20).map_err(err)?;
        let want = (n - k + 1) as usize;
        ensure(oracle == want && md.d as usize == want, || {
            format!(
                "({p},{n},{m},{k}): oracle {oracle}, library {}, want {want}",
                md.d
            )
        })?;
        let s = code.singleton_check(Some(md.d));
        // |C| = q^{mk} against q^{m(n-d+1)}
        ensure(
            s.is_mrd && s.defect == 0 && s.size_exponent as u32 == m * k,
            || format!("{s:?}"),
        )?;
        ensure(s.bound_exponent as u32 == m * (n - want as u32 + 1), || {
            format!("{s:?}")
        })?;
        out.push(format!("({p},{n},{m},{k}) d={want}"));
    }
    Ok(out.join(", "))
}

fn c7_adjoint() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0u64;
    for (p, m) in [(2u32, 4u32), (3, 3)] {
        let f = Field::from_params(p, 1, m, 1).map_err(err)?;
        let mut done = 0;
        while done < 50 {
            let len = rng.gen_range(1..=m as usize);
            let c: Vec<_> = (0..len)
                .map(|_| FieldElement::from_index(rng.gen_range(0..f.order())))
                .collect();
            let poly = SigmaPoly::new(&f, &c);
            if poly.is_zero() {
                continue;
            }
            let adj = poly.adjoint().map_err(err)?;
            let (ka, kb) = (root_count(&f, &c), root_count(&f, adj.coeffs()));
            ensure(ka == kb, || {
                format!("{}: kernel sizes {ka} vs {kb}", poly.pretty())
            })?;
            ensure(poly.kernel_dim() == adj.kernel_dim(), || {
                "library kernel dims differ".into()
            })?;
            for x in f.elements() {
                let fx = eval_naive(&f, &c, x);
                for y in f.elements() {
                    let lhs = f.trace(f.mul(fx, y));
                    let rhs = f.trace(f.mul(x, eval_naive(&f, adj.coeffs(), y)));
                    ensure(lhs == rhs, || {
                        format!("{}: trace form differs", poly.pretty())
                    })?;
                    pairs += 1;
                }
            }
            done += 1;
        }
    }
    Ok(format!("100 polynomials, {pairs} trace pairs"))
}

fn c8_johnson() -> Outcome {
    let j = johnson_like_radius(8, 8, 2, 0.0).map_err(err)?;
    let want = 8.0 - 8f64.sqrt();
    ensure((j.threshold - want).abs() < 1e-9, || {
        format!("threshold {}", j.threshold)
    })?;
    ensure(j.first_integer_radius == 6, || {
        format!("first radius {}", j.first_integer_radius)
    })?;
    let mut checked = 0;
    for m in 1..=12u32 {
        for n in 0..=m {
            for h in 0..=n {
                for eps in [0.0, 0.25, 0.5, 0.9] {
                    let (mf, nf, hf) = (m as f64, n as f64, h as f64);
                    let negative = (mf + nf).powi(2) / 4.0 < mf * (nf - hf + 1.0 - eps);
                    let raised = matches!(
                        johnson_like_radius(m, n, h, eps),
                        Err(Error::NegativeRadicand(_))
                    );
                    ensure(negative == raised, || {
                        format!("m={m} n={n} h={h} ε={eps}: predicate {negative}, raised {raised}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "threshold {:.12}, predicate matched on {checked} inputs",
        j.threshold
    ))
}

fn c9_lift() -> Outcome {
    let f = Field::from_params(2, 1, 2, 1).map_err(err)?;
    let code = EvalCode::build(&f, &CodeSpec::Gabidulin { k: 1 }, &f.q_basis()).map_err(err)?;
    let params = lift_code(&code, 1 << 20).map_err(err)?;
    ensure(params.distance_law_holds && params.all_distinct, || {
        format!("{params:?}")
    })?;
    // independent pass over the same pairs
    let words: Vec<_> = code.codewords().collect();
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let ds = subspace_distance(&f, &lift(&f, a).map_err(err)?, &lift(&f, b).map_err(err)?)
                .map_err(err)?;
            ensure(ds == 2 * rank_distance(&f, a, b).map_err(err)?, || {
                "d_s ≠ 2 d_R".into()
            })?;
        }
    }
    let mut held = 0;
    for name in [
        "gabidulin_n4_general",
        "gabidulin_n4_binomial",
        "gabidulin_m8_n4_binomial_beta",
    ] {
        let run = run_bundled(name)?;
        let ball = verify_lift_ball(&run.witness).map_err(err)?;
        ensure(
            ball.holds && ball.lifted_list_lower_bound == run.witness.list.len() as u64,
            || format!("{name}: {ball:?}"),
        )?;
        held += 1;
    }
    Ok(format!(
        "{} pairs obey d_s = 2 d_R, ball injection holds on {held} reports",
        params.pairs_checked
    ))
}

fn c10_analyzer() -> Outcome {
    let codes: Vec<(FieldSpec, EvalCode)> = vec![
        (FieldSpec::new(2, 1, 4, 1), code3()?),
        (FieldSpec::new(2, 1, 4, 1), code4a()?),
        (FieldSpec::new(2, 1, 8, 1), code4b()?),
        (
            FieldSpec::new(2, 1, 3, 1),
            code_of(
                &FieldSpec::new(2, 1, 3, 1),
                CodeSpec::Gabidulin { k: 1 },
                PointsSpec::Standard { n: 3 },
            )?,
        ),
        (
            FieldSpec::new(3, 1, 3, 1),
            code_of(
                &FieldSpec::new(3, 1, 3, 1),
                CodeSpec::Gabidulin { k: 2 },
                PointsSpec::Standard { n: 3 },
            )?,
        ),
    ];
    let (mut recipes, mut codes_with) = (0, 0);
    for (fs, code) in &codes {
        let d = code.min_distance(1 << 20).map_err(err)?.d;
        let mut any = false;
        for claim in analyze_decodability(code, d) {
            let Some(mode) = claim.witness_recipe.as_ref() else {
                continue;
            };
            let rep = build_for_code(code, fs, None, mode, 1 << 24).map_err(|e| {
                format!(
                    "{} on m={} n={}: {e}",
                    claim.theorem,
                    code.field().m(),
                    code.n()
                )
            })?;
            let checks = verify_report(&rep, Some(1 << 24)).map_err(err)?;
            ensure(
                rep.verified && checks.passed(rep.list.len(), rep.bound),
                || format!("{}: report does not verify", claim.theorem),
            )?;
            recipes += 1;
            any = true;
        }
        codes_with += any as u32;
    }
    Ok(format!(
        "{recipes} recipes verified across {codes_with} of {} codes",
        codes.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("family sizes", c1_family_sizes, 10),
        ("maximum kernel by brute force", c2_max_kernel, 60),
        ("Gabidulin witness bound 35", c3_witness_gabidulin, 5),
        (
            "binomial witness bound 5 (β = 1 and β ≠ 1)",
            c4_witness_binomial,
            10,
        ),
        ("unique-decoding balls", c5_unique_decoding, 60),
        ("Gabidulin MRD", c6_mrd, 60),
        ("adjoint duality", c7_adjoint, 60),
        ("Johnson-like radius", c8_johnson, 5),
        ("lifting", c9_lift, 10),
        ("analyzer recipes verify", c10_analyzer, 120),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > Duration::from_secs(*limit) => {
                Err(format!("{msg}; took {took:.2?}, limit {limit} s"))
            }
            r => r,
        };
        match res {
            Ok(msg) => println!("PASS {:>2} {name} [{took:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{took:.2?}]: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
