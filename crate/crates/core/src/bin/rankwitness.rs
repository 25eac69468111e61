//! Command-line front end.
//!
//! Exit codes: 0 verified, 1 other error, 2 hypothesis violation,
//! 3 verification failure.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use rankwitness::analyze::{analyze_decodability, ClaimRow};
use rankwitness::bounds::{cj_mbound, gaussian_binomial, johnson_like_radius, singleton_exponent};
use rankwitness::codes::{CodeRequest, EvalCode};
use rankwitness::families::{self, FamilySpec};
use rankwitness::field::{ArithOp, ElementSpec, Field, FieldSpec};
use rankwitness::lift::{lift_code, verify_lift_ball};
use rankwitness::recipe::{self, Limits, BUNDLED};
use rankwitness::sigma_poly::SigmaPoly;
use rankwitness::witness::{self, resolve_distance, verify_report, WitnessReport, WitnessSpec};
use rankwitness::{Error, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "rankwitness",
    version,
    about = "Rank-metric codes and list-decoding witnesses"
)]
struct Cli {
    /// Lift the desk-scale guards (field order 2^20, scans of 2^24 words).
    #[arg(long, global = true)]
    force: bool,
    /// Write the report here (atomically) instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct FieldArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    ell: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
}

impl FieldArgs {
    fn spec(&self) -> FieldSpec {
        FieldSpec::new(self.p, self.ell, self.m, self.s)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Field parameters, or one arithmetic operation.
    Field {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum)]
        op: Option<OpArg>,
        /// Element as JSON: coordinates, {"power": k}, "primitive" or "one".
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Properties of a σ-polynomial given by its coefficient list.
    Poly {
        #[command(flatten)]
        field: FieldArgs,
        /// JSON list of coefficients, each an element spec.
        #[arg(long)]
        coeffs: String,
        /// Evaluate at this element.
        #[arg(long)]
        at: Option<String>,
    },
    /// Enumerate a family of σ-subspace polynomials.
    Family {
        #[command(flatten)]
        field: FieldArgs,
        /// Family spec JSON (or a path to it).
        #[arg(long)]
        spec: String,
        /// Include every member in the output.
        #[arg(long)]
        members: bool,
    },
    /// Code construction and distance checks.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Witness construction and verification.
    Witness {
        #[command(subcommand)]
        action: WitnessAction,
    },
    /// Closed-form bound calculators.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Lift a witness report to subspace codes and check the ball injection.
    Lift {
        report: PathBuf,
        /// Pair budget for lifting the whole code.
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
    /// Evaluate the list-decodability results for a code.
    Analyze {
        /// Code request JSON (or a path to it).
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a recipe (bundled name or JSON path).
    Run {
        recipe: Option<String>,
        /// List the bundled recipes.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum CodeAction {
    Build {
        #[arg(long)]
        spec: String,
    },
    Mindist {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    Singleton {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum WitnessAction {
    Build {
        #[arg(long)]
        spec: String,
    },
    Verify {
        report: PathBuf,
        /// Also scan the whole code for the ball around w.
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    Johnson {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
    },
    Gaussian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        q: u64,
    },
    Singleton {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    Cj {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Outcome {
    Verified,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_hypothesis() { 2 } else { 1 })
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    if cli.force {
        Limits::forced()
    } else {
        Limits::desk()
    }
}

/// Inline JSON, or the contents of a file when the argument names one.
fn json_arg<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T, Error> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg)?
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))
}

fn read_report(path: &Path) -> Result<WitnessReport, Error> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("report: {e}")))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.output {
        None => {
            let mut out = std::io::stdout().lock();
            match out
                .write_all(text.as_bytes())
                .and_then(|_| out.write_all(b"\n"))
            {
                // reader went away (e.g. `| head`)
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
        Some(path) => {
            let dir = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.write_all(b"\n")?;
            tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        }
    }
    Ok(())
}

fn emit_json(cli: &Cli, value: &impl Serialize) -> Result<(), Error> {
    emit(cli, &serde_json::to_string_pretty(value)?)
}

fn field_of(cli: &Cli, spec: &FieldSpec) -> Result<Field, Error> {
    Field::with_limit(spec, limits(cli).field_order)
}

fn build_code(cli: &Cli, req: &CodeRequest) -> Result<EvalCode, Error> {
    req.build(limits(cli).field_order)
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.cmd {
        Cmd::Field { field, op, a, b } => {
            let f = field_of(cli, &field.spec())?;
            let mut out = json!({
                "schema_version": SCHEMA_VERSION,
                "params": f.params(),
                "order": f.order(),
                "q": f.q(),
                "primitive": f.coords(f.primitive()),
            });
            if let Some(op) = op {
                let parse = |s: &Option<String>| -> Result<_, Error> {
                    let s = s.as_deref().ok_or_else(|| {
                        Error::Malformed("--a and --b are required with --op".into())
                    })?;
                    f.resolve(&json_arg::<ElementSpec>(s)?)
                };
                let (x, y) = (parse(a)?, parse(b)?);
                let op = match op {
                    OpArg::Add => ArithOp::Add,
                    OpArg::Sub => ArithOp::Sub,
                    OpArg::Mul => ArithOp::Mul,
                    OpArg::Div => ArithOp::Div,
                };
                let r = f.arith(x, y, op)?;
                out["result"] = json!({ "coords": f.coords(r), "pretty": f.pretty(r) });
            }
            emit_json(cli, &out)?;
        }
        Cmd::Poly { field, coeffs, at } => {
            let f = field_of(cli, &field.spec())?;
            let specs: Vec<ElementSpec> = json_arg(coeffs)?;
            let c = specs
                .iter()
                .map(|e| f.resolve(e))
                .collect::<Result<Vec<_>, _>>()?;
            let poly = SigmaPoly::new(&f, &c);
            let mut out = json!({
                "schema_version": SCHEMA_VERSION,
                "pretty": poly.pretty(),
                "sigma_degree": poly.sigma_degree(),
                "kernel_dim": poly.kernel_dim(),
                "is_subspace_poly": poly.is_subspace_poly(),
            });
            if let Ok(adj) = poly.adjoint() {
                out["adjoint"] = json!(adj.to_wire());
            }
            if let Some(x) = at {
                let x = f.resolve(&json_arg::<ElementSpec>(x)?)?;
                out["value"] = json!(f.coords(poly.evaluate(x)));
            }
            emit_json(cli, &out)?;
        }
        Cmd::Family {
            field,
            spec,
            members,
        } => {
            let f = field_of(cli, &field.spec())?;
            let spec: FamilySpec = json_arg(spec)?;
            let fam = families::generate(&f, &spec)?;
            let mut out = json!({
                "schema_version": SCHEMA_VERSION,
                "spec": spec,
                "level": fam.level,
                "sigma_degree": fam.sigma_degree,
                "expected_size": fam.expected_size.to_string(),
                "size_is_lower_bound": fam.size_is_lower_bound,
                "actual_size": fam.actual_size(),
                "all_max_kernel": fam.all_max_kernel(),
            });
            if let Some(ph) = &fam.pigeonhole {
                out["pigeonhole"] = json!(ph);
            }
            if *members {
                out["members"] = json!(fam
                    .members
                    .iter()
                    .map(SigmaPoly::to_wire)
                    .collect::<Vec<_>>());
            }
            emit_json(cli, &out)?;
        }
        Cmd::Code { action } => return code_cmd(cli, action),
        Cmd::Witness { action } => return witness_cmd(cli, action),
        Cmd::Bounds { which } => {
            let out = match which {
                BoundsCmd::Johnson { m, n, h, epsilon } => {
                    json!(johnson_like_radius(*m, *n, *h, *epsilon)?)
                }
                BoundsCmd::Gaussian { n, r, q } => {
                    json!({ "value": gaussian_binomial(*n, *r, *q).to_string() })
                }
                BoundsCmd::Singleton { m, n, d } => {
                    json!({ "log_q_bound": singleton_exponent(*m, *n, *d) })
                }
                BoundsCmd::Cj { q, s, k } => json!({ "m_min": cj_mbound(*q, *s, *k)? }),
            };
            emit_json(cli, &out)?;
        }
        Cmd::Lift { report, budget } => {
            let report = read_report(report)?;
            let ball = verify_lift_ball(&report)?;
            let code = witness::code_of_report(&report)?;
            let params = match lift_code(&code, *budget as u128) {
                Ok(p) => json!(p),
                Err(Error::BudgetExceeded { needed, .. }) => {
                    json!({ "skipped": format!("{needed} pairs exceed the budget") })
                }
                Err(e) => return Err(e),
            };
            let holds = ball.holds;
            emit_json(
                cli,
                &json!({ "schema_version": SCHEMA_VERSION, "ball_injection": ball, "lifted_code": params }),
            )?;
            return Ok(if holds {
                Outcome::Verified
            } else {
                Outcome::Failed
            });
        }
        Cmd::Analyze { spec, format } => {
            let req: CodeRequest = json_arg(spec)?;
            let code = build_code(cli, &req)?;
            let (d, _) = resolve_distance(&code, req.d, limits(cli).budget)?;
            let claims = analyze_decodability(&code, d);
            match format {
                Format::Json => emit_json(
                    cli,
                    &json!({ "schema_version": SCHEMA_VERSION, "d": d, "claims": claims }),
                )?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for c in &claims {
                        w.serialize(ClaimRow::from(c))
                            .map_err(|e| Error::Malformed(e.to_string()))?;
                    }
                    let bytes = w
                        .into_inner()
                        .map_err(|e| Error::Malformed(e.to_string()))?;
                    emit(cli, String::from_utf8_lossy(&bytes).trim_end())?;
                }
            }
        }
        Cmd::Run { recipe, list } => {
            if *list {
                let names: Vec<&str> = BUNDLED.iter().map(|(n, _)| *n).collect();
                emit_json(cli, &names)?;
                return Ok(Outcome::Verified);
            }
            let arg = recipe
                .as_deref()
                .ok_or_else(|| Error::Malformed("a recipe name or path is required".into()))?;
            let r = match recipe::bundled(arg) {
                Some(r) => r,
                None => json_arg(arg)?,
            };
            let report = recipe::run(&r, limits(cli))?;
            emit_json(cli, &report)?;
            return Ok(if report.verified {
                Outcome::Verified
            } else {
                Outcome::Failed
            });
        }
    }
    Ok(Outcome::Verified)
}

fn code_cmd(cli: &Cli, action: &CodeAction) -> Result<Outcome, Error> {
    let budget = |b: &Option<u64>| b.map(u128::from).unwrap_or(limits(cli).budget);
    match action {
        CodeAction::Build { spec } => {
            let req: CodeRequest = json_arg(spec)?;
            let code = build_code(cli, &req)?;
            let f = code.field();
            emit_json(
                cli,
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "code": req.code,
                    "points": code.points().iter().map(|&a| f.coords(a)).collect::<Vec<_>>(),
                    "n": code.n(),
                    "size_log_q": code.size_exponent(),
                    "fqm_linear": code.is_fqm_linear(),
                    "mrd_condition": code.mrd_condition(),
                }),
            )?;
        }
        CodeAction::Mindist { spec, budget: b } => {
            let req: CodeRequest = json_arg(spec)?;
            let code = build_code(cli, &req)?;
            let md = code.min_distance(budget(b))?;
            emit_json(
                cli,
                &json!({ "schema_version": SCHEMA_VERSION, "code": req.code, "min_distance": md }),
            )?;
        }
        CodeAction::Singleton { spec, budget: b } => {
            let req: CodeRequest = json_arg(spec)?;
            let code = build_code(cli, &req)?;
            let d = match code.min_distance(budget(b)) {
                Ok(md) => Some(md.d),
                Err(Error::DegenerateCode(_)) => None,
                Err(e) => return Err(e),
            };
            emit_json(
                cli,
                &json!({ "schema_version": SCHEMA_VERSION, "code": req.code, "d": d, "singleton": code.singleton_check(d) }),
            )?;
        }
    }
    Ok(Outcome::Verified)
}

fn witness_cmd(cli: &Cli, action: &WitnessAction) -> Result<Outcome, Error> {
    match action {
        WitnessAction::Build { spec } => {
            let spec: WitnessSpec = json_arg(spec)?;
            let lim = limits(cli);
            let report = witness::build_from_spec(&spec, lim.field_order, lim.budget)?;
            emit_json(cli, &report)?;
            Ok(if report.verified {
                Outcome::Verified
            } else {
                Outcome::Failed
            })
        }
        WitnessAction::Verify { report, exhaustive } => {
            let report = read_report(report)?;
            let budget = exhaustive.then_some(limits(cli).budget);
            let checks = verify_report(&report, budget)?;
            let ok = checks.passed(report.list.len(), report.bound);
            let out: Value = json!({
                "schema_version": SCHEMA_VERSION,
                "verified": ok,
                "checks": checks,
                "list_size": report.list.len(),
                "bound": report.bound,
            });
            emit_json(cli, &out)?;
            Ok(if ok {
                Outcome::Verified
            } else {
                Outcome::Failed
            })
        }
    }
}
