//! C ABI over `rankwitness`.
//!
//! Field elements cross the boundary as their packed `u32` index (base-p
//! digits of the coordinate vector, low digit first). Handles are opaque and
//! must be released with the matching `_free`. Strings returned through
//! `char **` outputs are owned by the caller and released with
//! [`rw_string_free`]. Every call returns an [`RwStatus`]; on failure
//! [`rw_last_error_message`] describes the error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rankwitness::analyze::analyze_decodability;
use rankwitness::bounds::{gaussian_binomial, johnson_like_radius};
use rankwitness::codes::{CodeRequest, EvalCode};
use rankwitness::field::{DESK_SCALE_ORDER, HARD_ORDER_LIMIT};
use rankwitness::recipe::{self, Limits};
use rankwitness::sigma_poly::SigmaPoly;
use rankwitness::witness::{resolve_distance, verify_report, WitnessReport};
use rankwitness::{Error, Field, FieldElement, FieldSpec, SCHEMA_VERSION};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Unparseable JSON or a structurally invalid request.
    Malformed = 3,
    /// Unsupported or oversized field parameters.
    InvalidField = 4,
    /// Division by zero, foreign elements and similar.
    Arithmetic = 5,
    /// A parameter range or theorem hypothesis does not hold.
    Hypothesis = 6,
    BudgetExceeded = 7,
    /// The call completed but the result did not verify.
    VerificationFailed = 8,
    Panic = 9,
    Other = 10,
}

impl From<&Error> for RwStatus {
    fn from(e: &Error) -> Self {
        if e.is_hypothesis() {
            return RwStatus::Hypothesis;
        }
        match e {
            Error::Malformed(_) | Error::Json(_) => RwStatus::Malformed,
            Error::InvalidField(_)
            | Error::FieldTooLarge { .. }
            | Error::NonDivisorDegree { .. } => RwStatus::InvalidField,
            Error::DivisionByZero
            | Error::FieldMismatch(_)
            | Error::NotInSubfield(_)
            | Error::NonIntegerExponent(_)
            | Error::ZeroPolynomial
            | Error::ZeroScalar => RwStatus::Arithmetic,
            Error::BudgetExceeded { .. } => RwStatus::BudgetExceeded,
            _ => RwStatus::Other,
        }
    }
}

/// A finite field GF(p^{ell·m}) with σ = x^{q^s}.
pub struct RwField(Field);

/// A σ-polynomial over an [`RwField`].
pub struct RwPoly(SigmaPoly);

/// An evaluation code.
pub struct RwCode(EvalCode);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Fail {
    Status(RwStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> RwStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error(String::new());
            RwStatus::Ok
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            RwStatus::from(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            RwStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(RwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(RwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

fn element(f: &Field, v: u32) -> Result<FieldElement, Fail> {
    let a = FieldElement::from_index(v);
    if f.contains(a) {
        Ok(a)
    } else {
        Err(Error::FieldMismatch(format!(
            "element index {v} outside a field of order {}",
            f.order()
        ))
        .into())
    }
}

fn limits(force: bool) -> Limits {
    if force {
        Limits::forced()
    } else {
        Limits::desk()
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Version of the JSON reports produced by this library.
#[no_mangle]
pub extern "C" fn rw_schema_version() -> u32 {
    SCHEMA_VERSION
}

// ---- fields ----

/// Builds GF(p^{ell·m}) with σ = x^{q^s}, q = p^ell. Orders above 2^20
/// need `force`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_new(
    p: u32,
    ell: u32,
    m: u32,
    s: u32,
    force: bool,
    out_field: *mut *mut RwField,
) -> RwStatus {
    guard(|| {
        let slot = out(out_field, "out_field")?;
        let limit = if force {
            HARD_ORDER_LIMIT
        } else {
            DESK_SCALE_ORDER
        };
        let f = Field::with_limit(&FieldSpec::new(p, ell, m, s), limit)?;
        *slot = Box::into_raw(Box::new(RwField(f)));
        Ok(())
    })
}

/// # Safety
/// `f` must come from [`rw_field_new`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rw_field_free(f: *mut RwField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rw_field_order(f: *const RwField) -> u32 {
    f.as_ref().map_or(0, |f| f.0.order())
}

/// Size of the base field GF(q), or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rw_field_q(f: *const RwField) -> u64 {
    f.as_ref().map_or(0, |f| f.0.q())
}

/// The fixed primitive element.
///
/// # Safety
/// `f` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rw_field_primitive(f: *const RwField) -> u32 {
    f.as_ref().map_or(0, |f| f.0.primitive().index())
}

unsafe fn binary(
    f: *const RwField,
    a: u32,
    b: u32,
    res: *mut u32,
    op: impl FnOnce(&Field, FieldElement, FieldElement) -> Result<FieldElement, Error>,
) -> RwStatus {
    guard(|| {
        let f = &deref(f, "field")?.0;
        let slot = out(res, "out")?;
        *slot = op(f, element(f, a)?, element(f, b)?)?.index();
        Ok(())
    })
}

/// # Safety
/// `f` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_add(
    f: *const RwField,
    a: u32,
    b: u32,
    res: *mut u32,
) -> RwStatus {
    binary(f, a, b, res, |f, x, y| Ok(f.add(x, y)))
}

/// # Safety
/// `f` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_sub(
    f: *const RwField,
    a: u32,
    b: u32,
    res: *mut u32,
) -> RwStatus {
    binary(f, a, b, res, |f, x, y| Ok(f.sub(x, y)))
}

/// # Safety
/// `f` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_mul(
    f: *const RwField,
    a: u32,
    b: u32,
    res: *mut u32,
) -> RwStatus {
    binary(f, a, b, res, |f, x, y| Ok(f.mul(x, y)))
}

/// Fails with `RW_STATUS_ARITHMETIC` when `b` is zero.
///
/// # Safety
/// `f` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_div(
    f: *const RwField,
    a: u32,
    b: u32,
    res: *mut u32,
) -> RwStatus {
    binary(f, a, b, res, |f, x, y| f.div(x, y))
}

/// Absolute trace to GF(q).
///
/// # Safety
/// `f` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_field_trace(f: *const RwField, a: u32, res: *mut u32) -> RwStatus {
    binary(f, a, 0, res, |f, x, _| Ok(f.trace(x)))
}

// ---- σ-polynomials ----

/// Σ coeffs[i] x^{σ^i}, reduced mod x^{σ^m} − x.
///
/// # Safety
/// `coeffs` must point to `len` elements (or be null with `len` 0);
/// `out_poly` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_new(
    f: *const RwField,
    coeffs: *const u32,
    len: usize,
    out_poly: *mut *mut RwPoly,
) -> RwStatus {
    guard(|| {
        let f = &deref(f, "field")?.0;
        let slot = out(out_poly, "out_poly")?;
        let raw: &[u32] = if len == 0 {
            &[]
        } else if coeffs.is_null() {
            return Err(null("coeffs"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        let c = raw
            .iter()
            .map(|&v| element(f, v))
            .collect::<Result<Vec<_>, _>>()?;
        *slot = Box::into_raw(Box::new(RwPoly(SigmaPoly::new(f, &c))));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_free(p: *mut RwPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_eval(p: *const RwPoly, x: u32, res: *mut u32) -> RwStatus {
    guard(|| {
        let p = &deref(p, "poly")?.0;
        let slot = out(res, "out")?;
        *slot = p.evaluate(element(p.field(), x)?).index();
        Ok(())
    })
}

/// Dimension of the kernel over GF(q).
///
/// # Safety
/// `p` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_kernel_dim(p: *const RwPoly, res: *mut u32) -> RwStatus {
    guard(|| {
        let p = &deref(p, "poly")?.0;
        *out(res, "out")? = p.kernel_dim() as u32;
        Ok(())
    })
}

/// Monic with kernel dimension equal to its σ-degree.
///
/// # Safety
/// `p` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_is_subspace(p: *const RwPoly, res: *mut bool) -> RwStatus {
    guard(|| {
        let p = &deref(p, "poly")?.0;
        *out(res, "out")? = p.is_subspace_poly();
        Ok(())
    })
}

/// Adjoint under the trace form. Fails on the zero polynomial.
///
/// # Safety
/// `p` must be a live handle and `out_poly` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_poly_adjoint(p: *const RwPoly, out_poly: *mut *mut RwPoly) -> RwStatus {
    guard(|| {
        let p = &deref(p, "poly")?.0;
        let slot = out(out_poly, "out_poly")?;
        *slot = Box::into_raw(Box::new(RwPoly(p.adjoint()?)));
        Ok(())
    })
}

// ---- codes ----

/// Builds a code from a JSON object with `field`, `code` and `points`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out_code` valid.
#[no_mangle]
pub unsafe extern "C" fn rw_code_from_json(
    json: *const c_char,
    force: bool,
    out_code: *mut *mut RwCode,
) -> RwStatus {
    guard(|| {
        let req: CodeRequest = serde_json::from_str(text(json, "json")?)
            .map_err(|e| Error::Malformed(e.to_string()))?;
        let slot = out(out_code, "out_code")?;
        *slot = Box::into_raw(Box::new(RwCode(req.build(limits(force).field_order)?)));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rw_code_free(c: *mut RwCode) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Code length n, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rw_code_length(c: *const RwCode) -> u32 {
    c.as_ref().map_or(0, |c| c.0.n() as u32)
}

/// log_q of the number of codewords.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rw_code_size_log_q(c: *const RwCode) -> u64 {
    c.as_ref().map_or(0, |c| c.0.size_exponent())
}

/// Brute-force minimum rank distance, enumerating at most `budget` words.
///
/// # Safety
/// `c` must be a live handle and `res` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_code_min_distance(
    c: *const RwCode,
    budget: u64,
    res: *mut u32,
) -> RwStatus {
    guard(|| {
        let c = &deref(c, "code")?.0;
        let slot = out(res, "out")?;
        *slot = c.min_distance(budget as u128)?.d;
        Ok(())
    })
}

/// Decodability claims for the code, as the JSON object `analyze` prints.
///
/// # Safety
/// `c` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_code_analyze(
    c: *const RwCode,
    budget: u64,
    out_json: *mut *mut c_char,
) -> RwStatus {
    guard(|| {
        let c = &deref(c, "code")?.0;
        let slot = out(out_json, "out_json")?;
        let (d, _) = resolve_distance(c, None, budget as u128)?;
        let claims = analyze_decodability(c, d);
        let v = serde_json::json!({ "schema_version": SCHEMA_VERSION, "d": d, "claims": claims });
        *slot = to_c(v.to_string());
        Ok(())
    })
}

// ---- bounds ----

/// (m+n)/2 − sqrt((m+n)²/4 − m(n−h+1−ε)) and the first integer radius at
/// or above it. Fails with `RW_STATUS_HYPOTHESIS` on a negative radicand.
///
/// # Safety
/// `threshold` and `first_radius` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn rw_johnson_radius(
    m: u32,
    n: u32,
    h: u32,
    epsilon: f64,
    threshold: *mut f64,
    first_radius: *mut u32,
) -> RwStatus {
    guard(|| {
        let (t, r) = (
            out(threshold, "threshold")?,
            out(first_radius, "first_radius")?,
        );
        let j = johnson_like_radius(m, n, h, epsilon)?;
        *t = j.threshold;
        *r = j.first_integer_radius;
        Ok(())
    })
}

/// [n r]_q in decimal.
///
/// # Safety
/// `out_dec` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_gaussian_binomial(
    n: u32,
    r: u32,
    q: u64,
    out_dec: *mut *mut c_char,
) -> RwStatus {
    guard(|| {
        let slot = out(out_dec, "out")?;
        if q < 2 {
            return Err(Error::ParamViolation(format!("q = {q} must be at least 2")).into());
        }
        *slot = to_c(gaussian_binomial(n, r, q).to_string());
        Ok(())
    })
}

// ---- recipes and reports ----

unsafe fn run_recipe(
    r: &recipe::ExperimentRecipe,
    force: bool,
    out_json: *mut *mut c_char,
) -> Result<(), Fail> {
    let slot = out(out_json, "out_json")?;
    let report = recipe::run(r, limits(force))?;
    *slot = to_c(serde_json::to_string(&report).map_err(Error::from)?);
    if report.verified {
        Ok(())
    } else {
        Err(Fail::Status(
            RwStatus::VerificationFailed,
            "report did not verify".into(),
        ))
    }
}

/// Runs a bundled recipe and returns its JSON run report. The report is
/// returned even when the status is `RW_STATUS_VERIFICATION_FAILED`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn rw_run_bundled(
    name: *const c_char,
    force: bool,
    out_json: *mut *mut c_char,
) -> RwStatus {
    guard(|| {
        let name = text(name, "name")?;
        let r = recipe::bundled(name)
            .ok_or_else(|| Error::Malformed(format!("no bundled recipe named {name}")))?;
        run_recipe(&r, force, out_json)
    })
}

/// Runs a recipe given as JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn rw_run_recipe_json(
    json: *const c_char,
    force: bool,
    out_json: *mut *mut c_char,
) -> RwStatus {
    guard(|| {
        let r = recipe::parse_recipe(text(json, "json")?)?;
        run_recipe(&r, force, out_json)
    })
}

/// Rechecks a witness report; with `exhaustive` also scans the whole ball.
/// Writes the checks as JSON.
///
/// # Safety
/// `report_json` must be a NUL-terminated string and `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn rw_witness_verify_json(
    report_json: *const c_char,
    exhaustive: bool,
    out_json: *mut *mut c_char,
) -> RwStatus {
    guard(|| {
        let report: WitnessReport = serde_json::from_str(text(report_json, "report_json")?)
            .map_err(|e| Error::Malformed(e.to_string()))?;
        let slot = out(out_json, "out_json")?;
        let checks = verify_report(&report, exhaustive.then_some(Limits::desk().budget))?;
        let ok = checks.passed(report.list.len(), report.bound);
        *slot = to_c(serde_json::json!({ "verified": ok, "checks": checks }).to_string());
        if ok {
            Ok(())
        } else {
            Err(Fail::Status(
                RwStatus::VerificationFailed,
                "report did not verify".into(),
            ))
        }
    })
}

/// Names of the bundled recipes as a JSON array.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rw_bundled_recipes(out_json: *mut *mut c_char) -> RwStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        let names: Vec<&str> = recipe::BUNDLED.iter().map(|(n, _)| *n).collect();
        *slot = to_c(serde_json::to_string(&names).map_err(Error::from)?);
        Ok(())
    })
}
