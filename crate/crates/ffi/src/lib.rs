//! C ABI for the `ratvec` library.
//!
//! Every fallible function returns a [`RatvecStatus`]. On failure the
//! message is available from [`ratvec_last_error_message`] on the same
//! thread. Handles are opaque and must be released with their `_free`
//! function; strings returned through `char **` belong to the caller and are
//! released with [`ratvec_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ratvec::characterization::{eval_d, eval_k, eval_r, is_ratio_vector, RegionLabel};
use ratvec::field::parse_rational;
use ratvec::quartic::{forward, QuarticRoots, RatioVector};
use ratvec::reconstruction::{reconstruct, solve_w, Mode, WRoot};
use ratvec::symbolic::{verify_all, PolySet};
use ratvec::{Error, Rational, Scalar, Surd};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatvecStatus {
    Ok = 0,
    NotARatioVector = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Degenerate = 4,
    NoConvergence = 5,
    NullPointer = 6,
    IndexOutOfRange = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatvecRegion {
    Outside = 0,
    Z1 = 1,
    Z2 = 2,
    Z3 = 3,
    BoundaryIndeterminate = 4,
}

impl From<RegionLabel> for RatvecRegion {
    fn from(r: RegionLabel) -> Self {
        match r {
            RegionLabel::Z1 => RatvecRegion::Z1,
            RegionLabel::Z2 => RatvecRegion::Z2,
            RegionLabel::Z3 => RatvecRegion::Z3,
            RegionLabel::Outside => RatvecRegion::Outside,
            RegionLabel::BoundaryIndeterminate => RatvecRegion::BoundaryIndeterminate,
        }
    }
}

/// Membership verdict for one point.
pub struct RatvecVerdict {
    is_member: bool,
    region: RegionLabel,
    r_value: String,
    k_value: String,
}

/// Solutions of `R(u, v, w) = 0` for fixed rational `u, v`.
pub struct RatvecSolveW {
    roots: Vec<WRoot>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> RatvecStatus {
    match e {
        Error::NotARatioVector => RatvecStatus::NotARatioVector,
        Error::Parse(_) | Error::InvalidDenominator => RatvecStatus::ParseError,
        Error::DegenerateRoots(_) | Error::FormulaDegenerate(_) | Error::DivisionByZero => RatvecStatus::Degenerate,
        Error::NoConvergence(_) => RatvecStatus::NoConvergence,
        _ => RatvecStatus::InvalidArgument,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), (RatvecStatus, String)>>(body: F) -> RatvecStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RatvecStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            RatvecStatus::Internal
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (RatvecStatus, String)>;
}

impl<T> IntoFfi<T> for ratvec::Result<T> {
    fn ffi(self) -> Result<T, (RatvecStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(name: &str) -> (RatvecStatus, String) {
    (RatvecStatus::NullPointer, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (RatvecStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (RatvecStatus::ParseError, format!("{name} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn verdict_of<S: Scalar>(rv: &RatioVector<S>) -> ratvec::Result<RatvecVerdict> {
    let v = is_ratio_vector(rv)?;
    Ok(RatvecVerdict {
        is_member: v.is_ratio_vector,
        region: v.region,
        r_value: v.r_value.render(),
        k_value: v.k_value.render(),
    })
}

fn parse_triple(u: &str, v: &str, w: &str) -> ratvec::Result<Triple> {
    if [u, v, w].iter().any(|t| t.contains("sqrt")) {
        Ok(Triple::Surd(RatioVector::new(u.parse()?, v.parse()?, w.parse()?)))
    } else {
        Ok(Triple::Rational(RatioVector::new(parse_rational(u)?, parse_rational(v)?, parse_rational(w)?)))
    }
}

enum Triple {
    Rational(RatioVector<Rational>),
    Surd(RatioVector<Surd>),
}

/// Last error message on this thread, or null. Valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn ratvec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ratvec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Ratio vector and critical points of the quartic with strictly increasing
/// `roots[0..4]`, using relative bisection tolerance `tol`.
///
/// # Safety
/// `roots` must point to 4 doubles; `out_uvw` and `out_critical` to 3 each.
#[no_mangle]
pub unsafe extern "C" fn ratvec_forward_f64(
    roots: *const f64,
    tol: f64,
    out_uvw: *mut f64,
    out_critical: *mut f64,
) -> RatvecStatus {
    guard(|| {
        if roots.is_null() || out_uvw.is_null() || out_critical.is_null() {
            return Err(null("argument"));
        }
        let r = std::slice::from_raw_parts(roots, 4);
        let quartic = QuarticRoots::new([r[0], r[1], r[2], r[3]]).ffi()?;
        let fw = forward(&quartic, tol).ffi()?;
        std::slice::from_raw_parts_mut(out_uvw, 3).copy_from_slice(&fw.ratios.to_array());
        std::slice::from_raw_parts_mut(out_critical, 3).copy_from_slice(&fw.critical_points.points);
        Ok(())
    })
}

/// Membership test in binary64.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn ratvec_check_f64(u: f64, v: f64, w: f64, out: *mut *mut RatvecVerdict) -> RatvecStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let verdict = verdict_of(&RatioVector::new(u, v, w)).ffi()?;
        *out = Box::into_raw(Box::new(verdict));
        Ok(())
    })
}

/// Exact membership test. Inputs are `"p/q"`, exact decimals, or surds such
/// as `"(156303 - 9*sqrt(10054801))/211888"`.
///
/// # Safety
/// Strings must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratvec_check_str(
    u: *const c_char,
    v: *const c_char,
    w: *const c_char,
    out: *mut *mut RatvecVerdict,
) -> RatvecStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let triple = parse_triple(read_str(u, "u")?, read_str(v, "v")?, read_str(w, "w")?).ffi()?;
        let verdict = match triple {
            Triple::Rational(rv) => verdict_of(&rv),
            Triple::Surd(rv) => verdict_of(&rv),
        }
        .ffi()?;
        *out = Box::into_raw(Box::new(verdict));
        Ok(())
    })
}

/// # Safety
/// `verdict` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ratvec_verdict_is_member(verdict: *const RatvecVerdict) -> bool {
    verdict.as_ref().is_some_and(|v| v.is_member)
}

/// # Safety
/// `verdict` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ratvec_verdict_region(verdict: *const RatvecVerdict) -> RatvecRegion {
    verdict.as_ref().map_or(RatvecRegion::Outside, |v| v.region.into())
}

/// `k` at the point, rendered exactly when the input was exact.
///
/// # Safety
/// `verdict` must be a live handle. Free the result with [`ratvec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ratvec_verdict_k(verdict: *const RatvecVerdict) -> *mut c_char {
    verdict.as_ref().map_or(ptr::null_mut(), |v| to_c_string(v.k_value.clone()))
}

/// `R` at the point.
///
/// # Safety
/// `verdict` must be a live handle. Free the result with [`ratvec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ratvec_verdict_r(verdict: *const RatvecVerdict) -> *mut c_char {
    verdict.as_ref().map_or(ptr::null_mut(), |v| to_c_string(v.r_value.clone()))
}

/// # Safety
/// `verdict` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ratvec_verdict_free(verdict: *mut RatvecVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// Canonical `(r, s)` in binary64. With `checked` set, non-members give
/// `RATVEC_STATUS_NOT_A_RATIO_VECTOR`.
///
/// # Safety
/// `out_r` and `out_s` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ratvec_reconstruct_f64(
    u: f64,
    v: f64,
    w: f64,
    checked: bool,
    out_r: *mut f64,
    out_s: *mut f64,
) -> RatvecStatus {
    guard(|| {
        if out_r.is_null() || out_s.is_null() {
            return Err(null("output"));
        }
        let mode = if checked { Mode::Checked } else { Mode::Unchecked };
        let rec = reconstruct(&RatioVector::new(u, v, w), mode).ffi()?;
        *out_r = rec.r;
        *out_s = rec.s;
        Ok(())
    })
}

/// Exact canonical `(r, s)` as strings.
///
/// # Safety
/// Strings must be NUL-terminated; outputs must be valid pointers. Free the
/// results with [`ratvec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ratvec_reconstruct_str(
    u: *const c_char,
    v: *const c_char,
    w: *const c_char,
    checked: bool,
    out_r: *mut *mut c_char,
    out_s: *mut *mut c_char,
) -> RatvecStatus {
    guard(|| {
        if out_r.is_null() || out_s.is_null() {
            return Err(null("output"));
        }
        let mode = if checked { Mode::Checked } else { Mode::Unchecked };
        let triple = parse_triple(read_str(u, "u")?, read_str(v, "v")?, read_str(w, "w")?).ffi()?;
        let (r, s) = match triple {
            Triple::Rational(rv) => reconstruct(&rv, mode).map(|x| (x.r.render(), x.s.render())),
            Triple::Surd(rv) => reconstruct(&rv, mode).map(|x| (x.r.render(), x.s.render())),
        }
        .ffi()?;
        *out_r = to_c_string(r);
        *out_s = to_c_string(s);
        Ok(())
    })
}

/// All real `w` with `R(u, v, w) = 0` for rational `u, v`, ascending.
///
/// # Safety
/// Strings must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratvec_solve_w(
    u: *const c_char,
    v: *const c_char,
    out: *mut *mut RatvecSolveW,
) -> RatvecStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let u = parse_rational(read_str(u, "u")?).ffi()?;
        let v = parse_rational(read_str(v, "v")?).ffi()?;
        let roots = solve_w(&u, &v).ffi()?;
        *out = Box::into_raw(Box::new(RatvecSolveW { roots }));
        Ok(())
    })
}

/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ratvec_solve_w_count(handle: *const RatvecSolveW) -> usize {
    handle.as_ref().map_or(0, |h| h.roots.len())
}

/// Root `index` as an exact string, its binary64 value and its membership.
///
/// # Safety
/// `handle` must be live; any output pointer may be null to skip it. Free
/// `*out_text` with [`ratvec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ratvec_solve_w_root(
    handle: *const RatvecSolveW,
    index: usize,
    out_text: *mut *mut c_char,
    out_value: *mut f64,
    out_is_member: *mut bool,
) -> RatvecStatus {
    guard(|| {
        let h = handle.as_ref().ok_or_else(|| null("handle"))?;
        let root = h
            .roots
            .get(index)
            .ok_or_else(|| (RatvecStatus::IndexOutOfRange, format!("index {index} of {}", h.roots.len())))?;
        if !out_text.is_null() {
            *out_text = to_c_string(root.w.render());
        }
        if !out_value.is_null() {
            *out_value = root.w.to_f64();
        }
        if !out_is_member.is_null() {
            *out_is_member = root.verdict.is_ratio_vector;
        }
        Ok(())
    })
}

/// # Safety
/// `handle` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ratvec_solve_w_free(handle: *mut RatvecSolveW) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

#[no_mangle]
pub extern "C" fn ratvec_eval_r(u: f64, v: f64, w: f64) -> f64 {
    eval_r(&u, &v, &w)
}

#[no_mangle]
pub extern "C" fn ratvec_eval_k(u: f64, v: f64, w: f64) -> f64 {
    eval_k(&u, &v, &w)
}

#[no_mangle]
pub extern "C" fn ratvec_eval_d(u: f64, v: f64, w: f64) -> f64 {
    eval_d(&u, &v, &w)
}

/// Runs the identity suite; `*out_failed` receives the number of failures.
///
/// # Safety
/// `out_failed` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratvec_verify_identities(out_failed: *mut u32) -> RatvecStatus {
    guard(|| {
        if out_failed.is_null() {
            return Err(null("out_failed"));
        }
        let outcomes = verify_all(&PolySet::from_tables()).ffi()?;
        *out_failed = outcomes.iter().filter(|o| !o.passed).count() as u32;
        Ok(())
    })
}
