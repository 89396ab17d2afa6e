//! C ABI for `steinberg-core`.
//!
//! Every function returns an [`StStatus`]; results come back through out
//! pointers. Handles are opaque and must be released with their `*_free`
//! function. Strings returned to the caller are owned by the caller and are
//! released with [`st_string_free`]. After a non-`Ok` status,
//! [`st_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use steinberg_core::breps::{build_rep, RepExpr, WeightMultiset};
use steinberg_core::bwb::{euler_char, psupp};
use steinberg_core::campaigns::{self, IdealOptions};
use steinberg_core::field::Characteristic;
use steinberg_core::report::{Entry, Report, Status};
use steinberg_core::steinberg::Tag;
use steinberg_core::weights::Weight;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Status of a single check, mirroring the report vocabulary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StCheckStatus {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
    NotDecidable = 3,
}

/// Weight multiset of a parsed rep expression.
pub struct StRep {
    weights: WeightMultiset,
}

/// A verification report.
pub struct StReport {
    report: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: StStatus, msg: impl Into<String>) -> StStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> StStatus) -> StStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(StStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, StStatus> {
    if s.is_null() {
        return Err(fail(StStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(StStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn characteristic(l: u64) -> Result<Characteristic, StStatus> {
    Characteristic::new(l).ok_or_else(|| fail(StStatus::InvalidArgument, format!("{l} is neither 0 nor a prime")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> StStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            StStatus::Ok
        }
        Err(_) => fail(StStatus::InvalidArgument, "result contains a NUL byte"),
    }
}

macro_rules! try_st {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(StStatus::NullPointer, concat!("null argument ", stringify!($p)));
        })+
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn st_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the last error message of this thread into a new string, or
/// writes NULL when there is none.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_last_error(out: *mut *mut c_char) -> StStatus {
    non_null!(out);
    *out = LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()));
    StStatus::Ok
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a rep expression such as `wedge^2(b)*b` and evaluates its weights.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_parse(expr: *const c_char, out: *mut *mut StRep) -> StStatus {
    non_null!(out);
    guard(|| {
        let text = try_st!(read_str(expr));
        let parsed = try_st!(RepExpr::parse(text).map_err(|e| fail(StStatus::ParseError, format!("'{text}': {e}"))));
        let weights = try_st!(build_rep(&parsed).map_err(|e| fail(StStatus::OutOfRange, e.to_string())));
        *out = Box::into_raw(Box::new(StRep { weights }));
        StStatus::Ok
    })
}

/// # Safety
/// `rep` must be NULL or a handle from [`st_rep_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_rep_free(rep: *mut StRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// # Safety
/// `rep` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_dim(rep: *const StRep, out: *mut u64) -> StStatus {
    non_null!(rep, out);
    *out = (*rep).weights.dim();
    StStatus::Ok
}

/// Multiplicity of the weight `(a, b)` in fundamental-weight coordinates.
///
/// # Safety
/// `rep` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_multiplicity(rep: *const StRep, a: i64, b: i64, out: *mut u64) -> StStatus {
    non_null!(rep, out);
    *out = (*rep).weights.multiplicity(Weight::new(a, b));
    StStatus::Ok
}

/// Weights as text, e.g. `{(-1,-1), (0,0)^2}`.
///
/// # Safety
/// `rep` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_weights(rep: *const StRep, out: *mut *mut c_char) -> StStatus {
    non_null!(rep, out);
    write_string(out, (*rep).weights.to_string())
}

/// Euler characteristic as text, e.g. `2[V(1,1)] + [V(0,0)]`.
///
/// # Safety
/// `rep` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_euler_char(rep: *const StRep, out: *mut *mut c_char) -> StStatus {
    non_null!(rep, out);
    guard(|| write_string(out, euler_char(&(*rep).weights).to_string()))
}

/// Weights contributing to `H^i` in characteristic `l`, as text.
///
/// # Safety
/// `rep` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_rep_psupp(rep: *const StRep, i: u32, l: u64, out: *mut *mut c_char) -> StStatus {
    non_null!(rep, out);
    guard(|| {
        let l = try_st!(characteristic(l));
        match psupp(&(*rep).weights, i, l) {
            Ok(m) => write_string(out, m.to_string()),
            Err(e) => fail(StStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Runs a campaign by name: `bwb-tables`, `identities`, `span`, `dims`,
/// `multiplicities`, `classgroup` or `all`. `l` is the characteristic where
/// the campaign takes one and is ignored otherwise; for `all` it is the
/// number of worker threads.
///
/// # Safety
/// `campaign` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_verify(campaign: *const c_char, l: u64, out: *mut *mut StReport) -> StStatus {
    non_null!(out);
    guard(|| {
        let name = try_st!(read_str(campaign));
        let report = match name {
            "all" => campaigns::all(l.max(1) as usize),
            "multiplicities" => campaigns::multiplicities(),
            "classgroup" => campaigns::classgroup(),
            _ => {
                let chr = try_st!(characteristic(l));
                match name {
                    "bwb-tables" => {
                        let mut r = campaigns::bwb_tables(chr);
                        r.extend(campaigns::bwb_shared());
                        r
                    }
                    "identities" => campaigns::identities(chr),
                    "span" => campaigns::span(chr),
                    "dims" => campaigns::dims(chr),
                    _ => return fail(StStatus::InvalidArgument, format!("unknown campaign '{name}'")),
                }
            }
        };
        *out = into_handle(report);
        StStatus::Ok
    })
}

/// Runs the checks of one ideal case (`n2`, `n3-z`, `n3-x`, `gl-n2`,
/// `gl-n3`, `cnil`) in characteristic `l`, plus its randomized containment
/// test with `trials` points drawn from `seed`.
///
/// # Safety
/// `case_name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_verify_ideal(
    case_name: *const c_char,
    l: u64,
    degree_bound: u32,
    trials: u32,
    seed: u64,
    out: *mut *mut StReport,
) -> StStatus {
    non_null!(out);
    guard(|| {
        let tag: Tag =
            try_st!(try_st!(read_str(case_name)).parse().map_err(|e: String| fail(StStatus::InvalidArgument, e)));
        let chr = try_st!(characteristic(l));
        if (1..5).contains(&l) {
            return fail(StStatus::InvalidArgument, format!("case '{tag}' needs characteristic 0 or >= 5"));
        }
        let opts = IdealOptions { bound: degree_bound, trials, seed, ..IdealOptions::new(tag) };
        *out = into_handle(campaigns::ideal(&opts, chr));
        StStatus::Ok
    })
}

unsafe fn entries<'a>(report: *const StReport) -> &'a [Entry] {
    &(*report).report.entries
}

fn into_handle(mut report: Report) -> *mut StReport {
    report.sort();
    Box::into_raw(Box::new(StReport { report }))
}

/// # Safety
/// `report` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_report_free(report: *mut StReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_report_len(report: *const StReport, out: *mut usize) -> StStatus {
    non_null!(report, out);
    *out = (*report).report.entries.len();
    StStatus::Ok
}

/// Writes 1 when no entry failed, 0 otherwise.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_report_passed(report: *const StReport, out: *mut u8) -> StStatus {
    non_null!(report, out);
    *out = u8::from((*report).report.passed());
    StStatus::Ok
}

/// # Safety
/// `report` must be a live handle and `status` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_report_entry_status(
    report: *const StReport,
    index: usize,
    status: *mut StCheckStatus,
) -> StStatus {
    non_null!(report, status);
    let Some(e) = entries(report).get(index) else {
        return fail(StStatus::OutOfRange, format!("entry {index} out of range"));
    };
    *status = match e.status {
        Status::Pass => StCheckStatus::Pass,
        Status::Fail => StCheckStatus::Fail,
        Status::Skipped => StCheckStatus::Skipped,
        Status::NotDecidable => StCheckStatus::NotDecidable,
    };
    StStatus::Ok
}

/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_report_entry_id(report: *const StReport, index: usize, out: *mut *mut c_char) -> StStatus {
    non_null!(report, out);
    match entries(report).get(index) {
        Some(e) => write_string(out, e.check_id.clone()),
        None => fail(StStatus::OutOfRange, format!("entry {index} out of range")),
    }
}

/// The report as schema-1 JSON. With `deterministic` nonzero, timings are
/// written as 0.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_report_json(report: *const StReport, deterministic: u8, out: *mut *mut c_char) -> StStatus {
    non_null!(report, out);
    guard(|| {
        let mut r = (*report).report.clone();
        if deterministic != 0 {
            r.zero_timings();
        }
        write_string(out, r.to_json("ffi", None))
    })
}
