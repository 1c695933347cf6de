//! C interface to `toric-ech`.
//!
//! Domains are opaque handles created from the JSON domain format and
//! released with `te_domain_free`. Every computation returns a `TeStatus`
//! and writes a heap-allocated, NUL-terminated JSON document through its
//! `out` pointer; release it with `te_string_free`. After a non-`OK` status,
//! `te_last_error` describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use toric_ech::curves::{curve_check, parse_curve_config};
use toric_ech::domain::{ConvexToricDomain, DomainSpec};
use toric_ech::ech::{capacities, capacity};
use toric_ech::obstructions::{breaking_analysis, ellipsoid_certificate, noncontractibility_certificate};
use toric_ech::orbits::enumerate_orbit_families;
use toric_ech::rational::{format_rational, parse_rational};
use toric_ech::{json, Error};

/// Result codes of every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidData = 4,
    Inconsistent = 5,
    Panic = 6,
}

/// Opaque convex toric domain.
pub struct TeDomain {
    inner: ConvexToricDomain,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(TeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => TeStatus::ParseError,
            Error::Inconsistent(_) => TeStatus::Inconsistent,
            _ => TeStatus::InvalidData,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TeStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TeStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(TeStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(TeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn domain_arg<'a>(p: *const TeDomain, what: &str) -> Result<&'a ConvexToricDomain, Failure> {
    p.as_ref()
        .map(|d| &d.inner)
        .ok_or_else(|| Failure(TeStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(TeStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(TeStatus::InvalidData, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_json(out: *mut *mut c_char, v: serde_json::Value) -> Result<(), Failure> {
    write_string(out, json::render(&v, false))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn te_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread; empty after a success. Valid
/// until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn te_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a domain such as `{"type":"ellipsoid","a":"1","b":"2"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn te_domain_from_json(json: *const c_char, out: *mut *mut TeDomain) -> TeStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(TeStatus::NullPointer, "output pointer is null".into()));
        }
        let text = str_arg(json, "json")?;
        let inner = DomainSpec::parse_json(text)?;
        *out = Box::into_raw(Box::new(TeDomain { inner }));
        Ok(())
    })
}

/// Releases a domain. Null is ignored.
///
/// # Safety
/// `domain` must come from `te_domain_from_json` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn te_domain_free(domain: *mut TeDomain) {
    if !domain.is_null() {
        drop(Box::from_raw(domain));
    }
}

/// Canonical JSON form of a domain.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_domain_to_json(domain: *const TeDomain, out: *mut *mut c_char) -> TeStatus {
    guard(|| write_json(out, json::domain(domain_arg(domain, "domain")?)))
}

/// `c_k` as a rational string such as `"3/2"`.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_capacity(domain: *const TeDomain, k: u64, out: *mut *mut c_char) -> TeStatus {
    guard(|| write_string(out, format_rational(&capacity(domain_arg(domain, "domain")?, k))))
}

/// `{"domain":..,"capacities":["0",..]}` for `c_0 .. c_K`.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_capacities(domain: *const TeDomain, k_max: u64, out: *mut *mut c_char) -> TeStatus {
    guard(|| write_json(out, json::capacities(&capacities(domain_arg(domain, "domain")?, k_max), None)))
}

/// Orbit families with action at most `action` (a rational string).
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_orbits(domain: *const TeDomain, action: *const c_char, out: *mut *mut c_char) -> TeStatus {
    guard(|| {
        let d = domain_arg(domain, "domain")?;
        let bound = parse_rational(str_arg(action, "action")?)?;
        write_json(out, json::orbit_families(d, &bound, &enumerate_orbit_families(d, &bound)))
    })
}

/// Embedding obstruction search for `k ≤ k_max`; `obstructed_at` is null
/// when no capacity is violated.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_check_embed(
    inner: *const TeDomain,
    outer: *const TeDomain,
    k_max: u64,
    out: *mut *mut c_char,
) -> TeStatus {
    guard(|| {
        let (di, dout) = (domain_arg(inner, "inner")?, domain_arg(outer, "outer")?);
        if k_max == 0 {
            return Err(Failure(TeStatus::InvalidData, "k_max must be at least 1".into()));
        }
        let ci = capacities(di, k_max).values;
        let co = capacities(dout, k_max).values;
        let found = (1..=k_max).find(|&k| ci[k as usize] > co[k as usize]);
        write_json(out, json::check_embed(di, dout, &ci, &co, found))
    })
}

/// Noncontractibility certificate report.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_certify_loop(
    inner: *const TeDomain,
    outer: *const TeDomain,
    out: *mut *mut c_char,
) -> TeStatus {
    guard(|| {
        let (di, dout) = (domain_arg(inner, "inner")?, domain_arg(outer, "outer")?);
        write_json(out, json::certificate(di, dout, &noncontractibility_certificate(di, dout)))
    })
}

/// Certificate for `E(a,b) ⊂ E(c,d)` from four rational strings.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_ellipsoid_certificate(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    d: *const c_char,
    out: *mut *mut c_char,
) -> TeStatus {
    guard(|| {
        let a = parse_rational(str_arg(a, "a")?)?;
        let b = parse_rational(str_arg(b, "b")?)?;
        let c = parse_rational(str_arg(c, "c")?)?;
        let d = parse_rational(str_arg(d, "d")?)?;
        let r = ellipsoid_certificate(&a, &b, &c, &d)?;
        write_json(out, serde_json::to_value(&r).expect("reports serialize"))
    })
}

/// Breaking analysis report; nested domains required.
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_breaking(inner: *const TeDomain, outer: *const TeDomain, out: *mut *mut c_char) -> TeStatus {
    guard(|| {
        let (di, dout) = (domain_arg(inner, "inner")?, domain_arg(outer, "outer")?);
        let r = breaking_analysis(di, dout)?;
        write_json(out, json::breaking(di, dout, &r))
    })
}

/// Runs the curve checks of a JSON configuration (`"{}"` for the default
/// uniqueness check).
///
/// # Safety
/// Pointers must be valid; see the module documentation.
#[no_mangle]
pub unsafe extern "C" fn te_curve_check(config: *const c_char, out: *mut *mut c_char) -> TeStatus {
    guard(|| {
        let cfg = parse_curve_config(str_arg(config, "config")?)?;
        write_json(out, json::curve_check(&curve_check(&cfg)?))
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn te_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
