//! C ABI over the core library: opaque handles, status codes, and
//! JSON-string reports for the structured surfaces.
//!
//! Conventions:
//! * every function returns an [`EuStatus`]; outputs go through out
//!   pointers;
//! * strings returned through out pointers are heap-allocated and must be
//!   released with [`eu_string_free`];
//! * handles from `eu_root_system_new` must be released with
//!   [`eu_root_system_free`].
//!
//! The matching header is maintained at `include/euphotic.h`.

use euphotic::affine::{barycenter, orbit_contains, LatticeChoice};
use euphotic::chargen::{count_generic, is_generic_a, is_generic_bcd, CharKind, CharacterTuple};
use euphotic::error::Error;
use euphotic::grading::grade;
use euphotic::rat::RatVec;
use euphotic::root_system::{GroupType, RootSystem};
use euphotic::scenario::{run_audit, Scenario};
use std::ffi::{c_char, CStr, CString};

/// Status codes mirrored in the C header.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EuStatus {
    Ok = 0,
    InputError = 1,
    CapabilityError = 2,
    InvariantViolation = 3,
    NullPointer = 4,
    Utf8Error = 5,
    CheckFailed = 6,
}

fn status_of(e: &Error) -> EuStatus {
    match e {
        Error::Input(_) => EuStatus::InputError,
        Error::Capability(_) => EuStatus::CapabilityError,
        Error::Invariant(_) | Error::Consistency(_) => EuStatus::InvariantViolation,
    }
}

/// Opaque root-system handle.
pub struct EuRootSystem {
    inner: RootSystem,
}

unsafe fn cstr<'a>(p: *const c_char) -> Result<&'a str, EuStatus> {
    if p.is_null() {
        return Err(EuStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| EuStatus::Utf8Error)
}

fn emit_string(s: String, out: *mut *mut c_char) -> EuStatus {
    if out.is_null() {
        return EuStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            EuStatus::Ok
        }
        Err(_) => EuStatus::InputError,
    }
}

/// Builds a root system. `type_tag` is one of `A,B,C,D,E6,E7,E8,F4,G2`;
/// `rank` is ignored for the fixed-rank exceptional types when 0.
///
/// # Safety
/// `type_tag` must be a valid NUL-terminated string and `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn eu_root_system_new(
    type_tag: *const c_char,
    rank: usize,
    out: *mut *mut EuRootSystem,
) -> EuStatus {
    if out.is_null() {
        return EuStatus::NullPointer;
    }
    let tag = match unsafe { cstr(type_tag) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let group = match GroupType::parse(tag) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    let rank = group.fixed_rank().unwrap_or(rank);
    match RootSystem::build(group, rank) {
        Ok(rs) => {
            unsafe { *out = Box::into_raw(Box::new(EuRootSystem { inner: rs })) };
            EuStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a root-system handle. Null is a no-op.
///
/// # Safety
/// `handle` must come from `eu_root_system_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eu_root_system_free(handle: *mut EuRootSystem) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of roots.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eu_num_roots(handle: *const EuRootSystem, out: *mut usize) -> EuStatus {
    if handle.is_null() || out.is_null() {
        return EuStatus::NullPointer;
    }
    unsafe { *out = (*handle).inner.num_roots() };
    EuStatus::Ok
}

/// Rank of the system.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eu_rank(handle: *const EuRootSystem, out: *mut usize) -> EuStatus {
    if handle.is_null() || out.is_null() {
        return EuStatus::NullPointer;
    }
    unsafe { *out = (*handle).inner.rank };
    EuStatus::Ok
}

/// Facet report (m, barycenter, graded dimensions) as a JSON string.
///
/// # Safety
/// `j` must point to `j_len` readable indices; `out_json` receives a
/// string to free with `eu_string_free`.
#[no_mangle]
pub unsafe extern "C" fn eu_facet_report_json(
    handle: *const EuRootSystem,
    j: *const usize,
    j_len: usize,
    out_json: *mut *mut c_char,
) -> EuStatus {
    if handle.is_null() || (j.is_null() && j_len > 0) {
        return EuStatus::NullPointer;
    }
    let rs = unsafe { &(*handle).inner };
    let indices = unsafe { std::slice::from_raw_parts(j, j_len) };
    let facet = match barycenter(rs, indices) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    let grading = match grade(rs, &facet) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    let body = euphotic::report::facet_report(rs, &facet, &grading);
    emit_string(euphotic::report::Report::new("facet", body).to_json(), out_json)
}

/// Graded dimensions of a facet. `dims` must have room for `m` entries;
/// call with `dims_cap = 0` to query `m` through `out_m` first.
///
/// # Safety
/// Pointer arguments must be valid for the advertised lengths.
#[no_mangle]
pub unsafe extern "C" fn eu_grading_dims(
    handle: *const EuRootSystem,
    j: *const usize,
    j_len: usize,
    dims: *mut usize,
    dims_cap: usize,
    out_m: *mut usize,
) -> EuStatus {
    if handle.is_null() || out_m.is_null() || (j.is_null() && j_len > 0) {
        return EuStatus::NullPointer;
    }
    let rs = unsafe { &(*handle).inner };
    let indices = unsafe { std::slice::from_raw_parts(j, j_len) };
    let facet = match barycenter(rs, indices) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    let grading = match grade(rs, &facet) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    unsafe { *out_m = grading.dims.len() };
    if dims_cap == 0 {
        return EuStatus::Ok;
    }
    if dims.is_null() {
        return EuStatus::NullPointer;
    }
    if dims_cap < grading.dims.len() {
        return EuStatus::InputError;
    }
    for (i, d) in grading.dims.iter().enumerate() {
        unsafe { *dims.add(i) = *d };
    }
    EuStatus::Ok
}

fn parse_point(rs: &RootSystem, text: &str) -> Result<RatVec, Error> {
    let parts: Vec<&str> = text.split(',').map(|s| s.trim()).collect();
    let v = RatVec::parse(&parts)?;
    if v.dim() != rs.rank {
        return Err(Error::Input(format!(
            "expected {} coordinates, got {}",
            rs.rank,
            v.dim()
        )));
    }
    Ok(v)
}

/// Orbit membership of `y` in the extended-affine-Weyl orbit of `x`,
/// both given as comma-separated value coordinates (`p/q` entries).
/// `lattice` is 0 for simply connected, 1 for adjoint. On success
/// `out_member` is 1 or 0 and, when a witness exists, `out_witness_json`
/// (optional) receives it.
///
/// # Safety
/// String pointers must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn eu_orbit_contains(
    handle: *const EuRootSystem,
    x: *const c_char,
    y: *const c_char,
    lattice: i32,
    out_member: *mut i32,
    out_witness_json: *mut *mut c_char,
) -> EuStatus {
    if handle.is_null() || out_member.is_null() {
        return EuStatus::NullPointer;
    }
    let rs = unsafe { &(*handle).inner };
    let (xs, ys) = match (unsafe { cstr(x) }, unsafe { cstr(y) }) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    let lattice = match lattice {
        0 => LatticeChoice::SimplyConnected,
        1 => LatticeChoice::Adjoint,
        _ => return EuStatus::InputError,
    };
    let (px, py) = match (parse_point(rs, xs), parse_point(rs, ys)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return status_of(&e),
    };
    match orbit_contains(rs, &px, &py, lattice) {
        Ok(Some(w)) => {
            unsafe { *out_member = 1 };
            if !out_witness_json.is_null() {
                let body = serde_json::json!({
                    "word": w.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "translation": w.translation.strings(),
                });
                return emit_string(body.to_string(), out_witness_json);
            }
            EuStatus::Ok
        }
        Ok(None) => {
            unsafe { *out_member = 0 };
            EuStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Character genericity. `kind` is 0 for the type A condition, 1 for
/// types B/C/D. `exps` has `n` entries.
///
/// # Safety
/// `exps` must point to `n` readable values; `out_generic` must be valid.
#[no_mangle]
pub unsafe extern "C" fn eu_char_generic(
    kind: i32,
    n: usize,
    q: u64,
    exps: *const i64,
    out_generic: *mut i32,
) -> EuStatus {
    if out_generic.is_null() || (exps.is_null() && n > 0) {
        return EuStatus::NullPointer;
    }
    let exps = unsafe { std::slice::from_raw_parts(exps, n) }.to_vec();
    let chi = CharacterTuple { q, exps };
    let verdict = match kind {
        0 => is_generic_a(n, &chi).map(|r| r.0),
        1 => is_generic_bcd(n, &chi).map(|r| r.0),
        _ => return EuStatus::InputError,
    };
    match verdict {
        Ok(ok) => {
            unsafe { *out_generic = i32::from(ok) };
            EuStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Census of generic tuples; `kind` as in `eu_char_generic`.
///
/// # Safety
/// `out_count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eu_char_census(
    kind: i32,
    n: usize,
    q: u64,
    out_count: *mut u64,
) -> EuStatus {
    if out_count.is_null() {
        return EuStatus::NullPointer;
    }
    let kind = match kind {
        0 => CharKind::A,
        1 => CharKind::BCD,
        _ => return EuStatus::InputError,
    };
    match count_generic(kind, n, q) {
        Ok(c) => {
            unsafe { *out_count = c };
            EuStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Runs the rigidity audit over a scenario JSON string; the report comes
/// back as JSON. Returns `CheckFailed` when the audit ran but a check
/// did not pass.
///
/// # Safety
/// `scenario_json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn eu_audit_scenario_json(
    scenario_json: *const c_char,
    out_json: *mut *mut c_char,
) -> EuStatus {
    let text = match unsafe { cstr(scenario_json) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let sc = match Scenario::from_json(text) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match run_audit(&sc) {
        Ok(rep) => {
            let passes = rep.passes;
            let status = emit_string(
                serde_json::to_string_pretty(&rep).unwrap_or_default(),
                out_json,
            );
            if status != EuStatus::Ok {
                return status;
            }
            if passes {
                EuStatus::Ok
            } else {
                EuStatus::CheckFailed
            }
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eu_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn eu_version() -> *const c_char {
    static VERSION: &[u8] = concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes();
    VERSION.as_ptr() as *const c_char
}
