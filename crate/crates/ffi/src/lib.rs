//! C interface to `conic-core`.
//!
//! Polytopes live behind the opaque [`ConicPolytope`] handle. Every fallible
//! function returns a [`ConicStatus`]; on failure a message is available from
//! [`conic_last_error`] until the next call on the same thread. Strings handed
//! out by the library must be released with [`conic_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use conic_core::conic::{search_conic, verify_certificate, SearchConstraint, SearchOutcome};
use conic_core::invariants::h_vector;
use conic_core::io::{
    analyze, emit_certificate, emit_report, parse_certificate, parse_polytope, polytope_from_document,
    AnalysisOptions, CertificateDocument, Polytope,
};
use conic_core::Error;

/// Opaque polytope handle.
pub struct ConicPolytope {
    inner: Polytope,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicStatus {
    Ok = 0,
    NotConic = 1,
    Inconclusive = 2,
    InvalidCertificate = 3,
    NullPointer = 10,
    InvalidUtf8 = 11,
    ParseError = 12,
    SchemaError = 13,
    GeometryError = 14,
    BufferTooSmall = 15,
    OtherError = 20,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicConstraint {
    Any = 0,
    Simplex = 1,
    Cube = 2,
    Simple = 3,
}

impl From<ConicConstraint> for SearchConstraint {
    fn from(c: ConicConstraint) -> Self {
        match c {
            ConicConstraint::Any => SearchConstraint::Any,
            ConicConstraint::Simplex => SearchConstraint::AllSimplex,
            ConicConstraint::Cube => SearchConstraint::AllCube,
            ConicConstraint::Simple => SearchConstraint::AllSimple,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> ConicStatus {
    match e {
        Error::Parse(_) => ConicStatus::ParseError,
        Error::Schema { .. } => ConicStatus::SchemaError,
        Error::DegenerateInput(_)
        | Error::Unbounded
        | Error::Empty
        | Error::DimensionMismatch { .. }
        | Error::InconsistentIncidence(_) => ConicStatus::GeometryError,
        Error::InconsistentWitness(_) => ConicStatus::InvalidCertificate,
        _ => ConicStatus::OtherError,
    }
}

fn fail(e: Error) -> ConicStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning panics into [`ConicStatus::Panic`].
fn guard(f: impl FnOnce() -> ConicStatus) -> ConicStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            ConicStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ConicStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(ConicStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        ConicStatus::InvalidUtf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON output has no nul bytes").into_raw()
}

unsafe fn write_slice<T: Copy>(values: &[T], buf: *mut T, cap: size_t, len: *mut size_t) -> ConicStatus {
    if len.is_null() {
        set_error("null length pointer");
        return ConicStatus::NullPointer;
    }
    *len = values.len();
    if values.len() > cap {
        set_error(format!("buffer holds {cap} entries, {} needed", values.len()));
        return ConicStatus::BufferTooSmall;
    }
    if !values.is_empty() {
        if buf.is_null() {
            set_error("null buffer");
            return ConicStatus::NullPointer;
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    ConicStatus::Ok
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn conic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a polytope document and builds its face lattice.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conic_polytope_from_json(json: *const c_char, out: *mut *mut ConicPolytope) -> ConicStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return ConicStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_polytope(text.as_bytes()).and_then(|d| polytope_from_document(&d)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ConicPolytope { inner }));
                ConicStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `p` must come from [`conic_polytope_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn conic_polytope_free(p: *mut ConicPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn conic_polytope_num_vertices(p: *const ConicPolytope) -> size_t {
    p.as_ref().map_or(0, |p| p.inner.lattice.n_vertices())
}

/// Copies `(f_0, …, f_n)` into `buf`. `*len` receives the length even when
/// the buffer is too small.
///
/// # Safety
/// `p` must be a live handle, `buf` must hold `cap` entries, `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn conic_polytope_f_vector(
    p: *const ConicPolytope,
    buf: *mut u64,
    cap: size_t,
    len: *mut size_t,
) -> ConicStatus {
    guard(|| match p.as_ref() {
        Some(p) => write_slice(&p.inner.lattice.f_vector().0, buf, cap, len),
        None => {
            set_error("null polytope");
            ConicStatus::NullPointer
        }
    })
}

/// Copies `(h_0, …, h_n)` into `buf`, as [`conic_polytope_f_vector`].
///
/// # Safety
/// As for [`conic_polytope_f_vector`].
#[no_mangle]
pub unsafe extern "C" fn conic_polytope_h_vector(
    p: *const ConicPolytope,
    buf: *mut i64,
    cap: size_t,
    len: *mut size_t,
) -> ConicStatus {
    guard(|| match p.as_ref() {
        Some(p) => write_slice(&h_vector(&p.inner.lattice.f_vector()).0, buf, cap, len),
        None => {
            set_error("null polytope");
            ConicStatus::NullPointer
        }
    })
}

/// Searches for a conic sequence. `budget` 0 means unlimited. When a sequence
/// is found and `certificate_json` is not NULL, it receives a certificate
/// document to be freed with [`conic_string_free`].
///
/// Returns `Ok`, `NotConic` or `Inconclusive`.
///
/// # Safety
/// `p` must be a live handle; `certificate_json` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn conic_search(
    p: *const ConicPolytope,
    constraint: ConicConstraint,
    budget: u64,
    certificate_json: *mut *mut c_char,
) -> ConicStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            set_error("null polytope");
            return ConicStatus::NullPointer;
        };
        if !certificate_json.is_null() {
            *certificate_json = ptr::null_mut();
        }
        let constraint: SearchConstraint = constraint.into();
        match search_conic(&p.inner.lattice, constraint, (budget > 0).then_some(budget)) {
            SearchOutcome::Found(cert) => {
                if !certificate_json.is_null() {
                    let doc = CertificateDocument::from_certificate(&cert, &p.inner.lattice, constraint);
                    *certificate_json = into_c_string(emit_certificate(&doc));
                }
                ConicStatus::Ok
            }
            SearchOutcome::NotConic => ConicStatus::NotConic,
            SearchOutcome::Inconclusive => ConicStatus::Inconclusive,
        }
    })
}

/// Replays a certificate document. Returns `Ok` when it is valid and
/// `InvalidCertificate` with a diagnostic otherwise.
///
/// # Safety
/// `p` must be a live handle and `certificate_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn conic_verify(
    p: *const ConicPolytope,
    certificate_json: *const c_char,
    constraint: ConicConstraint,
) -> ConicStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            set_error("null polytope");
            return ConicStatus::NullPointer;
        };
        let text = match read_str(certificate_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let cert = match parse_certificate(text.as_bytes()).and_then(|d| d.to_certificate(&p.inner.lattice)) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        let v = verify_certificate(&p.inner.lattice, &cert, constraint.into());
        if v.valid {
            ConicStatus::Ok
        } else {
            set_error(v.message);
            ConicStatus::InvalidCertificate
        }
    })
}

/// Full analysis report as JSON, to be freed with [`conic_string_free`].
///
/// # Safety
/// `p` must be a live handle and `report_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conic_analyze(p: *const ConicPolytope, report_json: *mut *mut c_char) -> ConicStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            set_error("null polytope");
            return ConicStatus::NullPointer;
        };
        if report_json.is_null() {
            set_error("null output pointer");
            return ConicStatus::NullPointer;
        }
        *report_json = ptr::null_mut();
        match analyze(&p.inner, &AnalysisOptions::default()) {
            Ok(r) => {
                *report_json = into_c_string(emit_report(&r));
                ConicStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn conic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
