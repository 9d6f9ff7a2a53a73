//! C ABI over `braidforge`.
//!
//! Braids live behind the opaque `BfBraid` handle. Every fallible call
//! returns a `BfStatus` and writes its result through an out-pointer; the
//! detailed message of the last failure on the calling thread is available
//! from `bf_last_error`. Strings handed out by the library must be released
//! with `bf_string_free`, handles with `bf_braid_free`.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use braidforge::braid::{parse_braid, BraidWord};
use braidforge::error::Error;
use braidforge::families::{t_link_braid, v_link_braid, TLinkSpec, VLinkSpec};
use braidforge::garside::{extract_full_twists, normal_form, positive_equal};
use braidforge::invariants::{closure_components, invariant_bundle, linking_matrix};
use braidforge::report::{verify_all, VerifyConfig};
use braidforge::satellite::{adjoin_axis, delete_components};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    NotPositive = 5,
    Computation = 6,
    Panic = 7,
}

/// Opaque braid word.
pub struct BfBraid(BraidWord);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: BfStatus, msg: impl Into<String>) -> BfStatus {
    set_error(msg.into());
    status
}

fn status_of(e: Error) -> BfStatus {
    let status = match &e {
        Error::Parse { .. } => BfStatus::Parse,
        Error::NotPositive { .. } => BfStatus::NotPositive,
        Error::Invariant(_) | Error::OracleBound(_) => BfStatus::Computation,
        _ => BfStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `BfStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), BfStatus>) -> BfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(BfStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, BfStatus> {
    if s.is_null() {
        return Err(fail(BfStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(BfStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn braid<'a>(b: *const BfBraid) -> Result<&'a BraidWord, BfStatus> {
    b.as_ref()
        .map(|b| &b.0)
        .ok_or_else(|| fail(BfStatus::NullPointer, "null braid handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), BfStatus> {
    if out.is_null() {
        return Err(fail(BfStatus::NullPointer, "null out-pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_braid(out: *mut *mut BfBraid, w: BraidWord) -> Result<(), BfStatus> {
    if out.is_null() {
        return Err(fail(BfStatus::NullPointer, "null out-pointer"));
    }
    out.write(Box::into_raw(Box::new(BfBraid(w))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), BfStatus> {
    if out.is_null() {
        return Err(fail(BfStatus::NullPointer, "null out-pointer"));
    }
    let c = CString::new(s).map_err(|_| fail(BfStatus::Computation, "output contains NUL"))?;
    out.write(c.into_raw());
    Ok(())
}

fn to_json(v: serde_json::Value) -> String {
    v.to_string()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bf_status_message(status: BfStatus) -> *const c_char {
    let s: &'static str = match status {
        BfStatus::Ok => "ok\0",
        BfStatus::NullPointer => "null pointer\0",
        BfStatus::InvalidUtf8 => "invalid UTF-8\0",
        BfStatus::Parse => "parse error\0",
        BfStatus::InvalidInput => "invalid input\0",
        BfStatus::NotPositive => "braid is not positive\0",
        BfStatus::Computation => "computation failed\0",
        BfStatus::Panic => "internal panic\0",
    };
    s.as_ptr().cast()
}

/// Copy of the message for the last failure on this thread, or NULL.
/// Release with `bf_string_free`.
#[no_mangle]
pub extern "C" fn bf_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"<strands>: g1 g2 ..."`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_parse(text: *const c_char, out: *mut *mut BfBraid) -> BfStatus {
    guard(|| {
        let w = parse_braid(c_str(text)?).map_err(status_of)?;
        put_braid(out, w)
    })
}

/// Builds a braid from `len` signed 1-based generators.
///
/// # Safety
/// `letters` must point to `len` readable values (may be NULL when
/// `len == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_new(
    strands: usize,
    letters: *const i32,
    len: usize,
    out: *mut *mut BfBraid,
) -> BfStatus {
    guard(|| {
        let letters = if len == 0 {
            Vec::new()
        } else if letters.is_null() {
            return Err(fail(BfStatus::NullPointer, "null letter array"));
        } else {
            std::slice::from_raw_parts(letters, len).to_vec()
        };
        put_braid(out, BraidWord::new(strands, letters).map_err(status_of)?)
    })
}

/// Braid of a T-link literal such as `"T((3,1),(7,3))"`.
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_from_tlink(
    literal: *const c_char,
    out: *mut *mut BfBraid,
) -> BfStatus {
    guard(|| {
        let spec: TLinkSpec = c_str(literal)?.parse().map_err(status_of)?;
        put_braid(out, t_link_braid(&spec))
    })
}

/// Braid of a V-link literal such as `"V((2,~2),(3,3))"`.
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_from_vlink(
    literal: *const c_char,
    out: *mut *mut BfBraid,
) -> BfStatus {
    guard(|| {
        let spec: VLinkSpec = c_str(literal)?.parse().map_err(status_of)?;
        put_braid(out, v_link_braid(&spec))
    })
}

/// # Safety
/// `b` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_free(b: *mut BfBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Strand count, or 0 for a NULL handle.
///
/// # Safety
/// `b` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_strands(b: *const BfBraid) -> usize {
    b.as_ref().map_or(0, |b| b.0.strands())
}

/// Word length, or 0 for a NULL handle.
///
/// # Safety
/// `b` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_len(b: *const BfBraid) -> usize {
    b.as_ref().map_or(0, |b| b.0.len())
}

/// The braid in text form.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_braid_to_string(b: *const BfBraid, out: *mut *mut c_char) -> BfStatus {
    guard(|| put_string(out, braid(b)?.to_string()))
}

/// Largest `k` with the positive braid divisible by `k` full twists.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_full_twists(b: *const BfBraid, out: *mut usize) -> BfStatus {
    guard(|| {
        let k = extract_full_twists(braid(b)?).map_err(status_of)?.k_max;
        put(out, k)
    })
}

/// Number of closure components.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_component_count(b: *const BfBraid, out: *mut usize) -> BfStatus {
    guard(|| put(out, closure_components(braid(b)?).count()))
}

/// Whether two positive braids are equal in the positive braid monoid.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_positive_equal(
    a: *const BfBraid,
    b: *const BfBraid,
    out: *mut bool,
) -> BfStatus {
    guard(|| {
        put(
            out,
            positive_equal(braid(a)?, braid(b)?).map_err(status_of)?,
        )
    })
}

/// Garside normal form as JSON.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_normal_form_json(b: *const BfBraid, out: *mut *mut c_char) -> BfStatus {
    guard(|| {
        put_string(
            out,
            to_json(serde_json::json!(normal_form(braid(b)?).map_err(status_of)?)),
        )
    })
}

/// Linking matrix as JSON.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_linking_json(b: *const BfBraid, out: *mut *mut c_char) -> BfStatus {
    guard(|| {
        put_string(
            out,
            to_json(serde_json::json!(
                linking_matrix(braid(b)?).map_err(status_of)?
            )),
        )
    })
}

/// Component count, Euler characteristic, linking multiset and Alexander
/// polynomial as JSON. Positive braids only.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_invariants_json(b: *const BfBraid, out: *mut *mut c_char) -> BfStatus {
    guard(|| {
        put_string(
            out,
            to_json(serde_json::json!(
                invariant_bundle(braid(b)?).map_err(status_of)?
            )),
        )
    })
}

/// Deletes the closure components with the given ids.
///
/// # Safety
/// `b` must be a live handle; `ids` must point to `n` readable values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_delete_components(
    b: *const BfBraid,
    ids: *const usize,
    n: usize,
    out: *mut *mut BfBraid,
) -> BfStatus {
    guard(|| {
        let w = braid(b)?;
        if ids.is_null() && n > 0 {
            return Err(fail(BfStatus::NullPointer, "null id array"));
        }
        let set: BTreeSet<usize> = if n == 0 {
            BTreeSet::new()
        } else {
            std::slice::from_raw_parts(ids, n).iter().copied().collect()
        };
        put_braid(out, delete_components(w, &set).map_err(status_of)?.braid)
    })
}

/// Adds the braid axis as a new last strand.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_adjoin_axis(b: *const BfBraid, out: *mut *mut BfBraid) -> BfStatus {
    guard(|| put_braid(out, adjoin_axis(braid(b)?).map_err(status_of)?))
}

/// Runs every verification pipeline on the default grid and writes the
/// JSON report; `all_passed` receives whether every check passed.
///
/// # Safety
/// `out` and `all_passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bf_verify_all_json(
    k_max: usize,
    out: *mut *mut c_char,
    all_passed: *mut bool,
) -> BfStatus {
    guard(|| {
        if all_passed.is_null() {
            return Err(fail(BfStatus::NullPointer, "null out-pointer"));
        }
        let report = verify_all(&VerifyConfig {
            k_max,
            ..VerifyConfig::default()
        });
        put_string(out, report.to_json())?;
        put(all_passed, report.all_passed())
    })
}
