//! C ABI for `wreath-lab`.
//!
//! Families and `H̃` elements are opaque heap handles created and released
//! by this library. Every fallible call returns a [`WlStatus`]; on failure
//! the message is available from [`wl_last_error`] on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`wl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wreath_lab::algorithms::{geodesic_length, membership, sign_l2, Budget, MembershipTarget};
use wreath_lab::config::FamilyConfig;
use wreath_lab::groups::Family;
use wreath_lab::orders::OrderSign;
use wreath_lab::wreath::{
    embed, embed_global, expand, l2_collect, l2_equal, l2_is_trivial, HWord, Level2Element,
};
use wreath_lab::{Error, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed word, JSON or configuration, or an index out of range.
    InvalidInput = 2,
    /// A search ran out of its state budget; no answer was computed.
    Budget = 3,
    Unsupported = 4,
    /// An infinite family whose torsion policy cannot settle the question.
    Undecidable = 5,
    Panic = 6,
}

pub struct WlFamily {
    inner: Family,
}

pub struct WlElement {
    inner: Level2Element,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WlStatus {
    match e {
        _ if e.is_budget() => WlStatus::Budget,
        Error::Unsupported(_) => WlStatus::Unsupported,
        Error::Undecidable(_) => WlStatus::Undecidable,
        _ => WlStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (WlStatus, String)>) -> WlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            WlStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (WlStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (WlStatus, String) {
    (WlStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (WlStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (WlStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn out_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior NUL").into_raw();
}

fn budget(max_states: usize) -> Budget {
    if max_states == 0 {
        Budget::default()
    } else {
        Budget::with_states(max_states)
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a finite family from a configuration document such as
/// `{"groups":[{"name":"integers"}]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_family_from_json(
    json: *const c_char,
    out: *mut *mut WlFamily,
) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let fam = FamilyConfig::from_json(text)
            .and_then(|c| c.build())
            .map_err(lib_err)?;
        *out = Box::into_raw(Box::new(WlFamily { inner: fam }));
        Ok(())
    })
}

/// # Safety
/// `fam` must be NULL or a handle from [`wl_family_from_json`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wl_family_free(fam: *mut WlFamily) {
    if !fam.is_null() {
        drop(Box::from_raw(fam));
    }
}

/// Parses a word over `s, F`: token form (`"F s F^-1 s^-1"`) when `compact`
/// is false, one letter per character from `s S f F` otherwise.
///
/// # Safety
/// `word` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_element_parse(
    word: *const c_char,
    compact: bool,
    out: *mut *mut WlElement,
) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(word, "word")?;
        let w = if compact {
            HWord::parse_compact(text)
        } else {
            text.parse()
        }
        .map_err(lib_err)?;
        *out = Box::into_raw(Box::new(WlElement {
            inner: l2_collect(&w),
        }));
        Ok(())
    })
}

/// Reads the JSON form `{"factors":[[shift,sign],...],"sExp":n}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_element_from_json(
    json: *const c_char,
    out: *mut *mut WlElement,
) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let e: Level2Element =
            serde_json::from_str(text).map_err(|e| (WlStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(WlElement { inner: e }));
        Ok(())
    })
}

/// `Ψ(word)`. With `group = 0` the word uses the global generators of `G`;
/// otherwise it is a word over the generators of `G_group`.
///
/// # Safety
/// `fam` must be a live handle, `word` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_embed(
    fam: *const WlFamily,
    group: usize,
    word: *const c_char,
    out: *mut *mut WlElement,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let w: Word = read_str(word, "word")?.parse().map_err(lib_err)?;
        let e = if group == 0 {
            embed_global(&fam.inner, &w)
        } else {
            embed(&fam.inner, group, &w)
        }
        .map_err(lib_err)?;
        *out = Box::into_raw(Box::new(WlElement { inner: e }));
        Ok(())
    })
}

/// # Safety
/// `e` must be NULL or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn wl_element_free(e: *mut WlElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// `*out = a · b` as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_element_mul(
    a: *const WlElement,
    b: *const WlElement,
    out: *mut *mut WlElement,
) -> WlStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(WlElement {
            inner: a.inner.mul(&b.inner),
        }));
        Ok(())
    })
}

/// JSON form of the collected element.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_element_to_json(
    e: *const WlElement,
    out: *mut *mut c_char,
) -> WlStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(
            out,
            serde_json::to_string(&e.inner).expect("element serializes"),
        );
        Ok(())
    })
}

/// Token-form letter expansion of the collected element.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_element_to_word(
    e: *const WlElement,
    out: *mut *mut c_char,
) -> WlStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(out, expand(&e.inner).to_string());
        Ok(())
    })
}

/// Word problem of `H̃`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_is_trivial(
    fam: *const WlFamily,
    e: *const WlElement,
    out: *mut bool,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = l2_is_trivial(&e.inner, &fam.inner).map_err(lib_err)?;
        Ok(())
    })
}

/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_equal(
    fam: *const WlFamily,
    a: *const WlElement,
    b: *const WlElement,
    out: *mut bool,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = l2_equal(&a.inner, &b.inner, &fam.inner).map_err(lib_err)?;
        Ok(())
    })
}

/// Sign in the left-order of `H̃`: -1, 0 or 1.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_sign(
    fam: *const WlFamily,
    e: *const WlElement,
    out: *mut i32,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = match sign_l2(&e.inner, &fam.inner).map_err(lib_err)? {
            OrderSign::Negative => -1,
            OrderSign::Zero => 0,
            OrderSign::Positive => 1,
        };
        Ok(())
    })
}

/// Membership in `Ψ(G_group)` (`group = 0`: in `Ψ(G)`). On success
/// `*is_member` is set, and for members `*preimage` receives the canonical
/// preimage word (otherwise it is set to NULL). `max_states = 0` selects the
/// default budget.
///
/// # Safety
/// Handles must be live; `is_member` and `preimage` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_membership(
    fam: *const WlFamily,
    group: usize,
    e: *const WlElement,
    max_states: usize,
    is_member: *mut bool,
    preimage: *mut *mut c_char,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        let is_member = is_member.as_mut().ok_or_else(|| null("is_member"))?;
        if preimage.is_null() {
            return Err(null("preimage"));
        }
        let target = if group == 0 {
            MembershipTarget::Whole
        } else {
            MembershipTarget::Component(group)
        };
        let found =
            membership(&fam.inner, target, &e.inner, &budget(max_states)).map_err(lib_err)?;
        *is_member = found.is_some();
        match found {
            Some(w) => out_string(preimage, w.to_string()),
            None => *preimage = ptr::null_mut(),
        }
        Ok(())
    })
}

/// Word length of `e` over `{s, F}`: `*out` is the length, or -1 when it
/// exceeds `cap`. Returns `WL_STATUS_BUDGET` when `max_states` (0 = default)
/// is too small to decide.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_geodesic_length(
    fam: *const WlFamily,
    e: *const WlElement,
    cap: u32,
    max_states: usize,
    out: *mut i64,
) -> WlStatus {
    guard(|| {
        let fam = fam.as_ref().ok_or_else(|| null("fam"))?;
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let len =
            geodesic_length(&e.inner, &fam.inner, cap, &budget(max_states)).map_err(lib_err)?;
        *out = len.map_or(-1, i64::from);
        Ok(())
    })
}
