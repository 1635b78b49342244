//! C ABI over the `ltlf` crate.
//!
//! Formulae and traces cross the boundary as opaque handles. Every
//! fallible function returns an [`LtlfStatus`]; on failure a message is
//! available from [`ltlf_last_error`] on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! must be released with [`ltlf_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ltlf::semantics::{self, SemanticsError};
use ltlf::{Formula, Trace};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlfStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    TraceError = 4,
    PositionOutOfRange = 5,
    Panic = 6,
}

/// Opaque parsed formula.
pub struct LtlfFormula(Formula);

/// Opaque non-empty finite trace.
pub struct LtlfTrace(Trace);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(LtlfStatus, String);

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> LtlfStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LtlfStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            LtlfStatus::Panic
        }
    }
}

fn null(name: &str) -> Failure {
    Failure(LtlfStatus::NullArgument, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(LtlfStatus::InvalidUtf8, format!("{name}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("rendered text has no nul")
        .into_raw()
}

fn trace_failure(e: SemanticsError) -> Failure {
    let status = match e {
        SemanticsError::PositionOutOfRange { .. } => LtlfStatus::PositionOutOfRange,
        _ => LtlfStatus::TraceError,
    };
    Failure(status, e.to_string())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ltlf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ltlf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` into a new formula handle stored in `*out`.
///
/// # Safety
/// `text` must be null or a nul-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ltlf_formula_parse(
    text: *const c_char,
    out: *mut *mut LtlfFormula,
) -> LtlfStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(text, "text")?;
        let f = ltlf::parse(text).map_err(|e| Failure(LtlfStatus::ParseError, e.to_string()))?;
        out.write(Box::into_raw(Box::new(LtlfFormula(f))));
        Ok(())
    })
}

/// Releases a formula handle. Null is ignored.
///
/// # Safety
/// `f` must be null or a handle from [`ltlf_formula_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ltlf_formula_free(f: *mut LtlfFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Renders the formula's core form; free the result with [`ltlf_string_free`].
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ltlf_formula_render(
    f: *const LtlfFormula,
    out: *mut *mut c_char,
) -> LtlfStatus {
    guarded(|| {
        let f = deref(f, "formula")?;
        write_out(out, owned_string(ltlf::render(&f.0)), "out")
    })
}

/// Decides satisfiability. On success `*out_sat` holds the verdict and,
/// when `out_witness` is non-null, `*out_witness` receives the shortest
/// witness as JSON (null when unsatisfiable).
///
/// # Safety
/// `f` must be null or a live handle; `out_sat` must be null or writable;
/// `out_witness` may be null, otherwise writable.
#[no_mangle]
pub unsafe extern "C" fn ltlf_decide_sat(
    f: *const LtlfFormula,
    out_sat: *mut bool,
    out_witness: *mut *mut c_char,
) -> LtlfStatus {
    guarded(|| {
        let f = deref(f, "formula")?;
        if out_sat.is_null() {
            return Err(null("out_sat"));
        }
        let verdict = ltlf::decide_sat(&f.0).verdict;
        out_sat.write(verdict.is_sat());
        if !out_witness.is_null() {
            out_witness.write(
                verdict
                    .witness()
                    .map_or(ptr::null_mut(), |t| owned_string(t.to_json())),
            );
        }
        Ok(())
    })
}

/// Decides validity at every position. On success `*out_valid` holds the
/// verdict and, when `out_countermodel` is non-null, it receives a
/// countermodel as JSON (null when valid).
///
/// # Safety
/// As for [`ltlf_decide_sat`].
#[no_mangle]
pub unsafe extern "C" fn ltlf_decide_valid(
    f: *const LtlfFormula,
    out_valid: *mut bool,
    out_countermodel: *mut *mut c_char,
) -> LtlfStatus {
    guarded(|| {
        let f = deref(f, "formula")?;
        if out_valid.is_null() {
            return Err(null("out_valid"));
        }
        let verdict = ltlf::decide_valid(&f.0).verdict;
        out_valid.write(verdict.is_valid());
        if !out_countermodel.is_null() {
            out_countermodel.write(
                verdict
                    .countermodel()
                    .map_or(ptr::null_mut(), |t| owned_string(t.to_json())),
            );
        }
        Ok(())
    })
}

/// Parses a trace from JSON: a non-empty array of arrays of variable names.
///
/// # Safety
/// `json` must be null or a nul-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ltlf_trace_parse(
    json: *const c_char,
    out: *mut *mut LtlfTrace,
) -> LtlfStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let t = Trace::from_json(text).map_err(trace_failure)?;
        out.write(Box::into_raw(Box::new(LtlfTrace(t))));
        Ok(())
    })
}

/// Releases a trace handle. Null is ignored.
///
/// # Safety
/// `t` must be null or a handle from [`ltlf_trace_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ltlf_trace_free(t: *mut LtlfTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of states in the trace; 0 for null.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlf_trace_len(t: *const LtlfTrace) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Evaluates `f` at the 1-based `position` of `t`.
///
/// # Safety
/// `t` and `f` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ltlf_eval(
    t: *const LtlfTrace,
    f: *const LtlfFormula,
    position: usize,
    out: *mut bool,
) -> LtlfStatus {
    guarded(|| {
        let t = deref(t, "trace")?;
        let f = deref(f, "formula")?;
        let value = semantics::eval(&t.0, position, &f.0).map_err(trace_failure)?;
        write_out(out, value, "out")
    })
}

/// Whether `f` holds at every position of `t`.
///
/// # Safety
/// As for [`ltlf_eval`].
#[no_mangle]
pub unsafe extern "C" fn ltlf_satisfies(
    t: *const LtlfTrace,
    f: *const LtlfFormula,
    out: *mut bool,
) -> LtlfStatus {
    guarded(|| {
        let t = deref(t, "trace")?;
        let f = deref(f, "formula")?;
        write_out(out, semantics::satisfies(&t.0, &f.0), "out")
    })
}
