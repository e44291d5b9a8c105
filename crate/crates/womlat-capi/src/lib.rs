//! C ABI for the lattice workbench.
//!
//! The API hands out an opaque `WomlatHandle` wrapping one parsed `.lat`
//! document (lattice plus optional `'`, `->` and `*` tables). Every
//! function is null-safe; results and error messages come back as
//! heap-allocated C strings that the caller releases with
//! `womlat_string_free`.
//!
//! Status convention mirrors the CLI exit codes: `Ok` means the operation
//! succeeded (and for checks, the property holds), `PropertyFails` means
//! the check ran and found a counterexample (the report JSON carries the
//! witness), anything else is an error and the out-string holds a message
//! instead of JSON.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use womlat::fixtures::fixture;
use womlat::io::{to_dot, LatFile};
use womlat::term::{self, EvalContext};
use womlat::workbench::{self, WorkbenchError};
use womlat::{implication, measures, residuation};

/// Opaque handle over a parsed lattice document.
pub struct WomlatHandle {
    file: LatFile,
}

/// Result codes for all fallible entry points.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WomlatStatus {
    /// Success; for checks this means the property holds.
    Ok = 0,
    /// The check ran and the property fails; see the report for a witness.
    PropertyFails = 1,
    /// Null pointer, unknown name, non-UTF-8 input, or missing table.
    InvalidArgument = 2,
    /// The input text does not parse.
    ParseError = 3,
    /// Term evaluation failed (unbound variable, missing operation, ...).
    EvalError = 4,
    /// A theorem precondition does not hold for this algebra.
    PreconditionViolated = 5,
    /// The operation would exceed a size or work cap.
    CapExceeded = 6,
}

fn leak_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes replaced")
        .into_raw()
}

unsafe fn write_out(out: *mut *mut c_char, s: String) {
    if !out.is_null() {
        *out = leak_string(s);
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn status_of(err: &WorkbenchError) -> WomlatStatus {
    match err {
        WorkbenchError::UnknownProperty(_)
        | WorkbenchError::UnknownTheorem(_)
        | WorkbenchError::MissingUnary
        | WorkbenchError::Algebra(_) => WomlatStatus::InvalidArgument,
        WorkbenchError::Implication(e) => match e {
            implication::ImplicationError::CapExceeded { .. } => WomlatStatus::CapExceeded,
            _ => WomlatStatus::PreconditionViolated,
        },
        WorkbenchError::Residuation(e) => match e {
            residuation::ResiduationError::PreconditionViolated(_)
            | residuation::ResiduationError::NoBounds => WomlatStatus::PreconditionViolated,
            residuation::ResiduationError::InvariantFailed(_) => WomlatStatus::PropertyFails,
        },
        WorkbenchError::Measure(e) => match e {
            measures::MeasureError::NoTop | measures::MeasureError::PreconditionViolated(_) => {
                WomlatStatus::PreconditionViolated
            }
            _ => WomlatStatus::InvalidArgument,
        },
    }
}

/// Parses `.lat` text into a handle. Returns null on failure and, when
/// `err_out` is non-null, stores the error message there.
///
/// # Safety
/// `text` must be null or point to a NUL-terminated string; `err_out` must
/// be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn womlat_parse(
    text: *const c_char,
    err_out: *mut *mut c_char,
) -> *mut WomlatHandle {
    let Some(text) = read_str(text) else {
        write_out(err_out, "text must be valid UTF-8 and non-null".into());
        return ptr::null_mut();
    };
    match LatFile::parse(text) {
        Ok(file) => Box::into_raw(Box::new(WomlatHandle { file })),
        Err(e) => {
            write_out(err_out, e.to_string());
            ptr::null_mut()
        }
    }
}

/// Loads a built-in fixture (`M3A`, `M3B`, `FIG2`, `C2`, `C3`, `C4`, `B4`,
/// `B8`) into a handle. Returns null on failure as for `womlat_parse`.
///
/// # Safety
/// As for `womlat_parse`.
#[no_mangle]
pub unsafe extern "C" fn womlat_fixture(
    name: *const c_char,
    err_out: *mut *mut c_char,
) -> *mut WomlatHandle {
    let Some(name) = read_str(name) else {
        write_out(err_out, "name must be valid UTF-8 and non-null".into());
        return ptr::null_mut();
    };
    match fixture(name) {
        Ok(a) => Box::into_raw(Box::new(WomlatHandle { file: LatFile::from_algebra(&a) })),
        Err(e) => {
            write_out(err_out, e.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer previously returned by this library
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn womlat_handle_free(handle: *mut WomlatHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string previously returned by this library that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn womlat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of lattice elements, or -1 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn womlat_element_count(handle: *const WomlatHandle) -> i64 {
    match handle.as_ref() {
        Some(h) => h.file.lattice.size() as i64,
        None => -1,
    }
}

/// Label of element `index`, or null when out of range.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn womlat_element_name(
    handle: *const WomlatHandle,
    index: u64,
) -> *mut c_char {
    let Some(h) = handle.as_ref() else {
        return ptr::null_mut();
    };
    if (index as usize) < h.file.lattice.size() {
        leak_string(h.file.lattice.name(index as usize).to_string())
    } else {
        ptr::null_mut()
    }
}

unsafe fn run_report(
    handle: *const WomlatHandle,
    name: *const c_char,
    out: *mut *mut c_char,
    run: impl FnOnce(&LatFile, &str) -> Result<womlat::algebra::CheckReport, WorkbenchError>,
) -> WomlatStatus {
    let Some(h) = handle.as_ref() else {
        write_out(out, "null handle".into());
        return WomlatStatus::InvalidArgument;
    };
    let Some(name) = read_str(name) else {
        write_out(out, "name must be valid UTF-8 and non-null".into());
        return WomlatStatus::InvalidArgument;
    };
    match run(&h.file, name) {
        Ok(report) => {
            write_out(out, serde_json::to_string(&report).expect("reports serialize"));
            if report.holds {
                WomlatStatus::Ok
            } else {
                WomlatStatus::PropertyFails
            }
        }
        Err(e) => {
            let status = status_of(&e);
            write_out(out, e.to_string());
            status
        }
    }
}

/// Runs a built-in property check (`wom`, `dwom`, `dnl`, `wdnl`, `comp`,
/// `ortho`, `om`, `demorgan`, `antitone`, `involution`, `lemma-bounds`).
/// On `Ok`/`PropertyFails` the out-string is the report as JSON.
///
/// # Safety
/// Pointer arguments must be null or valid as documented on
/// `womlat_parse`.
#[no_mangle]
pub unsafe extern "C" fn womlat_check(
    handle: *const WomlatHandle,
    property: *const c_char,
    report_json_out: *mut *mut c_char,
) -> WomlatStatus {
    run_report(handle, property, report_json_out, workbench::check_property)
}

/// Runs a theorem verification (`d-bijection`, `family-bijection`,
/// `w-bijection`, `sasaki`, `half-adjunction`, `weak-dnl-residuation`,
/// `residuation`, `converse`, `measures`, `d-properties`, `w-properties`).
///
/// # Safety
/// As for `womlat_check`.
#[no_mangle]
pub unsafe extern "C" fn womlat_verify(
    handle: *const WomlatHandle,
    theorem: *const c_char,
    report_json_out: *mut *mut c_char,
) -> WomlatStatus {
    run_report(handle, theorem, report_json_out, workbench::verify_theorem)
}

/// Checks a formula of the term language against the handle's tables.
///
/// # Safety
/// As for `womlat_check`.
#[no_mangle]
pub unsafe extern "C" fn womlat_holds(
    handle: *const WomlatHandle,
    formula: *const c_char,
    report_json_out: *mut *mut c_char,
) -> WomlatStatus {
    let Some(h) = handle.as_ref() else {
        write_out(report_json_out, "null handle".into());
        return WomlatStatus::InvalidArgument;
    };
    let Some(text) = read_str(formula) else {
        write_out(report_json_out, "formula must be valid UTF-8 and non-null".into());
        return WomlatStatus::InvalidArgument;
    };
    let parsed = match term::parse_formula(text) {
        Ok(f) => f,
        Err(e) => {
            write_out(report_json_out, e.to_string());
            return WomlatStatus::ParseError;
        }
    };
    let ctx = EvalContext {
        lattice: &h.file.lattice,
        comp: h.file.comp.as_deref(),
        arrow: h.file.arrow.as_deref(),
        prod: h.file.prod.as_deref(),
    };
    match term::holds(&parsed, &ctx) {
        Ok(report) => {
            write_out(
                report_json_out,
                serde_json::to_string(&report).expect("reports serialize"),
            );
            if report.holds {
                WomlatStatus::Ok
            } else {
                WomlatStatus::PropertyFails
            }
        }
        Err(e) => {
            write_out(report_json_out, e.to_string());
            WomlatStatus::EvalError
        }
    }
}

/// Evaluates a term under an assignment like `x=a,y=b` and stores the
/// resulting element label.
///
/// # Safety
/// As for `womlat_check`.
#[no_mangle]
pub unsafe extern "C" fn womlat_eval(
    handle: *const WomlatHandle,
    term_text: *const c_char,
    assignment: *const c_char,
    label_out: *mut *mut c_char,
) -> WomlatStatus {
    let Some(h) = handle.as_ref() else {
        write_out(label_out, "null handle".into());
        return WomlatStatus::InvalidArgument;
    };
    let Some(text) = read_str(term_text) else {
        write_out(label_out, "term must be valid UTF-8 and non-null".into());
        return WomlatStatus::InvalidArgument;
    };
    let parsed = match term::parse_term(text) {
        Ok(t) => t,
        Err(e) => {
            write_out(label_out, e.to_string());
            return WomlatStatus::ParseError;
        }
    };
    let mut vars = Vec::new();
    let mut vals = Vec::new();
    if !assignment.is_null() {
        let Some(assignment) = read_str(assignment) else {
            write_out(label_out, "assignment must be valid UTF-8".into());
            return WomlatStatus::InvalidArgument;
        };
        for binding in assignment.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((var, label)) = binding.split_once('=') else {
                write_out(label_out, format!("binding `{binding}` is not of the form x=a"));
                return WomlatStatus::InvalidArgument;
            };
            let Some(id) = h.file.lattice.element(label.trim()) else {
                write_out(label_out, format!("unknown element label `{}`", label.trim()));
                return WomlatStatus::InvalidArgument;
            };
            vars.push(var.trim().to_string());
            vals.push(id);
        }
    }
    let ctx = EvalContext {
        lattice: &h.file.lattice,
        comp: h.file.comp.as_deref(),
        arrow: h.file.arrow.as_deref(),
        prod: h.file.prod.as_deref(),
    };
    match parsed.eval(&ctx, &vars, &vals) {
        Ok(result) => {
            write_out(label_out, h.file.lattice.name(result).to_string());
            WomlatStatus::Ok
        }
        Err(e) => {
            write_out(label_out, e.to_string());
            WomlatStatus::EvalError
        }
    }
}

/// Serializes the handle back to `.lat` text.
///
/// # Safety
/// As for `womlat_check`.
#[no_mangle]
pub unsafe extern "C" fn womlat_to_text(
    handle: *const WomlatHandle,
    text_out: *mut *mut c_char,
) -> WomlatStatus {
    let Some(h) = handle.as_ref() else {
        write_out(text_out, "null handle".into());
        return WomlatStatus::InvalidArgument;
    };
    write_out(text_out, h.file.to_text());
    WomlatStatus::Ok
}

/// Stores the Hasse diagram as DOT text.
///
/// # Safety
/// As for `womlat_check`.
#[no_mangle]
pub unsafe extern "C" fn womlat_dot(
    handle: *const WomlatHandle,
    dot_out: *mut *mut c_char,
) -> WomlatStatus {
    let Some(h) = handle.as_ref() else {
        write_out(dot_out, "null handle".into());
        return WomlatStatus::InvalidArgument;
    };
    write_out(dot_out, to_dot(&h.file.lattice));
    WomlatStatus::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn take(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
        womlat_string_free(s);
        owned
    }

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn fixture_check_and_verify_roundtrip() {
        unsafe {
            let mut err = ptr::null_mut();
            let h = womlat_fixture(cstr("FIG2").as_ptr(), &mut err);
            assert!(!h.is_null());
            assert_eq!(womlat_element_count(h), 10);
            let name = womlat_element_name(h, 0);
            assert_eq!(take(name), "0");
            assert!(womlat_element_name(h, 10).is_null());

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_check(h, cstr("wom").as_ptr(), &mut out),
                WomlatStatus::Ok
            );
            let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(report["holds"], true);

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_check(h, cstr("om").as_ptr(), &mut out),
                WomlatStatus::PropertyFails
            );
            let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(report["witness"][0][1], "a");
            assert_eq!(report["witness"][1][1], "f");

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_verify(h, cstr("residuation").as_ptr(), &mut out),
                WomlatStatus::Ok
            );
            womlat_string_free(out);

            womlat_handle_free(h);
        }
    }

    #[test]
    fn parse_holds_eval() {
        let text = "[elements] 0 a b c 1\n[covers] 0 a ; 0 b ; 0 c ; a 1 ; b 1 ; c 1\n[unary '] 0:1 a:b b:c c:b 1:0\n";
        unsafe {
            let mut err = ptr::null_mut();
            let h = womlat_parse(cstr(text).as_ptr(), &mut err);
            assert!(!h.is_null());

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_holds(h, cstr("(x')' = x").as_ptr(), &mut out),
                WomlatStatus::PropertyFails
            );
            let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(report["witness"][0][1], "a");

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_eval(h, cstr("(x \\/ y)'").as_ptr(), cstr("x=a,y=0").as_ptr(), &mut out),
                WomlatStatus::Ok
            );
            assert_eq!(take(out), "b");

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_eval(h, cstr("x -> y").as_ptr(), cstr("x=a,y=0").as_ptr(), &mut out),
                WomlatStatus::EvalError
            );
            womlat_string_free(out);

            let mut out = ptr::null_mut();
            assert_eq!(womlat_dot(h, &mut out), WomlatStatus::Ok);
            assert!(take(out).starts_with("digraph lattice {"));

            let mut out = ptr::null_mut();
            assert_eq!(womlat_to_text(h, &mut out), WomlatStatus::Ok);
            assert!(take(out).contains("[unary ']"));

            womlat_handle_free(h);
        }
    }

    #[test]
    fn error_statuses() {
        unsafe {
            let mut err = ptr::null_mut();
            let h = womlat_parse(cstr("[elements] a a").as_ptr(), &mut err);
            assert!(h.is_null());
            assert!(take(err).contains("duplicate"));

            let mut err = ptr::null_mut();
            let h = womlat_fixture(cstr("M5").as_ptr(), &mut err);
            assert!(h.is_null());
            assert!(take(err).contains("unknown fixture"));

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_check(ptr::null(), cstr("wom").as_ptr(), &mut out),
                WomlatStatus::InvalidArgument
            );
            womlat_string_free(out);

            assert_eq!(womlat_element_count(ptr::null()), -1);

            // no unary table: invalid-argument style usage error
            let text = "[elements] 0 1\n[covers] 0 1\n";
            let h = womlat_parse(cstr(text).as_ptr(), ptr::null_mut());
            assert!(!h.is_null());
            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_check(h, cstr("wom").as_ptr(), &mut out),
                WomlatStatus::InvalidArgument
            );
            womlat_string_free(out);

            // M3B lacks double negation: sasaki verification is a
            // precondition violation
            let mut out = ptr::null_mut();
            let m3b = womlat_fixture(cstr("M3B").as_ptr(), ptr::null_mut());
            assert_eq!(
                womlat_verify(m3b, cstr("sasaki").as_ptr(), &mut out),
                WomlatStatus::PreconditionViolated
            );
            womlat_string_free(out);

            // FIG2 exceeds the family-bijection cap
            let mut out = ptr::null_mut();
            let fig2 = womlat_fixture(cstr("FIG2").as_ptr(), ptr::null_mut());
            assert_eq!(
                womlat_verify(fig2, cstr("family-bijection").as_ptr(), &mut out),
                WomlatStatus::CapExceeded
            );
            womlat_string_free(out);

            let mut out = ptr::null_mut();
            assert_eq!(
                womlat_holds(h, cstr("x \\/").as_ptr(), &mut out),
                WomlatStatus::ParseError
            );
            womlat_string_free(out);

            womlat_handle_free(h);
            womlat_handle_free(m3b);
            womlat_handle_free(fig2);
        }
    }
}
