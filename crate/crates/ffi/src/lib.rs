//! C interface to `delpezzo-core`.
//!
//! Every fallible function returns a [`DpStatus`]; on failure a message is
//! available from [`dp_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and must be released with
//! [`dp_string_free`]; Chow classes with [`dp_chow_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use delpezzo_core::chow::{parse_class, ChowClass};
use delpezzo_core::cohomology::{classify_line_bundle, cohom};
use delpezzo_core::report::{render_table, Format, TableName};
use delpezzo_core::variety::Variety;
use delpezzo_core::verify::{verify, Scope};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidVariety = 2,
    InvalidUtf8 = 3,
    ParseError = 4,
    InvalidArgument = 5,
    VarietyMismatch = 6,
    Overflow = 7,
    BufferTooSmall = 8,
    Panic = 99,
}

/// Variety codes accepted wherever a `variety` argument appears.
pub const DP_VARIETY_F: i32 = 0;
pub const DP_VARIETY_PHI: i32 = 1;

/// Opaque handle to an element of a Chow ring.
pub struct DpChowClass(ChowClass);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

type FfiResult = Result<(), (DpStatus, String)>;

fn guard(f: impl FnOnce() -> FfiResult) -> DpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DpStatus::Panic
        }
    }
}

fn variety_code(v: i32) -> Result<Variety, (DpStatus, String)> {
    match v {
        0 => Ok(Variety::F),
        1 => Ok(Variety::Phi),
        _ => Err((DpStatus::InvalidVariety, format!("unknown variety code {v}"))),
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), (DpStatus, String)> {
    if p.is_null() {
        Err((DpStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (DpStatus, String)> {
    non_null(p, what)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (DpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Last error message on this thread, or null. The pointer stays valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes `h^0 .. h^n` of `O(a1, a2)` to `out` (`n` = 3 on F, 4 on Phi) and
/// the count to `out_len`. `capacity` is the length of `out`.
///
/// # Safety
/// `out` must point to `capacity` writable values and `out_len` to one.
#[no_mangle]
pub unsafe extern "C" fn dp_cohom(
    variety: i32,
    a1: i64,
    a2: i64,
    out: *mut i64,
    capacity: usize,
    out_len: *mut usize,
) -> DpStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(out_len, "out_len")?;
        let t = cohom(variety_code(variety)?, a1, a2);
        *out_len = t.h.len();
        if capacity < t.h.len() {
            return Err((DpStatus::BufferTooSmall, format!("need {} entries", t.h.len())));
        }
        for (i, h) in t.h.iter().enumerate() {
            let x = i64::try_from(h.clone()).map_err(|_| (DpStatus::Overflow, format!("h^{i} = {h} exceeds i64")))?;
            *out.add(i) = x;
        }
        Ok(())
    })
}

/// Line-bundle flags of `O(a1, a2)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DpLineBundle {
    pub is_acm: bool,
    pub is_initialized: bool,
    pub is_ulrich: bool,
    pub initial_twist: i64,
}

/// # Safety
/// `out` must point to a writable `DpLineBundle`.
#[no_mangle]
pub unsafe extern "C" fn dp_line_bundle(variety: i32, a1: i64, a2: i64, out: *mut DpLineBundle) -> DpStatus {
    guard(|| {
        non_null(out, "out")?;
        let r = classify_line_bundle(variety_code(variety)?, a1, a2);
        *out = DpLineBundle {
            is_acm: r.is_acm,
            is_initialized: r.is_initialized,
            is_ulrich: r.is_ulrich,
            initial_twist: r.initial_twist,
        };
        Ok(())
    })
}

/// Parses a polynomial in `h1, h2, h` (F) or `eta1, eta2, eta` (Phi).
///
/// # Safety
/// `expr` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_parse(variety: i32, expr: *const c_char, out: *mut *mut DpChowClass) -> DpStatus {
    guard(|| {
        non_null(out, "out")?;
        let v = variety_code(variety)?;
        let s = read_str(expr, "expr")?;
        let c = parse_class(s, v).map_err(|e| (DpStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(DpChowClass(c)));
        Ok(())
    })
}

unsafe fn binary(
    a: *const DpChowClass,
    b: *const DpChowClass,
    out: *mut *mut DpChowClass,
    op: fn(&ChowClass, &ChowClass) -> Result<ChowClass, delpezzo_core::chow::ChowError>,
) -> DpStatus {
    guard(|| {
        non_null(a, "a")?;
        non_null(b, "b")?;
        non_null(out, "out")?;
        let c = op(&(*a).0, &(*b).0).map_err(|e| (DpStatus::VarietyMismatch, e.to_string()))?;
        *out = Box::into_raw(Box::new(DpChowClass(c)));
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_add(
    a: *const DpChowClass,
    b: *const DpChowClass,
    out: *mut *mut DpChowClass,
) -> DpStatus {
    binary(a, b, out, ChowClass::try_add)
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_mul(
    a: *const DpChowClass,
    b: *const DpChowClass,
    out: *mut *mut DpChowClass,
) -> DpStatus {
    binary(a, b, out, ChowClass::try_mul)
}

/// Coefficient of the point class.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_degree(c: *const DpChowClass, out: *mut i64) -> DpStatus {
    guard(|| {
        non_null(c, "c")?;
        non_null(out, "out")?;
        let d = (*c)
            .0
            .degree()
            .map_err(|e| (DpStatus::InvalidArgument, e.to_string()))?;
        *out = i64::try_from(d.clone()).map_err(|_| (DpStatus::Overflow, format!("degree {d} exceeds i64")))?;
        Ok(())
    })
}

/// Normal form as text, e.g. `h1^2 - h2^2`.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_to_string(c: *const DpChowClass, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        non_null(c, "c")?;
        non_null(out, "out")?;
        *out = to_c((*c).0.to_string());
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dp_chow_free(c: *mut DpChowClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Renders a classification table; `name` as accepted by the CLI and
/// `format` one of `json`, `csv`, `markdown`.
///
/// # Safety
/// `name` and `format` must be nul-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dp_table(name: *const c_char, format: *const c_char, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        non_null(out, "out")?;
        let name: TableName = read_str(name, "name")?
            .parse()
            .map_err(|e: delpezzo_core::report::ReportError| (DpStatus::InvalidArgument, e.to_string()))?;
        let format: Format = read_str(format, "format")?
            .parse()
            .map_err(|e| (DpStatus::InvalidArgument, e))?;
        let text = render_table(name, format).map_err(|e| (DpStatus::InvalidArgument, e.to_string()))?;
        *out = to_c(text);
        Ok(())
    })
}

/// Runs the checks in `scope` (`all`, `cohomology`, `chern`, `classify`).
/// `passed` receives the overall verdict; `report`, when not null, the
/// JSON report.
///
/// # Safety
/// `scope` must be a nul-terminated string, `passed` writable, `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn dp_verify(scope: *const c_char, passed: *mut bool, report: *mut *mut c_char) -> DpStatus {
    guard(|| {
        non_null(passed, "passed")?;
        let scope: Scope = read_str(scope, "scope")?
            .parse()
            .map_err(|e| (DpStatus::InvalidArgument, e))?;
        let r = verify(scope);
        *passed = r.overall;
        if !report.is_null() {
            *report = to_c(delpezzo_core::json::to_pretty(&r));
        }
        Ok(())
    })
}
