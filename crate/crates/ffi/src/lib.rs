//! C ABI over `octolab`.
//!
//! Values cross the boundary as opaque heap handles that the caller releases
//! with the matching `*_free` function. Every call returns an
//! [`OctolabStatus`]; on a non-`OK` status, `octolab_last_error` gives a
//! message for the calling thread. Rationals are exchanged as `int64_t`
//! numerator/denominator pairs; values that do not fit report
//! `OCTOLAB_STATUS_OVERFLOW`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use octolab::algebra::{format_octonion, parse_octonion, Octonion};
use octolab::verify::{run_verification, Format};
use octolab::xproduct::{torsion_tensor, TorsionTensor, UnitPoint};
use octolab::{Error, Rational};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OctolabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Normalization = 5,
    Degenerate = 6,
    Internal = 7,
    NoMatch = 8,
    Overflow = 9,
    Panic = 10,
}

/// An exact octonion.
pub struct OctolabOctonion(Octonion);

/// Torsion structure constants at a unit octonion.
pub struct OctolabTorsion(TorsionTensor);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn from_error(e: Error) -> OctolabStatus {
    let status = match e {
        Error::Parse { .. } => OctolabStatus::Parse,
        Error::Domain(_) => OctolabStatus::Domain,
        Error::Normalization(_) => OctolabStatus::Normalization,
        Error::Degenerate(_) => OctolabStatus::Degenerate,
        _ => OctolabStatus::Internal,
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> Result<(), OctolabStatus> + UnwindSafe) -> OctolabStatus {
    set_error("");
    match catch_unwind(f) {
        Ok(Ok(())) => OctolabStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside octolab");
            OctolabStatus::Panic
        }
    }
}

fn null(what: &str) -> OctolabStatus {
    set_error(format!("null pointer: {what}"));
    OctolabStatus::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, OctolabStatus> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        OctolabStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, OctolabStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), OctolabStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), OctolabStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).expect("library output has no nul bytes").into_raw();
    Ok(())
}

unsafe fn store_rational(r: Rational, num: *mut i64, den: *mut i64) -> Result<(), OctolabStatus> {
    if num.is_null() || den.is_null() {
        return Err(null("num/den"));
    }
    match (i64::try_from(r.numer()), i64::try_from(r.denom())) {
        (Ok(n), Ok(d)) => {
            *num = n;
            *den = d;
            Ok(())
        }
        _ => {
            set_error(format!("{r} does not fit in 64 bits"));
            Err(OctolabStatus::Overflow)
        }
    }
}

/// Message for the last non-`OK` status on this thread; empty after success.
/// The pointer stays valid until the next octolab call on the same thread.
#[no_mangle]
pub extern "C" fn octolab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a literal such as `3/5+4/5e4`.
///
/// # Safety
/// `literal` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_parse(
    literal: *const c_char,
    out: *mut *mut OctolabOctonion,
) -> OctolabStatus {
    guard(|| {
        let s = read_str(literal)?;
        let x = parse_octonion(s).map_err(from_error)?;
        store(out, OctolabOctonion(x))
    })
}

/// Builds `sum (num[k]/den[k]) e_k` from eight numerator/denominator pairs.
///
/// # Safety
/// `num` and `den` must each point to 8 readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_from_ratios(
    num: *const i64,
    den: *const i64,
    out: *mut *mut OctolabOctonion,
) -> OctolabStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("num/den"));
        }
        let (n, d) = (std::slice::from_raw_parts(num, 8), std::slice::from_raw_parts(den, 8));
        if let Some(k) = d.iter().position(|v| *v == 0) {
            set_error(format!("zero denominator in component {k}"));
            return Err(OctolabStatus::Domain);
        }
        let coeffs = std::array::from_fn(|k| Rational::new(n[k].into(), d[k].into()));
        store(out, OctolabOctonion(Octonion::new(coeffs)))
    })
}

/// # Safety
/// `x` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_free(x: *mut OctolabOctonion) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_multiply(
    a: *const OctolabOctonion,
    b: *const OctolabOctonion,
    out: *mut *mut OctolabOctonion,
) -> OctolabStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        store(out, OctolabOctonion(a.0.multiply(&b.0)))
    })
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_conjugate(
    x: *const OctolabOctonion,
    out: *mut *mut OctolabOctonion,
) -> OctolabStatus {
    guard(|| {
        let x = deref(x, "x")?;
        store(out, OctolabOctonion(x.0.conjugate()))
    })
}

/// `(xy)z - x(yz)`.
///
/// # Safety
/// `x`, `y`, `z` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_associator(
    x: *const OctolabOctonion,
    y: *const OctolabOctonion,
    z: *const OctolabOctonion,
    out: *mut *mut OctolabOctonion,
) -> OctolabStatus {
    guard(|| {
        let (x, y, z) = (deref(x, "x")?, deref(y, "y")?, deref(z, "z")?);
        store(out, OctolabOctonion(Octonion::associator(&x.0, &y.0, &z.0)))
    })
}

/// Squared norm.
///
/// # Safety
/// `x` must be a live handle; `num`, `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_norm(
    x: *const OctolabOctonion,
    num: *mut i64,
    den: *mut i64,
) -> OctolabStatus {
    guard(|| store_rational(deref(x, "x")?.0.norm(), num, den))
}

/// Coefficient of `e_index` (`index` 0..=7).
///
/// # Safety
/// `x` must be a live handle; `num`, `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_coefficient(
    x: *const OctolabOctonion,
    index: usize,
    num: *mut i64,
    den: *mut i64,
) -> OctolabStatus {
    guard(|| {
        let x = deref(x, "x")?;
        let c = *x.0.coeffs().get(index).ok_or_else(|| {
            set_error(format!("index {index} outside 0..=7"));
            OctolabStatus::Domain
        })?;
        store_rational(c, num, den)
    })
}

/// Canonical literal; release with `octolab_string_free`.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_octonion_format(x: *const OctolabOctonion, out: *mut *mut c_char) -> OctolabStatus {
    guard(|| store_string(out, format_octonion(&deref(x, "x")?.0)))
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn octolab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Torsion tensor at the unit octonion `x`.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn octolab_torsion_new(
    x: *const OctolabOctonion,
    out: *mut *mut OctolabTorsion,
) -> OctolabStatus {
    guard(|| {
        let p = UnitPoint::new(deref(x, "x")?.0).map_err(from_error)?;
        let t = torsion_tensor(&p).map_err(from_error)?;
        store(out, OctolabTorsion(t))
    })
}

/// `T_ijk` with indices in 1..=7.
///
/// # Safety
/// `t` must be a live handle; `num`, `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn octolab_torsion_get(
    t: *const OctolabTorsion,
    i: usize,
    j: usize,
    k: usize,
    num: *mut i64,
    den: *mut i64,
) -> OctolabStatus {
    guard(|| {
        let t = deref(t, "t")?;
        if ![i, j, k].iter().all(|v| (1..=7).contains(v)) {
            set_error(format!("indices ({i},{j},{k}) outside 1..=7"));
            return Err(OctolabStatus::Domain);
        }
        store_rational(t.0.get(i, j, k), num, den)
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn octolab_torsion_free(t: *mut OctolabTorsion) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Runs the checks matching `selection` and returns the JSON report in
/// `report` (release with `octolab_string_free`) and the process-style exit
/// code in `exit_code` (0 no failures, 1 some check failed).
///
/// # Safety
/// `selection` must be a valid nul-terminated string; `report`, `exit_code` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn octolab_verify(
    selection: *const c_char,
    report: *mut *mut c_char,
    exit_code: *mut i32,
) -> OctolabStatus {
    guard(|| {
        let sel = read_str(selection)?;
        if exit_code.is_null() {
            return Err(null("exit_code"));
        }
        let r = run_verification(sel, Format::Json).map_err(|e| {
            set_error(e.to_string());
            OctolabStatus::NoMatch
        })?;
        store_string(report, r.to_json())?;
        *exit_code = r.exit_code();
        Ok(())
    })
}
