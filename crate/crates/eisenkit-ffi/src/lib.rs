//! C ABI for eisenkit.
//!
//! Every function returns an [`EkStatus`]. Objects come back as opaque handles
//! that must be released with the matching `*_free` function, and strings
//! returned by the library must be released with [`ek_string_free`]. After a
//! non-OK status, [`ek_last_error_message`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eisenkit::eisenstein::{self, EisensteinParams};
use eisenkit::lfunctions::LValueRequest;
use eisenkit::special_functions::{bessel_k, BesselRequest};
use eisenkit::{DirichletCharacter, Error};
use num_complex::Complex64;

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NumericEnvelope = 3,
    Panic = 4,
}

/// A complex number.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EkComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for EkComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<EkComplex> for Complex64 {
    fn from(z: EkComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Opaque Dirichlet character.
pub struct EkCharacter(DirichletCharacter);

/// Opaque Eisenstein series at a fixed spectral point.
pub struct EkEisenstein(EisensteinParams);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> EkStatus {
    match err {
        Error::InvalidInput(_) => EkStatus::InvalidInput,
        _ => EkStatus::NumericEnvelope,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> EkStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EkStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            EkStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            EkStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn write<T>(p: *mut T, what: &'static str, v: T) -> Result<(), Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    p.write(v);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Create the character with Conrey-style label `q:index`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn ek_character_new(q: u64, index: u64, out: *mut *mut EkCharacter) -> EkStatus {
    guard(|| {
        let chi = DirichletCharacter::new(q, index)?;
        write(out, "out", Box::into_raw(Box::new(EkCharacter(chi))))
    })
}

/// Parse a character from a label such as `"5:3"`.
///
/// # Safety
/// `label` must be a NUL-terminated string and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_character_parse(label: *const c_char, out: *mut *mut EkCharacter) -> EkStatus {
    guard(|| {
        if label.is_null() {
            return Err(Failure::Null("label"));
        }
        let text = CStr::from_ptr(label)
            .to_str()
            .map_err(|_| Error::InvalidInput("label is not UTF-8".into()))?;
        let chi: DirichletCharacter = text.parse()?;
        write(out, "out", Box::into_raw(Box::new(EkCharacter(chi))))
    })
}

/// Release a character handle. Null is ignored.
///
/// # Safety
/// `chi` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ek_character_free(chi: *mut EkCharacter) {
    if !chi.is_null() {
        drop(Box::from_raw(chi));
    }
}

/// `χ(n)`, zero when `gcd(n, q) > 1`.
///
/// # Safety
/// `chi` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_character_eval(chi: *const EkCharacter, n: i64, out: *mut EkComplex) -> EkStatus {
    guard(|| {
        let chi = deref(chi, "chi")?;
        write(out, "out", chi.0.evaluate(n).into())
    })
}

/// Conductor of the character.
///
/// # Safety
/// `chi` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_character_conductor(chi: *const EkCharacter, out: *mut u64) -> EkStatus {
    guard(|| {
        let chi = deref(chi, "chi")?;
        write(out, "out", chi.0.conductor())
    })
}

/// Label `q:index` of the character; free with [`ek_string_free`].
///
/// # Safety
/// `chi` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_character_label(chi: *const EkCharacter, out: *mut *mut c_char) -> EkStatus {
    guard(|| {
        let chi = deref(chi, "chi")?;
        write(out, "out", to_c_string(chi.0.label()))
    })
}

/// Gauss sum of a primitive character.
///
/// # Safety
/// `chi` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_gauss_sum(chi: *const EkCharacter, out: *mut EkComplex) -> EkStatus {
    guard(|| {
        let chi = deref(chi, "chi")?;
        write(out, "out", chi.0.gauss_sum()?.into())
    })
}

/// `L(s, χ)`, or the completed `Λ(s, χ)` when `completed` is true.
///
/// # Safety
/// `chi` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_dirichlet_l(
    chi: *const EkCharacter,
    s: EkComplex,
    completed: bool,
    out: *mut EkComplex,
) -> EkStatus {
    guard(|| {
        let chi = deref(chi, "chi")?;
        let req = LValueRequest {
            s: s.into(),
            character: chi.0.clone(),
            completed,
        };
        write(out, "out", req.evaluate()?.into())
    })
}

/// `K_ν(x)` for complex order and real `x > 0`.
///
/// # Safety
/// `out` must be valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_bessel_k(nu: EkComplex, x: f64, out: *mut EkComplex) -> EkStatus {
    guard(|| write(out, "out", bessel_k(&BesselRequest::new(nu.into(), x))?.into()))
}

/// Eisenstein series for primitive `chi1`, `chi2` at spectral point `s`.
///
/// # Safety
/// `chi1` and `chi2` must be live handles and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_eisenstein_new(
    chi1: *const EkCharacter,
    chi2: *const EkCharacter,
    s: EkComplex,
    out: *mut *mut EkEisenstein,
) -> EkStatus {
    guard(|| {
        let a = deref(chi1, "chi1")?;
        let b = deref(chi2, "chi2")?;
        let p = EisensteinParams::new(a.0.clone(), b.0.clone(), s.into())?;
        write(out, "out", Box::into_raw(Box::new(EkEisenstein(p))))
    })
}

/// Release an Eisenstein handle. Null is ignored.
///
/// # Safety
/// `e` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ek_eisenstein_free(e: *mut EkEisenstein) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// `E(x + iy)` with truncation error below `eps`.
///
/// # Safety
/// `e` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_eisenstein_evaluate(
    e: *const EkEisenstein,
    x: f64,
    y: f64,
    eps: f64,
    out: *mut EkComplex,
) -> EkStatus {
    guard(|| {
        let e = deref(e, "e")?;
        write(out, "out", eisenstein::evaluate(&e.0, x, y, eps)?.into())
    })
}

/// Scattering constant `c(s)`.
///
/// # Safety
/// `e` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_eisenstein_scattering(e: *const EkEisenstein, out: *mut EkComplex) -> EkStatus {
    guard(|| {
        let e = deref(e, "e")?;
        write(out, "out", eisenstein::scattering_constant(&e.0)?.scattering.into())
    })
}

/// Functional-equation residual at `x + iy`.
///
/// # Safety
/// `e` must be a live handle and `out` valid writable storage.
#[no_mangle]
pub unsafe extern "C" fn ek_eisenstein_fe_residual(e: *const EkEisenstein, x: f64, y: f64, out: *mut f64) -> EkStatus {
    guard(|| {
        let e = deref(e, "e")?;
        write(out, "out", eisenstein::functional_equation_residual(&e.0, x, y)?)
    })
}

/// Message for the last failure on this thread, or null if the last call
/// succeeded. Free with [`ek_string_free`].
#[no_mangle]
pub extern "C" fn ek_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map(to_c_string).unwrap_or(ptr::null_mut()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ek_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
