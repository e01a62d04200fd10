//! C ABI over `binomap`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `_free` function. Every fallible call returns a
//! [`BinomapStatus`] and, on failure, leaves a message retrievable with
//! [`binomap_last_error_message`] on the same thread. Strings handed out by
//! the library must be released with [`binomap_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use binomap::{
    adjacent_minors, decompose, parse_system, serialize_system, DecomposeOptions, Decomposition,
    EnumerationOptions, Error, PolynomialSystem,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomapStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotBinomial = 4,
    BranchLimit = 5,
    OutOfRange = 6,
    InvalidArgument = 7,
    Internal = 8,
    Panic = 9,
}

/// Tuning knobs for [`binomap_decompose`]; start from
/// [`binomap_options_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BinomapOptions {
    /// Only selections of the pure dimension.
    pub pure_dim: bool,
    /// Largest selection size; negative means unbounded.
    pub max_size: i64,
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
    pub branch_limit: usize,
}

/// A parsed polynomial system.
pub struct BinomapSystem {
    inner: PolynomialSystem,
}

/// The monomial maps of a system.
pub struct BinomapDecomposition {
    inner: Decomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(BinomapStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::ZeroCoefficient { .. } | Error::ZeroPolynomial { .. } => {
                BinomapStatus::ParseError
            }
            Error::NotBinomial { .. } => BinomapStatus::NotBinomial,
            Error::BranchLimit { .. } => BinomapStatus::BranchLimit,
            Error::InvalidArgument(_) => BinomapStatus::InvalidArgument,
            Error::UnknownVariable(_) | Error::RowOutOfRange { .. } => BinomapStatus::OutOfRange,
            _ => BinomapStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BinomapStatus::NullPointer, format!("{what} is null"))
}

fn out_of_range(what: &str, index: usize, len: usize) -> Failure {
    Failure(
        BinomapStatus::OutOfRange,
        format!("{what} {index} out of range ({len})"),
    )
}

/// Runs `f`, converting errors and panics into a status plus message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BinomapStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BinomapStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            BinomapStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(BinomapStatus::Internal, "string contains NUL".into()))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn binomap_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn binomap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn binomap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn binomap_options_default() -> BinomapOptions {
    let d = DecomposeOptions::default();
    BinomapOptions {
        pure_dim: d.enumeration.pure_dim,
        max_size: -1,
        tolerance: d.tolerance,
        samples: d.samples,
        seed: d.seed,
        branch_limit: d.branch_limit,
    }
}

/// Parses a system from NUL-terminated text.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_parse(
    text: *const c_char,
    out: *mut *mut BinomapSystem,
) -> BinomapStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(BinomapStatus::InvalidUtf8, e.to_string()))?;
        let sys = parse_system(text)?;
        write_out(out, Box::into_raw(Box::new(BinomapSystem { inner: sys })), "out")
    })
}

/// The adjacent 2x2 minors of an `m x n` matrix of unknowns.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_adjacent_minors(
    m: usize,
    n: usize,
    out: *mut *mut BinomapSystem,
) -> BinomapStatus {
    guard(|| {
        let sys = adjacent_minors(m, n)?;
        write_out(out, Box::into_raw(Box::new(BinomapSystem { inner: sys })), "out")
    })
}

/// # Safety
/// `sys` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_free(sys: *mut BinomapSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// # Safety
/// `sys` must be null or a live handle. Returns 0 for null.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_num_vars(sys: *const BinomapSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.num_vars())
}

/// # Safety
/// `sys` must be null or a live handle. Returns 0 for null.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_num_equations(sys: *const BinomapSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.num_equations())
}

/// Name of variable `index`; free the result with [`binomap_string_free`].
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_var_name(
    sys: *const BinomapSystem,
    index: usize,
    out: *mut *mut c_char,
) -> BinomapStatus {
    guard(|| {
        let sys = &deref(sys, "sys")?.inner;
        if index >= sys.num_vars() {
            return Err(out_of_range("variable", index, sys.num_vars()));
        }
        write_out(out, to_c_string(sys.vars().name(index).to_string())?, "out")
    })
}

/// Text form accepted by [`binomap_system_parse`].
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_system_serialize(
    sys: *const BinomapSystem,
    out: *mut *mut c_char,
) -> BinomapStatus {
    guard(|| {
        let sys = &deref(sys, "sys")?.inner;
        write_out(out, to_c_string(serialize_system(sys))?, "out")
    })
}

/// Decomposes `sys`. A null `opts` means [`binomap_options_default`].
///
/// # Safety
/// `sys` must be a live handle, `opts` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_decompose(
    sys: *const BinomapSystem,
    opts: *const BinomapOptions,
    out: *mut *mut BinomapDecomposition,
) -> BinomapStatus {
    guard(|| {
        let sys = &deref(sys, "sys")?.inner;
        let o = opts.as_ref().copied().unwrap_or_else(|| binomap_options_default());
        if o.tolerance.is_nan() || o.tolerance <= 0.0 {
            return Err(Failure(
                BinomapStatus::InvalidArgument,
                format!("tolerance must be positive, got {}", o.tolerance),
            ));
        }
        let opts = DecomposeOptions {
            enumeration: EnumerationOptions {
                pure_dim: o.pure_dim,
                max_size: usize::try_from(o.max_size).ok(),
                ..Default::default()
            },
            tolerance: o.tolerance,
            samples: o.samples,
            seed: o.seed,
            branch_limit: o.branch_limit,
        };
        let d = decompose(sys, &opts)?;
        write_out(
            out,
            Box::into_raw(Box::new(BinomapDecomposition { inner: d })),
            "out",
        )
    })
}

/// # Safety
/// `d` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn binomap_decomposition_free(d: *mut BinomapDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of maps; 0 for null.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn binomap_decomposition_count(d: *const BinomapDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.len())
}

/// Number of variables each map assigns; 0 for null.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn binomap_decomposition_num_vars(d: *const BinomapDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.var_names.len())
}

unsafe fn map_at<'a>(
    d: *const BinomapDecomposition,
    map: usize,
) -> Result<&'a binomap::MonomialMap, Failure> {
    let d = &deref(d, "decomposition")?.inner;
    d.maps.get(map).ok_or_else(|| out_of_range("map", map, d.len()))
}

fn check_var(m: &binomap::MonomialMap, var: usize) -> Result<(), Failure> {
    if var >= m.nvars {
        return Err(out_of_range("variable", var, m.nvars));
    }
    Ok(())
}

/// Number of parameters of map `map`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_map_dim(
    d: *const BinomapDecomposition,
    map: usize,
    out: *mut usize,
) -> BinomapStatus {
    guard(|| write_out(out, map_at(d, map)?.dim(), "out"))
}

/// Whether variable `var` is identically zero on map `map`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_map_is_zero(
    d: *const BinomapDecomposition,
    map: usize,
    var: usize,
    out: *mut bool,
) -> BinomapStatus {
    guard(|| {
        let m = map_at(d, map)?;
        check_var(m, var)?;
        write_out(out, m.is_zero(var), "out")
    })
}

/// Complex coefficient of variable `var` on map `map`.
///
/// # Safety
/// `d` must be a live handle; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_map_coeff(
    d: *const BinomapDecomposition,
    map: usize,
    var: usize,
    re: *mut f64,
    im: *mut f64,
) -> BinomapStatus {
    guard(|| {
        let m = map_at(d, map)?;
        check_var(m, var)?;
        if im.is_null() {
            return Err(null("im"));
        }
        let c = m.coeffs[var];
        write_out(re, c.re, "re")?;
        write_out(im, c.im, "im")
    })
}

/// Exponent of parameter `param` in variable `var` on map `map`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_map_exponent(
    d: *const BinomapDecomposition,
    map: usize,
    param: usize,
    var: usize,
    out: *mut i64,
) -> BinomapStatus {
    guard(|| {
        let m = map_at(d, map)?;
        check_var(m, var)?;
        if param >= m.dim() {
            return Err(out_of_range("parameter", param, m.dim()));
        }
        write_out(out, m.exponents[param][var], "out")
    })
}

/// JSON document describing every map; free with [`binomap_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binomap_decomposition_to_json(
    d: *const BinomapDecomposition,
    out: *mut *mut c_char,
) -> BinomapStatus {
    guard(|| {
        let d = &deref(d, "decomposition")?.inner;
        write_out(out, to_c_string(d.to_json_string())?, "out")
    })
}
