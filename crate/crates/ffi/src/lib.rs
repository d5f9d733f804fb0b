//! C interface to the `hyperbessel` library.
//!
//! Parameters live behind an opaque [`HbParams`] handle created by
//! [`hb_params_new`] and released by [`hb_params_free`]. Every fallible call
//! returns an [`HbStatus`]; on failure the message is kept per thread and can
//! be copied out with [`hb_last_error_message`]. Output pointers are written
//! only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperbessel::verify::boundary_sup_below;
use hyperbessel::{
    eval_j, first_zeros_f_prime, first_zeros_j, log_deriv_f, log_deriv_f_prime, solve_radius,
    Error, HyperBesselParams, JanowskiPair, RadiusKind, RadiusOptions, SeriesConfig,
};
use num_complex::Complex64;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbStatus {
    Ok = 0,
    /// A null pointer, zero count or misplaced Janowski constants.
    InvalidArgument = 1,
    InvalidParams = 2,
    InvalidConfig = 3,
    Domain = 4,
    Truncation = 5,
    NearPole = 6,
    Bracket = 7,
    Convergence = 8,
    ScanExhausted = 9,
    ZeroResidual = 10,
    /// An internal panic was caught at the boundary.
    Internal = 11,
}

impl From<&Error> for HbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidParams(_) => HbStatus::InvalidParams,
            Error::InvalidConfig(_) => HbStatus::InvalidConfig,
            Error::Domain(_) => HbStatus::Domain,
            Error::Truncation { .. } => HbStatus::Truncation,
            Error::NearPole { .. } => HbStatus::NearPole,
            Error::Bracket { .. } => HbStatus::Bracket,
            Error::Convergence { .. } => HbStatus::Convergence,
            Error::ScanExhausted { .. } => HbStatus::ScanExhausted,
            Error::ZeroResidual { .. } => HbStatus::ZeroResidual,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbRadiusKind {
    LemniscateStarlike = 0,
    LemniscateConvex = 1,
    JanowskiStarlike = 2,
    JanowskiConvex = 3,
}

impl From<HbRadiusKind> for RadiusKind {
    fn from(k: HbRadiusKind) -> Self {
        match k {
            HbRadiusKind::LemniscateStarlike => RadiusKind::LemniscateStarlike,
            HbRadiusKind::LemniscateConvex => RadiusKind::LemniscateConvex,
            HbRadiusKind::JanowskiStarlike => RadiusKind::JanowskiStarlike,
            HbRadiusKind::JanowskiConvex => RadiusKind::JanowskiConvex,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbZeroKind {
    /// Zeros of 𝒥.
    Function = 0,
    /// Zeros of f′.
    Derivative = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for HbComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Janowski constants `−1 ≤ B < A ≤ 1`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbJanowski {
    pub a: f64,
    pub b: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbRadius {
    pub radius: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub iterations: usize,
    /// `j_1` for starlike kinds, `γ_1` for convex kinds.
    pub ceiling: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbBoundary {
    pub rho: f64,
    pub samples: usize,
    /// `INFINITY` when a denominator vanished at some sample.
    pub sup_modulus: f64,
    pub argmax_angle: f64,
    pub satisfied: bool,
}

/// Opaque parameter handle.
pub struct HbParams {
    inner: HyperBesselParams,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: HbStatus, msg: impl Into<String>) -> HbStatus {
    set_error(msg.into());
    status
}

/// Runs `body`, mapping library errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), HbStatus>) -> HbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HbStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(HbStatus::Internal, "internal panic"),
    }
}

fn lib<T>(r: hyperbessel::Result<T>) -> Result<T, HbStatus> {
    r.map_err(|e| fail(HbStatus::from(&e), e.to_string()))
}

unsafe fn handle<'a>(p: *const HbParams) -> Result<&'a HyperBesselParams, HbStatus> {
    unsafe { p.as_ref() }
        .map(|h| &h.inner)
        .ok_or_else(|| fail(HbStatus::InvalidArgument, "null parameter handle"))
}

fn non_null<T>(p: *mut T, what: &str) -> Result<*mut T, HbStatus> {
    if p.is_null() {
        Err(fail(HbStatus::InvalidArgument, format!("null {what} pointer")))
    } else {
        Ok(p)
    }
}

unsafe fn janowski(kind: RadiusKind, jan: *const HbJanowski) -> Result<Option<JanowskiPair>, HbStatus> {
    match (kind.is_janowski(), unsafe { jan.as_ref() }) {
        (true, Some(j)) => lib(JanowskiPair::new(j.a, j.b)).map(Some),
        (true, None) => Err(fail(HbStatus::InvalidArgument, format!("{kind} needs Janowski constants"))),
        (false, None) => Ok(None),
        (false, Some(_)) => Err(fail(HbStatus::InvalidArgument, format!("{kind} takes no Janowski constants"))),
    }
}

/// Creates a handle for `α_1, …, α_d` (each > −1). Free it with [`hb_params_free`].
///
/// # Safety
/// `alphas` must point to `d` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_params_new(alphas: *const f64, d: usize, out: *mut *mut HbParams) -> HbStatus {
    guard(|| {
        let out = non_null(out, "output")?;
        if alphas.is_null() || d == 0 {
            return Err(fail(HbStatus::InvalidArgument, "alphas must be a non-empty array"));
        }
        let values = unsafe { std::slice::from_raw_parts(alphas, d) }.to_vec();
        let inner = lib(HyperBesselParams::new(values))?;
        unsafe { *out = Box::into_raw(Box::new(HbParams { inner })) };
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `params` must come from [`hb_params_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hb_params_free(params: *mut HbParams) {
    if !params.is_null() {
        drop(unsafe { Box::from_raw(params) });
    }
}

/// The dimension `d`, or 0 for a null handle.
///
/// # Safety
/// `params` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hb_params_dimension(params: *const HbParams) -> usize {
    unsafe { params.as_ref() }.map_or(0, |h| h.inner.d())
}

/// `𝒥(z)`, `𝒥′(z)` and `𝒥″(z)`. Any of the outputs may be null.
///
/// # Safety
/// `params` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_eval_j(
    params: *const HbParams,
    z: HbComplex,
    value: *mut HbComplex,
    d1: *mut HbComplex,
    d2: *mut HbComplex,
) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let v = lib(eval_j(p, Complex64::new(z.re, z.im), &SeriesConfig::default()))?;
        for (out, x) in [(value, v.value), (d1, v.d1), (d2, v.d2)] {
            if !out.is_null() {
                unsafe { *out = x.into() };
            }
        }
        Ok(())
    })
}

/// `x(r) = r f′(r)/f(r)` for `0 < r < j_1`.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_log_deriv_f(params: *const HbParams, r: f64, out: *mut f64) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let out = non_null(out, "output")?;
        let v = lib(log_deriv_f(p, r, &SeriesConfig::default()))?;
        unsafe { *out = v };
        Ok(())
    })
}

/// `y(r) = r f″(r)/f′(r)` for `0 < r < γ_1`.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_log_deriv_f_prime(params: *const HbParams, r: f64, out: *mut f64) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let out = non_null(out, "output")?;
        let v = lib(log_deriv_f_prime(p, r, &SeriesConfig::default()))?;
        unsafe { *out = v };
        Ok(())
    })
}

/// Writes the first `count` positive zeros of 𝒥 or f′ into `out`.
///
/// # Safety
/// `params` must be a live handle; `out` must hold `count` doubles.
#[no_mangle]
pub unsafe extern "C" fn hb_zeros(
    params: *const HbParams,
    kind: HbZeroKind,
    count: usize,
    out: *mut f64,
) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let out = non_null(out, "output")?;
        if count == 0 {
            return Err(fail(HbStatus::InvalidArgument, "count must be at least 1"));
        }
        let cfg = SeriesConfig::default();
        let table = lib(match kind {
            HbZeroKind::Function => first_zeros_j(p, count, &cfg),
            HbZeroKind::Derivative => first_zeros_f_prime(p, count, &cfg),
        })?;
        unsafe { ptr::copy_nonoverlapping(table.zeros.as_ptr(), out, count) };
        Ok(())
    })
}

/// Solves one radius equation. `jan` must be non-null exactly for the
/// Janowski kinds; `tol` is the root tolerance (scaled by `1 + radius`).
///
/// # Safety
/// `params` must be a live handle; `jan` null or readable; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hb_radius(
    params: *const HbParams,
    kind: HbRadiusKind,
    jan: *const HbJanowski,
    tol: f64,
    out: *mut HbRadius,
) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let out = non_null(out, "output")?;
        let kind = RadiusKind::from(kind);
        let pair = unsafe { janowski(kind, jan) }?;
        let opts = RadiusOptions { tol, ..RadiusOptions::default() };
        let r = lib(solve_radius(p, kind, pair.as_ref(), &opts))?;
        unsafe {
            *out = HbRadius {
                radius: r.radius,
                bracket_lo: r.bracket.0,
                bracket_hi: r.bracket.1,
                residual: r.residual,
                iterations: r.iterations,
                ceiling: r.ceiling,
            }
        };
        Ok(())
    })
}

/// Samples the defining functional of `kind` at `samples` equispaced points
/// of `|z| = rho`; `rho` must lie below `j_1` (starlike) or `γ_1` (convex).
///
/// # Safety
/// As for [`hb_radius`].
#[no_mangle]
pub unsafe extern "C" fn hb_boundary_sup(
    params: *const HbParams,
    kind: HbRadiusKind,
    jan: *const HbJanowski,
    rho: f64,
    samples: usize,
    out: *mut HbBoundary,
) -> HbStatus {
    guard(|| {
        let p = unsafe { handle(params) }?;
        let out = non_null(out, "output")?;
        let kind = RadiusKind::from(kind);
        let pair = unsafe { janowski(kind, jan) }?;
        let cfg = SeriesConfig::default();
        let ceiling = lib(hyperbessel::radii::ceiling_for(p, kind.ceiling_kind(), &cfg))?;
        let r = lib(boundary_sup_below(p, kind, pair.as_ref(), rho, samples, ceiling, &cfg))?;
        unsafe {
            *out = HbBoundary {
                rho: r.rho,
                samples: r.samples,
                sup_modulus: r.sup_modulus,
                argmax_angle: r.argmax_angle,
                satisfied: r.satisfied,
            }
        };
        Ok(())
    })
}

/// Copies the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `len`) and returns the full length including the terminator;
/// 0 when there is no message. A null `buf` only queries the length.
///
/// # Safety
/// `buf` must be null or hold `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn hb_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
                *buf.add(n - 1) = 0;
            }
        }
        bytes.len()
    })
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn hb_status_name(status: HbStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        HbStatus::Ok => b"ok\0",
        HbStatus::InvalidArgument => b"invalid-argument\0",
        HbStatus::InvalidParams => b"invalid-params\0",
        HbStatus::InvalidConfig => b"invalid-config\0",
        HbStatus::Domain => b"domain\0",
        HbStatus::Truncation => b"truncation\0",
        HbStatus::NearPole => b"near-pole\0",
        HbStatus::Bracket => b"bracket\0",
        HbStatus::Convergence => b"convergence\0",
        HbStatus::ScanExhausted => b"scan-exhausted\0",
        HbStatus::ZeroResidual => b"zero-residual\0",
        HbStatus::Internal => b"internal\0",
    };
    s.as_ptr().cast()
}
