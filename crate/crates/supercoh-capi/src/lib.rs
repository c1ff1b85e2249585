//! C ABI for the supercoh library: opaque handles, error codes, and
//! JSON-in/JSON-out report functions. The header `include/supercoh.h` is
//! generated at build time.
//!
//! Ownership rules: every `*mut SupercohContext` returned by
//! `supercoh_context_new` must be released with `supercoh_context_free`;
//! every string returned through an out-parameter must be released with
//! `supercoh_string_free`. Handles are not thread-safe; use one per thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use supercoh::algebra::{EvenSubalgebra, LieSuperalgebra, Representation};
use supercoh::cochain::RelativeComplex;
use supercoh::io::{AlgebraDoc, ModuleDoc, SubalgebraDoc};
use supercoh::ring::{generator_probe, ring_truncation};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupercohStatus {
    /// Success.
    Ok = 0,
    /// A pointer argument was null or a parameter was out of range.
    InvalidArgument = 1,
    /// The documents parsed but the algebraic laws fail (bad structure
    /// constants, non-module matrices, ...).
    ValidationFailed = 2,
    /// The input was not valid JSON for the documented schemas.
    SchemaError = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// An opaque handle owning a validated (algebra, subalgebra, module) triple.
pub struct SupercohContext {
    alg: LieSuperalgebra,
    sub: EvenSubalgebra,
    rep: Representation,
}

/// Most recent error message for this thread, or null when no error has been
/// recorded. The pointer stays valid until the next failing call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn supercoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// # Safety
/// `s` must be null or a NUL-terminated string valid for reads.
unsafe fn read_utf8<'a>(s: *const c_char) -> Result<Option<&'a str>, SupercohStatus> {
    if s.is_null() {
        return Ok(None);
    }
    match unsafe { CStr::from_ptr(s) }.to_str() {
        Ok(t) => Ok(Some(t)),
        Err(_) => {
            set_error("argument is not valid UTF-8".into());
            Err(SupercohStatus::InvalidArgument)
        }
    }
}

/// Creates a context from JSON documents. `algebra_json` is required;
/// `subalgebra_json` may be null (the zero subalgebra) and `module_json` may
/// be null (trivial coefficients). On success writes a handle to `out`.
///
/// # Safety
/// `algebra_json`, `subalgebra_json`, and `module_json` must each be null or
/// point to NUL-terminated strings valid for reads; `out` must be valid for
/// writes. The returned handle must be released with `supercoh_context_free`.
#[no_mangle]
pub unsafe extern "C" fn supercoh_context_new(
    algebra_json: *const c_char,
    subalgebra_json: *const c_char,
    module_json: *const c_char,
    out: *mut *mut SupercohContext,
) -> SupercohStatus {
    if out.is_null() {
        set_error("out pointer is null".into());
        return SupercohStatus::InvalidArgument;
    }
    let alg_text = match unsafe { read_utf8(algebra_json) } {
        Ok(Some(t)) => t,
        Ok(None) => {
            set_error("algebra_json is null".into());
            return SupercohStatus::InvalidArgument;
        }
        Err(s) => return s,
    };
    let alg = match serde_json::from_str::<AlgebraDoc>(alg_text)
        .map_err(|e| e.to_string())
        .and_then(|d| d.to_algebra().map_err(|e| e.to_string()))
    {
        Ok(a) => a,
        Err(e) => {
            set_error(format!("algebra document: {e}"));
            return SupercohStatus::SchemaError;
        }
    };
    let report = alg.validate();
    if !report.is_valid() {
        set_error(format!(
            "algebra violates the superalgebra laws: {}",
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        ));
        return SupercohStatus::ValidationFailed;
    }
    let sub = match unsafe { read_utf8(subalgebra_json) } {
        Ok(None) => EvenSubalgebra::zero(),
        Ok(Some(t)) => match serde_json::from_str::<SubalgebraDoc>(t)
            .map_err(|e| e.to_string())
            .and_then(|d| d.to_subalgebra(&alg).map_err(|e| e.to_string()))
        {
            Ok(s) => s,
            Err(e) => {
                set_error(format!("subalgebra document: {e}"));
                return SupercohStatus::SchemaError;
            }
        },
        Err(s) => return s,
    };
    let rep = match unsafe { read_utf8(module_json) } {
        Ok(None) => Representation::trivial(&alg),
        Ok(Some(t)) => match serde_json::from_str::<ModuleDoc>(t)
            .map_err(|e| e.to_string())
            .and_then(|d| d.to_representation(&alg, "custom").map_err(|e| e.to_string()))
        {
            Ok(r) => r,
            Err(e) => {
                set_error(format!("module document: {e}"));
                return SupercohStatus::SchemaError;
            }
        },
        Err(s) => return s,
    };
    if let Ok(r) = rep.validate(&alg) {
        if !r.is_valid() {
            set_error("module matrices do not define a representation".into());
            return SupercohStatus::ValidationFailed;
        }
    } else {
        set_error("module matrices have the wrong shape".into());
        return SupercohStatus::ValidationFailed;
    }
    let ctx = Box::new(SupercohContext { alg, sub, rep });
    unsafe { out.write(Box::into_raw(ctx)) };
    SupercohStatus::Ok
}

/// Releases a context created by `supercoh_context_new`. Null is a no-op.
///
/// # Safety
/// `ctx` must be null or a pointer previously returned by
/// `supercoh_context_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn supercoh_context_free(ctx: *mut SupercohContext) {
    if !ctx.is_null() {
        drop(unsafe { Box::from_raw(ctx) });
    }
}

/// Releases a string returned through an out-parameter. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously written by this library that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn supercoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// dim H^degree(g, a; M) for the context's triple.
///
/// # Safety
/// `ctx` must be a live context handle; `out_dim` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn supercoh_cohomology_dim(
    ctx: *const SupercohContext,
    degree: u32,
    out_dim: *mut u32,
) -> SupercohStatus {
    if ctx.is_null() || out_dim.is_null() {
        set_error("null handle or out pointer".into());
        return SupercohStatus::InvalidArgument;
    }
    let ctx = unsafe { &*ctx };
    let complex = match RelativeComplex::new(ctx.alg.clone(), ctx.sub.clone(), ctx.rep.clone()) {
        Ok(c) => c,
        Err(e) => {
            set_error(e);
            return SupercohStatus::ValidationFailed;
        }
    };
    let dim = complex.cohomology(degree as usize).dim;
    unsafe { out_dim.write(dim as u32) };
    SupercohStatus::Ok
}

/// JSON report of per-degree cohomology dimensions up to `max_degree`
/// (inclusive): `{"dims":[...]}`.
///
/// # Safety
/// `ctx` must be a live context handle; `out_json` must be valid for writes.
/// The returned string must be released with `supercoh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn supercoh_cohomology_json(
    ctx: *const SupercohContext,
    max_degree: u32,
    out_json: *mut *mut c_char,
) -> SupercohStatus {
    if ctx.is_null() || out_json.is_null() {
        set_error("null handle or out pointer".into());
        return SupercohStatus::InvalidArgument;
    }
    let ctx = unsafe { &*ctx };
    let complex = match RelativeComplex::new(ctx.alg.clone(), ctx.sub.clone(), ctx.rep.clone()) {
        Ok(c) => c,
        Err(e) => {
            set_error(e);
            return SupercohStatus::ValidationFailed;
        }
    };
    let dims: Vec<usize> = (0..=max_degree as usize)
        .map(|n| complex.cohomology(n).dim)
        .collect();
    let text = serde_json::json!({ "dims": dims }).to_string();
    let c = CString::new(text).expect("JSON has no interior NUL");
    unsafe { out_json.write(c.into_raw()) };
    SupercohStatus::Ok
}

/// JSON report of the truncated cohomology ring with trivial coefficients:
/// `{"dims":[...], "generators":[...]}`.
///
/// # Safety
/// `ctx` must be a live context handle; `out_json` must be valid for writes.
/// The returned string must be released with `supercoh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn supercoh_ring_json(
    ctx: *const SupercohContext,
    max_degree: u32,
    out_json: *mut *mut c_char,
) -> SupercohStatus {
    if ctx.is_null() || out_json.is_null() {
        set_error("null handle or out pointer".into());
        return SupercohStatus::InvalidArgument;
    }
    let ctx = unsafe { &*ctx };
    let complex = match RelativeComplex::new(
        ctx.alg.clone(),
        ctx.sub.clone(),
        Representation::trivial(&ctx.alg),
    ) {
        Ok(c) => c,
        Err(e) => {
            set_error(e);
            return SupercohStatus::ValidationFailed;
        }
    };
    let rt = ring_truncation(&complex, max_degree as usize);
    let probe = generator_probe(&rt);
    let mut generators = Vec::new();
    for (deg, count) in &probe.generators {
        for _ in 0..*count {
            generators.push(*deg);
        }
    }
    let text = serde_json::json!({ "dims": rt.dims, "generators": generators }).to_string();
    let c = CString::new(text).expect("JSON has no interior NUL");
    unsafe { out_json.write(c.into_raw()) };
    SupercohStatus::Ok
}
