//! C ABI over the singular BGG pipeline.
//!
//! Handles are opaque; every function returns a [`BggStatus`] (or is a
//! destructor). Strings returned through out-parameters are heap-allocated
//! and must be released with [`bgg_string_free`].

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bgg_core::{Error, Pipeline, Weight};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BggStatus {
    Ok = 0,
    /// Malformed input: bad rank, bad k, or a non-admissible weight shape.
    InvalidInput = 1,
    /// Some coordinate repeats three or more times.
    SingularityTooDeep = 2,
    /// More repeated pairs than fit into the first block (l > k).
    NoRegularConjugate = 3,
    /// An internal invariant failed; the result cannot be trusted.
    Internal = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// The structural verification suite reported a failure.
    VerificationFailed = 6,
}

/// Opaque handle to a fully built pipeline (analysis, labeled diagram,
/// assembled complex) for one `(mu, k)` input.
pub struct BggPipeline {
    inner: Pipeline,
}

fn status_of(err: &Error) -> BggStatus {
    match err {
        Error::Internal(_) => BggStatus::Internal,
        Error::SingularityTooDeep { .. } => BggStatus::SingularityTooDeep,
        Error::NoRegularConjugate { .. } => BggStatus::NoRegularConjugate,
        _ => BggStatus::InvalidInput,
    }
}

thread_local! {
    static LAST_ERROR: std::cell::RefCell<Option<CString>> =
        const { std::cell::RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: BggStatus, message: String) -> BggStatus {
    set_last_error(message);
    status
}

fn guard<F: FnOnce() -> BggStatus>(f: F) -> BggStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(BggStatus::Internal, "panic across the FFI boundary".into()),
    }
}

/// Returns the message of the most recent failure on this thread, or null.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bgg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

/// Builds the pipeline for the weight `mu` (length `n`) on `G(k, n)`.
///
/// On success, `*out` owns the handle; release it with `bgg_pipeline_free`.
///
/// # Safety
/// `mu` must point to `n` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_new(
    mu: *const i64,
    n: usize,
    k: usize,
    out: *mut *mut BggPipeline,
) -> BggStatus {
    if mu.is_null() || out.is_null() {
        return fail(BggStatus::NullPointer, "mu and out must be non-null".into());
    }
    let coords = std::slice::from_raw_parts(mu, n).to_vec();
    guard(|| {
        let built = Weight::new(coords).and_then(|w| Pipeline::run(w, k));
        match built {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(BggPipeline { inner })) };
                BggStatus::Ok
            }
            Err(err) => fail(status_of(&err), err.to_string()),
        }
    })
}

/// Releases a handle returned by `bgg_pipeline_new`. Null is a no-op.
///
/// # Safety
/// `pipeline` must be a pointer from `bgg_pipeline_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_free(pipeline: *mut BggPipeline) {
    if !pipeline.is_null() {
        drop(unsafe { Box::from_raw(pipeline) });
    }
}

unsafe fn read_usize(
    pipeline: *const BggPipeline,
    out: *mut usize,
    get: impl FnOnce(&Pipeline) -> usize,
) -> BggStatus {
    if pipeline.is_null() || out.is_null() {
        return fail(BggStatus::NullPointer, "null handle or out-pointer".into());
    }
    unsafe { *out = get(&(*pipeline).inner) };
    BggStatus::Ok
}

/// The order of singularity `l`.
///
/// # Safety
/// `pipeline` must be a live handle and `out` writable; same for the other getters.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_singularity_order(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.profile.order())
}

/// Number of vertices of the relative Hasse diagram.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_relative_vertex_count(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.labeled.diagram.vertices.len())
}

/// Number of arrows of the relative Hasse diagram.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_relative_arrow_count(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.labeled.diagram.arrows.len())
}

/// Number of vertices (bundles) of the assembled complex.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_vertex_count(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.complex.vertices.len())
}

/// Number of jump arrows (differentials) of the assembled complex.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_arrow_count(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.complex.arrows.len())
}

/// Number of chain degrees, `(k-l)(n-k-l) + 1`.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_chain_space_count(
    pipeline: *const BggPipeline,
    out: *mut usize,
) -> BggStatus {
    read_usize(pipeline, out, |p| p.complex.chain_spaces.len())
}

/// Number of bundles in chain degree `s`. Fails with `INVALID_INPUT` when
/// `s` is out of range.
///
/// # Safety
/// See `bgg_pipeline_singularity_order`.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_chain_space_size(
    pipeline: *const BggPipeline,
    s: usize,
    out: *mut usize,
) -> BggStatus {
    if pipeline.is_null() || out.is_null() {
        return fail(BggStatus::NullPointer, "null handle or out-pointer".into());
    }
    match unsafe { &(*pipeline).inner }.complex.chain_spaces.get(s) {
        Some(ids) => {
            unsafe { *out = ids.len() };
            BggStatus::Ok
        }
        None => fail(
            BggStatus::InvalidInput,
            format!("chain degree {s} out of range"),
        ),
    }
}

/// Runs the structural verification suite (oracle isomorphism, shift law,
/// jump-label law, diamond pairing). `OK` when everything holds.
///
/// # Safety
/// `pipeline` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_check(pipeline: *const BggPipeline) -> BggStatus {
    if pipeline.is_null() {
        return fail(BggStatus::NullPointer, "null handle".into());
    }
    let inner = unsafe { &(*pipeline).inner };
    guard(|| match inner.verify() {
        Ok(report) if report.ok() => BggStatus::Ok,
        Ok(report) => fail(BggStatus::VerificationFailed, report.failures.join("; ")),
        Err(err) => fail(status_of(&err), err.to_string()),
    })
}

/// Serializes the full result (singularity data, labeled diagram, complex)
/// as a JSON document. The string must be released with `bgg_string_free`.
///
/// # Safety
/// `pipeline` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bgg_pipeline_to_json(
    pipeline: *const BggPipeline,
    out: *mut *mut c_char,
) -> BggStatus {
    if pipeline.is_null() || out.is_null() {
        return fail(BggStatus::NullPointer, "null handle or out-pointer".into());
    }
    let inner = unsafe { &(*pipeline).inner };
    guard(|| {
        let text = serde_json::to_string_pretty(&inner.json_report()).expect("serializable");
        let text = CString::new(text).expect("JSON has no interior nul");
        unsafe { *out = text.into_raw() };
        BggStatus::Ok
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `text` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bgg_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}
