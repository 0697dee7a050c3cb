//! C ABI for the affine-crystal library.
//!
//! Conventions:
//! - every function returns an [`AcStatus`] code; 0 is success;
//! - results are UTF-8 JSON or DOT strings allocated by Rust, returned
//!   through out-pointers and released with [`ac_string_free`];
//! - crystal graphs are built once into an opaque [`AcCrystal`] handle,
//!   queried, and released with [`ac_crystal_free`];
//! - on failure a human-readable message is available from
//!   [`ac_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};

use affine_crystal::branching::{branching_series, js_generating_function, js_modules, BranchingMethod};
use affine_crystal::crystal::CrystalGraph;
use affine_crystal::error::Error;
use affine_crystal::multipartition::ColoredMultipartition;
use affine_crystal::path::Path;
use affine_crystal::sharp::sharp_multipartition;
use affine_crystal::weights::AffineWeight;

/// Status codes mirrored from the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum AcStatus {
    Ok = 0,
    /// A pointer argument was null or not valid UTF-8.
    InvalidArgument = 1,
    /// Parse, precondition or unsupported-input errors.
    BadInput = 2,
    /// An internal cross-check or consistency check failed.
    CrossCheck = 3,
    /// A configured combinatorial bound was exceeded.
    ResourceLimit = 4,
}

/// Opaque crystal graph handle.
pub struct AcCrystal {
    graph: CrystalGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("no interior nul");
    });
}

fn status_of(err: &Error) -> AcStatus {
    match err {
        Error::Parse(_)
        | Error::Precondition(_)
        | Error::InvalidModulus(_)
        | Error::AmbientMismatch(_)
        | Error::Unsupported(_) => AcStatus::BadInput,
        Error::CrossCheck(_) | Error::Inconsistency(_) => AcStatus::CrossCheck,
        Error::ResourceLimit(_) => AcStatus::ResourceLimit,
    }
}

fn fail(err: Error) -> AcStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, AcStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is null"));
        return Err(AcStatus::InvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        AcStatus::InvalidArgument
    })
}

fn write_string(out: *mut *mut c_char, value: String) -> AcStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return AcStatus::InvalidArgument;
    }
    let sanitized: String = value.chars().filter(|&c| c != '\0').collect();
    let cstring = CString::new(sanitized).expect("no interior nul");
    unsafe {
        *out = cstring.into_raw();
    }
    AcStatus::Ok
}

fn parse_profile(n: u32, text: &str) -> Result<Vec<i64>, Error> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad profile entry '{x}'")))
        })
        .collect::<Result<_, _>>()?;
    if parts.len() != n as usize {
        return Err(Error::Parse(format!(
            "profile '{text}' has {} entries, expected {n}",
            parts.len()
        )));
    }
    Ok(parts)
}

/// The message of the most recent error on this thread.  The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn ac_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `ptr` must be null or a pointer previously returned through an
/// out-parameter of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ac_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Build the crystal graph of V(Λ) up to `max_degree`.  `labels` selects the
/// labelling: 0 for highest-lift multipartitions, 1 for tensor factors.
///
/// # Safety
/// `weight` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_build(
    n: u32,
    weight: *const c_char,
    max_degree: u32,
    labels: c_int,
    out: *mut *mut AcCrystal,
) -> AcStatus {
    let weight = match read_str(weight, "weight") {
        Ok(s) => s,
        Err(code) => return code,
    };
    if out.is_null() {
        set_error("output pointer is null");
        return AcStatus::InvalidArgument;
    }
    let build = || -> Result<CrystalGraph, Error> {
        let w = AffineWeight::parse(n, weight)?;
        match labels {
            0 => CrystalGraph::build_y(&w, max_degree),
            1 => CrystalGraph::build_m(&w, max_degree),
            _ => Err(Error::Precondition(format!("unknown labelling {labels}"))),
        }
    };
    match build() {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(AcCrystal { graph }));
            AcStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Release a crystal handle.
///
/// # Safety
/// `handle` must be null or a pointer from [`ac_crystal_build`], not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_free(handle: *mut AcCrystal) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of vertices in the built graph.
///
/// # Safety
/// `handle` must be a live pointer from [`ac_crystal_build`].
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_vertex_count(handle: *const AcCrystal) -> u64 {
    if handle.is_null() {
        return 0;
    }
    (*handle).graph.vertex_count() as u64
}

/// Vertex counts per principal degree 0..=max_degree, written into `out`
/// (capacity `len`); returns the number of entries written.
///
/// # Safety
/// `handle` must be live and `out` must point to at least `len` u64 slots.
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_counts_by_degree(
    handle: *const AcCrystal,
    out: *mut u64,
    len: usize,
) -> usize {
    if handle.is_null() || out.is_null() {
        return 0;
    }
    let counts = (*handle).graph.counts_by_degree();
    let written = counts.len().min(len);
    for (i, &c) in counts.iter().take(written).enumerate() {
        *out.add(i) = c as u64;
    }
    written
}

/// The deterministic DOT rendering of the graph.
///
/// # Safety
/// `handle` must be live; `out` receives a string to free with
/// [`ac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_dot(
    handle: *const AcCrystal,
    out: *mut *mut c_char,
) -> AcStatus {
    if handle.is_null() {
        set_error("crystal handle is null");
        return AcStatus::InvalidArgument;
    }
    write_string(out, (*handle).graph.to_dot())
}

/// The JSON dump {vertices, edges, …} of the graph.
///
/// # Safety
/// As for [`ac_crystal_dot`].
#[no_mangle]
pub unsafe extern "C" fn ac_crystal_json(
    handle: *const AcCrystal,
    out: *mut *mut c_char,
) -> AcStatus {
    if handle.is_null() {
        set_error("crystal handle is null");
        return AcStatus::InvalidArgument;
    }
    let json = serde_json::to_string(&(*handle).graph.to_json()).expect("serializable");
    write_string(out, json)
}

/// Weight multiplicities of V(Λ) to the given principal degree, as a JSON
/// object {"weight string": multiplicity, …}; the crystal and path routes
/// are cross-checked internally.
///
/// # Safety
/// `weight` must be a valid string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_character_json(
    n: u32,
    weight: *const c_char,
    max_degree: u32,
    out: *mut *mut c_char,
) -> AcStatus {
    let weight = match read_str(weight, "weight") {
        Ok(s) => s,
        Err(code) => return code,
    };
    let compute = || -> Result<String, Error> {
        let w = AffineWeight::parse(n, weight)?;
        let table = affine_crystal::crystal::character(&w, max_degree)?;
        let map: std::collections::BTreeMap<String, u64> =
            table.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        Ok(serde_json::to_string(&map).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}

/// The branching function b^Λ_{Λ'Λ''} to order `truncation` as JSON
/// {"offset", "coeffs"}.  `method`: 0 multipartitions, 1 paths, 2 theta,
/// 3 all-with-cross-check.
///
/// # Safety
/// String arguments must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_branching_json(
    n: u32,
    lambda_prime: *const c_char,
    lambda_second: *const c_char,
    lambda: *const c_char,
    truncation: u32,
    method: c_int,
    out: *mut *mut c_char,
) -> AcStatus {
    let (lp, ls, lam) = match (
        read_str(lambda_prime, "lambda_prime"),
        read_str(lambda_second, "lambda_second"),
        read_str(lambda, "lambda"),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let compute = || -> Result<String, Error> {
        let method = match method {
            0 => BranchingMethod::Multipartitions,
            1 => BranchingMethod::Paths,
            2 => BranchingMethod::Theta,
            3 => BranchingMethod::All,
            _ => return Err(Error::Precondition(format!("unknown method {method}"))),
        };
        let series = branching_series(
            &AffineWeight::parse(n, lp)?,
            &AffineWeight::parse(n, ls)?,
            &AffineWeight::parse(n, lam)?,
            truncation as usize,
            method,
        )?;
        Ok(serde_json::to_string(&series.to_json()).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}

/// The JS generating function for charge profile `i` and condition `j`
/// (comma-separated integer lists), cross-checked internally.
///
/// # Safety
/// String arguments must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_js_series_json(
    n: u32,
    i_profile: *const c_char,
    j_profile: *const c_char,
    truncation: u32,
    out: *mut *mut c_char,
) -> AcStatus {
    let (i_str, j_str) = match (read_str(i_profile, "i"), read_str(j_profile, "j")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let compute = || -> Result<String, Error> {
        let series = js_generating_function(
            n,
            &parse_profile(n, i_str)?,
            &parse_profile(n, j_str)?,
            truncation as usize,
        )?;
        Ok(serde_json::to_string(&series.to_json()).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}

/// The JS(j) module labels of H_m(i) as a JSON array of multipartitions.
///
/// # Safety
/// String arguments must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_js_modules_json(
    n: u32,
    i_profile: *const c_char,
    j_profile: *const c_char,
    m: u32,
    out: *mut *mut c_char,
) -> AcStatus {
    let (i_str, j_str) = match (read_str(i_profile, "i"), read_str(j_profile, "j")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let compute = || -> Result<String, Error> {
        let labels = js_modules(n, &parse_profile(n, i_str)?, &parse_profile(n, j_str)?, m)?;
        Ok(serde_json::to_string(&labels).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}

/// The ♯ image of a restricted highest-lift multipartition (JSON in, JSON
/// out).
///
/// # Safety
/// String arguments must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_sharp_json(
    multipartition_json: *const c_char,
    lambda_prime: *const c_char,
    out: *mut *mut c_char,
) -> AcStatus {
    let (mp_str, lp_str) = match (
        read_str(multipartition_json, "multipartition"),
        read_str(lambda_prime, "lambda_prime"),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let compute = || -> Result<String, Error> {
        let mp: ColoredMultipartition = serde_json::from_str(mp_str)
            .map_err(|e| Error::Parse(format!("bad multipartition JSON: {e}")))?;
        let lp = AffineWeight::parse(mp.n(), lp_str)?;
        let image = sharp_multipartition(&mp, &lp)?;
        Ok(serde_json::to_string(&image).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}

/// The highest-lift multipartition of a path in text form
/// ("steps|weight"), as JSON.
///
/// # Safety
/// String arguments must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ac_highest_lift_json(
    n: u32,
    path: *const c_char,
    out: *mut *mut c_char,
) -> AcStatus {
    let path = match read_str(path, "path") {
        Ok(s) => s,
        Err(code) => return code,
    };
    let compute = || -> Result<String, Error> {
        let p = Path::parse(n, path)?;
        let lift = p.highest_lift()?;
        Ok(serde_json::to_string(&lift).expect("serializable"))
    };
    match compute() {
        Ok(json) => write_string(out, json),
        Err(err) => fail(err),
    }
}
