//! C ABI for the gembed library.
//!
//! Gems are exposed as opaque handles created from the rotation text
//! format or gem JSON and freed with `gembed_gem_free`. Functions return
//! `GEMBED_OK` or a negative error code; `gembed_last_error` returns a
//! thread-local message for the most recent failure. Strings returned by
//! the library are freed with `gembed_string_free`.
//!
//! Edge subsets are 64-bit masks over dense edge ids, matching the CLI.

use gembed::c2c::{is_closed_2cell, separating_features, Verdict};
use gembed::conditions::{conditions_predict_c2c, Predicted};
use gembed::duality::{partial_dual, partial_petrie};
use gembed::gem::Gem;
use gembed::io::{gem_to_json, parse_gem_json, parse_rotation, NameTable};
use gembed::rotation::gem_from_rotation;
use gembed::search::{find_c2c_duals, SearchMode, SearchOptions};
use gembed::subset::EdgeSubset;
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
#[cfg(test)]
use std::ptr;

pub const GEMBED_OK: c_int = 0;
pub const GEMBED_ERR_ARGUMENT: c_int = -1;
pub const GEMBED_ERR_PARSE: c_int = -2;
pub const GEMBED_ERR_INVALID: c_int = -3;
pub const GEMBED_ERR_UTF8: c_int = -4;
pub const GEMBED_ERR_SEARCH: c_int = -5;

/// Closed 2-cell verdicts returned by `gembed_is_closed_2cell` and
/// `gembed_conditions_predict`.
pub const GEMBED_C2C_NO: c_int = 0;
pub const GEMBED_C2C_YES: c_int = 1;
pub const GEMBED_C2C_DEGENERATE: c_int = 2;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let cleaned = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

/// An embedding handle: a gem plus the edge names it was loaded with.
pub struct GembedGem {
    gem: Gem,
    names: NameTable,
}

/// V/E/F counts and surface data of an embedding.
#[repr(C)]
pub struct GembedSummary {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub euler_genus: i64,
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, c_int> {
    if text.is_null() {
        set_error("null pointer argument");
        return Err(GEMBED_ERR_ARGUMENT);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        GEMBED_ERR_UTF8
    })
}

unsafe fn gem_arg<'a>(gem: *const GembedGem) -> Result<&'a GembedGem, c_int> {
    if gem.is_null() {
        set_error("null gem handle");
        return Err(GEMBED_ERR_ARGUMENT);
    }
    Ok(&*gem)
}

fn subset_arg(handle: &GembedGem, mask: u64) -> Result<EdgeSubset, c_int> {
    EdgeSubset::from_mask(mask, handle.gem.edge_count()).map_err(|e| {
        set_error(&e.to_string());
        GEMBED_ERR_ARGUMENT
    })
}

fn out_gem(out: *mut *mut GembedGem, handle: GembedGem) -> c_int {
    if out.is_null() {
        set_error("null output pointer");
        return GEMBED_ERR_ARGUMENT;
    }
    unsafe {
        *out = Box::into_raw(Box::new(handle));
    }
    GEMBED_OK
}

/// Message for the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gembed_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses the rotation text format into a gem handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_from_rotation_text(
    text: *const c_char,
    out: *mut *mut GembedGem,
) -> c_int {
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let (rot, names) = match parse_rotation(text) {
        Ok(v) => v,
        Err(e) => {
            set_error(&e.to_string());
            return GEMBED_ERR_PARSE;
        }
    };
    match gem_from_rotation(&rot) {
        Ok(gem) => out_gem(out, GembedGem { gem, names }),
        Err(e) => {
            set_error(&e.to_string());
            GEMBED_ERR_INVALID
        }
    }
}

/// Parses gem JSON into a gem handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_from_json(
    text: *const c_char,
    out: *mut *mut GembedGem,
) -> c_int {
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match parse_gem_json(text) {
        Ok((gem, names)) => out_gem(out, GembedGem { gem, names }),
        Err(e) => {
            set_error(&e.to_string());
            GEMBED_ERR_PARSE
        }
    }
}

/// Serializes a gem handle to JSON; free the result with
/// `gembed_string_free`.
///
/// # Safety
/// `gem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_to_json(
    gem: *const GembedGem,
    out: *mut *mut c_char,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    if out.is_null() {
        set_error("null output pointer");
        return GEMBED_ERR_ARGUMENT;
    }
    let text = gem_to_json(&handle.gem, &handle.names);
    match CString::new(text) {
        Ok(cstring) => {
            *out = cstring.into_raw();
            GEMBED_OK
        }
        Err(_) => {
            set_error("serialized gem contained a NUL byte");
            GEMBED_ERR_INVALID
        }
    }
}

/// Frees a string returned by this library.
///
/// # Safety
/// `text` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gembed_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Frees a gem handle.
///
/// # Safety
/// `gem` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_free(gem: *mut GembedGem) {
    if !gem.is_null() {
        drop(Box::from_raw(gem));
    }
}

/// Number of graph edges.
///
/// # Safety
/// `gem` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_edge_count(gem: *const GembedGem) -> i64 {
    match gem_arg(gem) {
        Ok(h) => h.gem.edge_count() as i64,
        Err(code) => code as i64,
    }
}

/// Fills `out` with the embedding summary.
///
/// # Safety
/// `gem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_gem_summary(
    gem: *const GembedGem,
    out: *mut GembedSummary,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    if out.is_null() {
        set_error("null output pointer");
        return GEMBED_ERR_ARGUMENT;
    }
    let s = handle.gem.summary();
    *out = GembedSummary {
        vertices: s.vertex_count() as u64,
        edges: s.edge_count() as u64,
        faces: s.face_count() as u64,
        euler_characteristic: s.euler_characteristic,
        orientable: s.orientable,
        euler_genus: s.euler_genus,
    };
    GEMBED_OK
}

/// Partial geometric dual over the edge mask.
///
/// # Safety
/// `gem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_partial_dual(
    gem: *const GembedGem,
    mask: u64,
    out: *mut *mut GembedGem,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let subset = match subset_arg(handle, mask) {
        Ok(s) => s,
        Err(code) => return code,
    };
    out_gem(
        out,
        GembedGem {
            gem: partial_dual(&handle.gem, subset),
            names: handle.names.clone(),
        },
    )
}

/// Partial Petrie dual over the edge mask.
///
/// # Safety
/// `gem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_partial_petrie(
    gem: *const GembedGem,
    mask: u64,
    out: *mut *mut GembedGem,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let subset = match subset_arg(handle, mask) {
        Ok(s) => s,
        Err(code) => return code,
    };
    out_gem(
        out,
        GembedGem {
            gem: partial_petrie(&handle.gem, subset),
            names: handle.names.clone(),
        },
    )
}

/// Closed 2-cell verdict for the embedding itself: `GEMBED_C2C_YES`,
/// `GEMBED_C2C_NO` or `GEMBED_C2C_DEGENERATE`.
///
/// # Safety
/// `gem` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gembed_is_closed_2cell(gem: *const GembedGem) -> c_int {
    match gem_arg(gem) {
        Ok(h) => match is_closed_2cell(&h.gem) {
            Verdict::Yes => GEMBED_C2C_YES,
            Verdict::No { .. } => GEMBED_C2C_NO,
            Verdict::Degenerate => GEMBED_C2C_DEGENERATE,
        },
        Err(code) => code,
    }
}

/// Predicts through the conditions path whether the partial dual over
/// `mask` is closed 2-cell, without constructing it.
///
/// # Safety
/// `gem` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gembed_conditions_predict(
    gem: *const GembedGem,
    mask: u64,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let subset = match subset_arg(handle, mask) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match conditions_predict_c2c(&handle.gem, subset).predicted_c2c {
        Predicted::Yes => GEMBED_C2C_YES,
        Predicted::No => GEMBED_C2C_NO,
        Predicted::Degenerate => GEMBED_C2C_DEGENERATE,
    }
}

/// True iff some separating feature blocks every partial dual.
///
/// # Safety
/// `gem` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gembed_blocks_all_partial_duals(gem: *const GembedGem) -> c_int {
    match gem_arg(gem) {
        Ok(h) => separating_features(&h.gem).blocks_all_partial_duals as c_int,
        Err(code) => code,
    }
}

/// Runs the cross-checking search and returns the report as JSON; free it
/// with `gembed_string_free`. `cap` bounds the edge count.
///
/// # Safety
/// `gem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gembed_search_json(
    gem: *const GembedGem,
    cap: u64,
    out: *mut *mut c_char,
) -> c_int {
    let handle = match gem_arg(gem) {
        Ok(h) => h,
        Err(code) => return code,
    };
    if out.is_null() {
        set_error("null output pointer");
        return GEMBED_ERR_ARGUMENT;
    }
    let mut opts = SearchOptions::new(SearchMode::CrossCheck);
    opts.cap = cap as usize;
    match find_c2c_duals(&handle.gem, &opts) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match CString::new(text) {
                Ok(cstring) => {
                    *out = cstring.into_raw();
                    GEMBED_OK
                }
                Err(_) => {
                    set_error("report contained a NUL byte");
                    GEMBED_ERR_SEARCH
                }
            }
        }
        Err(e) => {
            set_error(&e.to_string());
            GEMBED_ERR_SEARCH
        }
    }
}
