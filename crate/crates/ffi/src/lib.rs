//! C interface to `regiongray`.
//!
//! Every function returns an [`RgStatus`]; on failure the message is kept per
//! thread and read back with [`rg_last_error`]. Listings and arrangements are
//! opaque handles owned by the caller and released with their `_free`
//! function. Strings passed in must be NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use regiongray::arrangement::{canonical_base_regions, HyperplaneArrangement, SupersolvableChain};
use regiongray::zigzag::ham_cycle_from;
use regiongray::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RgStatus {
    Ok = 0,
    /// Malformed or out-of-range input.
    Input = 1,
    /// An internal structural check failed.
    Structure = 2,
    /// A size guard was exceeded.
    Refused = 3,
    /// A required pointer was null.
    Null = 4,
    /// A listing failed verification.
    Invalid = 5,
    /// Index out of range.
    Range = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn fail(status: RgStatus, msg: impl Into<String>) -> RgStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> RgStatus {
    let status = match e {
        Error::Input(_) => RgStatus::Input,
        Error::Structure(_) => RgStatus::Structure,
        Error::Refused(_) => RgStatus::Refused,
    };
    fail(status, e.to_string())
}

fn guarded(f: impl FnOnce() -> RgStatus) -> RgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(RgStatus::Panic, "panic inside regiongray"),
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, RgStatus> {
    if p.is_null() {
        return Err(fail(RgStatus::Null, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RgStatus::Input, "string is not UTF-8"))
}

/// Message of the last failed call on this thread; empty if none. Valid until
/// the next call that fails.
#[no_mangle]
pub extern "C" fn rg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// A finished listing, one object per line.
pub struct RgListing {
    lines: Vec<CString>,
    cyclic: bool,
}

/// An arrangement with its optional supersolvable chain.
pub struct RgArrangement {
    arr: HyperplaneArrangement,
    chain: Option<SupersolvableChain>,
}

/// Runs the command-line front end, returning exit status and output streams.
fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["regiongray"];
    argv.extend_from_slice(args);
    let code = regiongray::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).trim().to_string(),
    )
}

fn cli_status(code: i32, err: &str) -> RgStatus {
    match code {
        0 => RgStatus::Ok,
        1 => fail(RgStatus::Invalid, err),
        _ if err.contains("refused") => fail(RgStatus::Refused, err),
        _ => fail(RgStatus::Input, err),
    }
}

fn listing_from_text(out: &str) -> RgListing {
    let mut cyclic = false;
    let mut lines = Vec::new();
    for line in out.lines() {
        if let Some(h) = line.strip_prefix("# cyclic:") {
            cyclic = h.trim() == "true";
        } else if !line.starts_with('#') && !line.is_empty() {
            lines.push(CString::new(line).expect("listing lines have no NUL"));
        }
    }
    RgListing { lines, cyclic }
}

/// Generates the Gray code of a built-in family (`binary`, `perm`,
/// `signed-perm`, `acyclic` on the complete graph, `sym-triangulation`).
///
/// # Safety
/// `family` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rg_generate(family: *const c_char, n: u32, out: *mut *mut RgListing) -> RgStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RgStatus::Null, "null output pointer");
        }
        let family = match text(family) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let n = n.to_string();
        let (code, stdout, err) = cli(&["generate", "--family", family, "--n", &n], "");
        let status = cli_status(code, &err);
        if status == RgStatus::Ok {
            *out = Box::into_raw(Box::new(listing_from_text(&stdout)));
        }
        status
    })
}

/// Number of lines in a listing (0 for a null handle).
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rg_listing_len(l: *const RgListing) -> usize {
    l.as_ref().map_or(0, |l| l.lines.len())
}

/// Whether the listing closes into a cycle.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rg_listing_is_cyclic(l: *const RgListing) -> bool {
    l.as_ref().is_some_and(|l| l.cyclic)
}

/// Line `i` of a listing, owned by the listing; null when out of range.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rg_listing_line(l: *const RgListing, i: usize) -> *const c_char {
    match l.as_ref().and_then(|l| l.lines.get(i)) {
        Some(s) => s.as_ptr(),
        None => {
            set_error(format!("line {i} out of range"));
            ptr::null()
        }
    }
}

/// # Safety
/// `l` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn rg_listing_free(l: *mut RgListing) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of objects in a built-in family.
///
/// # Safety
/// `family` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rg_count(family: *const c_char, n: u32, out: *mut u64) -> RgStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RgStatus::Null, "null output pointer");
        }
        let family = match text(family) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let (code, stdout, err) = cli(&["count", "--family", family, "--n", &n.to_string()], "");
        let status = cli_status(code, &err);
        if status == RgStatus::Ok {
            match stdout.trim().parse() {
                Ok(k) => *out = k,
                Err(_) => {
                    return fail(
                        RgStatus::Range,
                        format!("count {} does not fit in 64 bits", stdout.trim()),
                    )
                }
            }
        }
        status
    })
}

/// Checks listing text (header lines optional) against a built-in family.
/// Returns `RG_STATUS_INVALID` with the first violation in the error message
/// when the listing is not a Hamiltonian cycle or path.
///
/// # Safety
/// `family` and `listing` must be valid C strings.
#[no_mangle]
pub unsafe extern "C" fn rg_verify_text(family: *const c_char, n: u32, listing: *const c_char) -> RgStatus {
    guarded(|| {
        let (family, listing) = match (text(family), text(listing)) {
            (Ok(f), Ok(l)) => (f, l),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let (code, _, err) = cli(&["verify", "--family", family, "--n", &n.to_string()], listing);
        cli_status(code, &err)
    })
}

/// Parses `{"dim": d, "normals": [...], "chain": [...]}`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_from_json(json: *const c_char, out: *mut *mut RgArrangement) -> RgStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RgStatus::Null, "null output pointer");
        }
        let json = match text(json) {
            Ok(j) => j,
            Err(s) => return s,
        };
        match HyperplaneArrangement::from_json(json) {
            Ok((arr, chain)) => {
                *out = Box::into_raw(Box::new(RgArrangement { arr, chain }));
                RgStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `a` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_free(a: *mut RgArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of hyperplanes (0 for a null handle).
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_len(a: *const RgArrangement) -> usize {
    a.as_ref().map_or(0, |a| a.arr.len())
}

/// Rank of the normal vectors (0 for a null handle).
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_rank(a: *const RgArrangement) -> usize {
    a.as_ref().map_or(0, |a| a.arr.rank())
}

/// Counts the regions by exact enumeration.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_region_count(a: *const RgArrangement, out: *mut u64) -> RgStatus {
    guarded(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.arr.enumerate_regions().len() as u64;
            RgStatus::Ok
        }
        _ => fail(RgStatus::Null, "null pointer"),
    })
}

/// Hamiltonian cycle of the region graph from the first canonical base
/// region, as sign strings. Needs the chain given in the JSON.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rg_arrangement_ham_cycle(a: *const RgArrangement, out: *mut *mut RgListing) -> RgStatus {
    guarded(|| {
        let (Some(a), false) = (a.as_ref(), out.is_null()) else {
            return fail(RgStatus::Null, "null pointer");
        };
        let Some(chain) = &a.chain else {
            return fail(RgStatus::Input, "the arrangement has no chain");
        };
        let run = || -> regiongray::Result<RgListing> {
            let graph = a.arr.region_graph();
            let base = canonical_base_regions(&a.arr, chain)?[0];
            let l = ham_cycle_from(&a.arr, chain, &graph, &base)?;
            let lines = l
                .order
                .iter()
                .map(|&i| CString::new(graph.region(i).to_string()).expect("sign strings have no NUL"))
                .collect();
            Ok(RgListing {
                lines,
                cyclic: l.cyclic,
            })
        };
        match run() {
            Ok(l) => {
                *out = Box::into_raw(Box::new(l));
                RgStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
