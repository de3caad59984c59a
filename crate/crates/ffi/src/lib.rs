//! C ABI over `avgconn`.
//!
//! Every fallible call returns an [`AvgStatus`]; on failure the message is
//! kept per thread and read back with [`avg_last_error_message`]. Handles are
//! opaque and owned by the caller until passed to the matching `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use avgconn::connectivity::{report_graph_with, total_connectivity_with, Measure};
use avgconn::search::{search, Method, SearchOptions, SearchResult};
use avgconn::{Error, Graph, Orientation, Rational};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AvgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    InvalidParameter = 5,
    EdgeCapExceeded = 6,
    Overflow = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AvgMethod {
    Exhaustive = 0,
    BranchAndBound = 1,
    LocalSearch = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AvgObjective {
    Vertex = 0,
    Edge = 1,
}

pub struct AvgGraph(Graph);
pub struct AvgOrientation(Orientation);
pub struct AvgSearchResult(SearchResult);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> AvgStatus {
    match err {
        Error::EdgeCapExceeded { .. } => AvgStatus::EdgeCapExceeded,
        Error::InvalidParameter(_) => AvgStatus::InvalidParameter,
        e if e.exit_code() == 2 => AvgStatus::Parse,
        _ => AvgStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (AvgStatus, String)>) -> AvgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            AvgStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            AvgStatus::Panic
        }
    }
}

fn lib(e: Error) -> (AvgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (AvgStatus, String) {
    (AvgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (AvgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (AvgStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (AvgStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (AvgStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_ratio(r: &Rational, num: *mut u64, den: *mut u64) -> Result<(), (AvgStatus, String)> {
    if num.is_null() || den.is_null() {
        return Err(null("output"));
    }
    let (a, b) = r
        .as_i64_pair()
        .ok_or_else(|| (AvgStatus::Overflow, format!("{r} does not fit in 64 bits")))?;
    num.write(a as u64);
    den.write(b as u64);
    Ok(())
}

/// Copies `s` plus a terminating NUL into `buf` when it fits. The byte count
/// needed (including the NUL) is stored in `needed` either way.
unsafe fn write_string(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), (AvgStatus, String)> {
    if !needed.is_null() {
        needed.write(s.len() + 1);
    }
    if buf.is_null() || len == 0 {
        return Ok(());
    }
    let n = s.len().min(len - 1);
    ptr::copy_nonoverlapping(s.as_ptr() as *const c_char, buf, n);
    buf.add(n).write(0);
    Ok(())
}

fn measure(o: AvgObjective) -> Measure {
    match o {
        AvgObjective::Vertex => Measure::Vertex,
        AvgObjective::Edge => Measure::Edge,
    }
}

/// Copies the last error message of this thread. Returns the length needed
/// including the NUL; 1 means no error is recorded.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn avg_last_error_message(buf: *mut c_char, len: usize) -> usize {
    let mut needed = 0;
    LAST_ERROR.with(|e| {
        let _ = write_string(&e.borrow(), buf, len, &mut needed);
    });
    needed
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_from_graph6(text: *const c_char, out: *mut *mut AvgGraph) -> AvgStatus {
    guard(|| {
        let g = Graph::from_graph6(read_str(text, "text")?).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(AvgGraph(g))), "out")
    })
}

/// Parses the edge-list text form (`n m` header, then one edge per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_from_edge_list(text: *const c_char, out: *mut *mut AvgGraph) -> AvgStatus {
    guard(|| {
        let g = Graph::from_edge_list_text(read_str(text, "text")?).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(AvgGraph(g))), "out")
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_free(g: *mut AvgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_order(g: *const AvgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_size(g: *const AvgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Exact average connectivity of an undirected graph as `num / den`.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn avg_graph_average(
    g: *const AvgGraph,
    objective: AvgObjective,
    num: *mut u64,
    den: *mut u64,
) -> AvgStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let r = report_graph_with(&g.0, measure(objective)).map_err(lib)?;
        write_ratio(&r.average, num, den)
    })
}

/// Builds an orientation of `g` from its packed hex bit string. The graph is
/// copied, so `g` may be freed afterwards.
///
/// # Safety
/// `g` must be a live handle, `hex` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn avg_orientation_from_hex(
    g: *const AvgGraph,
    hex: *const c_char,
    out: *mut *mut AvgOrientation,
) -> AvgStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let o = Orientation::from_bits_hex(g.0.clone(), read_str(hex, "hex")?).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(AvgOrientation(o))), "out")
    })
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn avg_orientation_free(o: *mut AvgOrientation) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// Total connectivity of the oriented graph, summed over ordered pairs.
///
/// # Safety
/// `o` must be a live handle and `total` writable.
#[no_mangle]
pub unsafe extern "C" fn avg_orientation_total(
    o: *const AvgOrientation,
    objective: AvgObjective,
    total: *mut u64,
) -> AvgStatus {
    guard(|| {
        let o = deref(o, "orientation")?;
        write_out(total, total_connectivity_with(&o.0, measure(objective)), "total")
    })
}

/// Runs an orientation search. `threads` 0 means the library default.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn avg_search(
    g: *const AvgGraph,
    method: AvgMethod,
    objective: AvgObjective,
    threads: usize,
    seed: u64,
    out: *mut *mut AvgSearchResult,
) -> AvgStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let method = match method {
            AvgMethod::Exhaustive => Method::Exhaustive,
            AvgMethod::BranchAndBound => Method::BranchAndBound,
            AvgMethod::LocalSearch => Method::LocalSearch,
        };
        let mut opts = SearchOptions::default().objective(measure(objective)).seed(seed);
        if threads > 0 {
            opts = opts.threads(threads);
        }
        let r = search(&g.0, method, &opts).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(AvgSearchResult(r))), "out")
    })
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn avg_search_result_free(r: *mut AvgSearchResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Best total and its average `num / den` over `n(n-1)` ordered pairs.
///
/// # Safety
/// `r` must be a live handle; all outputs writable.
#[no_mangle]
pub unsafe extern "C" fn avg_search_result_best(
    r: *const AvgSearchResult,
    total: *mut u64,
    num: *mut u64,
    den: *mut u64,
) -> AvgStatus {
    guard(|| {
        let r = deref(r, "result")?;
        write_out(total, r.0.best_total, "total")?;
        write_ratio(&r.0.best_average, num, den)
    })
}

/// Whether the result is a proven optimum (exhaustive or branch-and-bound).
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn avg_search_result_certified(r: *const AvgSearchResult) -> bool {
    r.as_ref().is_some_and(|r| r.0.certified)
}

/// Writes the witness orientation as packed hex. See
/// [`avg_last_error_message`] for the buffer convention; `needed` may be null.
///
/// # Safety
/// `r` must be a live handle; `buf` null or `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn avg_search_result_witness_hex(
    r: *const AvgSearchResult,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> AvgStatus {
    guard(|| {
        let r = deref(r, "result")?;
        write_string(&r.0.witness.bits_hex(), buf, len, needed)
    })
}

/// Copies the witness into a new orientation handle.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn avg_search_result_witness(
    r: *const AvgSearchResult,
    out: *mut *mut AvgOrientation,
) -> AvgStatus {
    guard(|| {
        let r = deref(r, "result")?;
        write_out(out, Box::into_raw(Box::new(AvgOrientation(r.0.witness.clone()))), "out")
    })
}
