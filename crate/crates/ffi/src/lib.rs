//! C ABI over protrusionkit. Objects are opaque heap handles released with
//! their `*_free` function. Every fallible call returns a [`PkStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`pk_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use protrusionkit::eds::eds_kernelize;
use protrusionkit::fdeletion::{Family, Solver, SolverOptions};
use protrusionkit::graph::{is_minor, parse_graph};
use protrusionkit::protrusion::{build_protrusion_decomposition, ProtrusionDecomposition};
use protrusionkit::treewidth::exact_treewidth;
use protrusionkit::{Error, Graph, VertexSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PkStatus {
    Ok = 0,
    /// The instance has no solution within the budget.
    No = 1,
    NullPointer = -1,
    InvalidArgument = -2,
    /// A size cap of an exact routine was exceeded.
    LimitExceeded = -3,
    /// The modulator does not bound the treewidth as required.
    InvalidModulator = -4,
    Parse = -5,
    BufferTooSmall = -6,
    Internal = -7,
}

pub struct PkGraph(Graph);
pub struct PkFamily(Family);
pub struct PkProtrusionDecomposition(ProtrusionDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &Error) -> PkStatus {
    match e {
        Error::PatternTooLarge { .. }
        | Error::HostTooLarge { .. }
        | Error::ExactTreewidthTooLarge { .. }
        | Error::CliqueCensusTooLarge { .. }
        | Error::BruteForceTooLarge { .. }
        | Error::EdsTooLarge { .. }
        | Error::EnumerationTooLarge { .. } => PkStatus::LimitExceeded,
        Error::ModulatorInvalid { .. } | Error::NotASolution => PkStatus::InvalidModulator,
        Error::Parse { .. } => PkStatus::Parse,
        Error::Invariant(_) => PkStatus::Internal,
        _ => PkStatus::InvalidArgument,
    }
}

/// Runs `f`, translating library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<PkStatus, Error>) -> PkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            PkStatus::Internal
        }
    }
}

fn null_error() -> PkStatus {
    set_error("null pointer argument");
    PkStatus::NullPointer
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// A graph on vertices `0..n` without edges.
#[no_mangle]
pub extern "C" fn pk_graph_new(n: usize) -> *mut PkGraph {
    Box::into_raw(Box::new(PkGraph(Graph::new(n))))
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_graph_free(g: *mut PkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pk_graph_add_edge(g: *mut PkGraph, u: usize, v: usize) -> PkStatus {
    let Some(g) = g.as_mut() else {
        return null_error();
    };
    guard(|| {
        if !g.0.contains(u) || !g.0.contains(v) {
            return Err(Error::VertexNotFound(if g.0.contains(u) { v } else { u }));
        }
        if !g.0.has_edge(u, v) {
            g.0.add_edge(u, v)?;
        }
        Ok(PkStatus::Ok)
    })
}

/// Parses the text format (`n m` header, one `u v` edge per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_graph_parse(text: *const c_char, out: *mut *mut PkGraph) -> PkStatus {
    if text.is_null() || out.is_null() {
        return null_error();
    }
    let text = CStr::from_ptr(text).to_string_lossy().into_owned();
    guard(|| {
        let g = parse_graph(&text)?;
        *out = Box::into_raw(Box::new(PkGraph(g)));
        Ok(PkStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pk_graph_vertex_count(g: *const PkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pk_graph_edge_count(g: *const PkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Whether `h` is a minor of `g`.
///
/// # Safety
/// `h` and `g` must be live graph handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_is_minor(
    h: *const PkGraph,
    g: *const PkGraph,
    out: *mut bool,
) -> PkStatus {
    let (Some(h), Some(g)) = (h.as_ref(), g.as_ref()) else {
        return null_error();
    };
    if out.is_null() {
        return null_error();
    }
    guard(|| {
        *out = is_minor(&h.0, &g.0)?;
        Ok(PkStatus::Ok)
    })
}

/// Exact treewidth.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_treewidth(g: *const PkGraph, out: *mut usize) -> PkStatus {
    let Some(g) = g.as_ref() else {
        return null_error();
    };
    if out.is_null() {
        return null_error();
    }
    guard(|| {
        *out = exact_treewidth(&g.0)?.0;
        Ok(PkStatus::Ok)
    })
}

unsafe fn vertex_set(ptr: *const usize, len: usize) -> Option<VertexSet> {
    if len == 0 {
        return Some(VertexSet::new());
    }
    if ptr.is_null() {
        return None;
    }
    Some(
        std::slice::from_raw_parts(ptr, len)
            .iter()
            .copied()
            .collect(),
    )
}

/// Protrusion decomposition for the modulator `x[0..x_len]`.
///
/// # Safety
/// `g` must be a live graph handle, `x` must point to `x_len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_protrusion_decompose(
    g: *const PkGraph,
    x: *const usize,
    x_len: usize,
    r: usize,
    t: usize,
    out: *mut *mut PkProtrusionDecomposition,
) -> PkStatus {
    let (Some(g), Some(x)) = (g.as_ref(), vertex_set(x, x_len)) else {
        return null_error();
    };
    if out.is_null() {
        return null_error();
    }
    guard(|| {
        let pd = build_protrusion_decomposition(&g.0, &x, r, t)?;
        *out = Box::into_raw(Box::new(PkProtrusionDecomposition(pd)));
        Ok(PkStatus::Ok)
    })
}

/// # Safety
/// `pd` must be null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn pk_protrusion_free(pd: *mut PkProtrusionDecomposition) {
    if !pd.is_null() {
        drop(Box::from_raw(pd));
    }
}

/// `|Y0|`.
///
/// # Safety
/// `pd` must be a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn pk_protrusion_y0_size(pd: *const PkProtrusionDecomposition) -> usize {
    pd.as_ref().map_or(0, |p| p.0.y0.len())
}

/// Number of clusters `ℓ`.
///
/// # Safety
/// `pd` must be a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn pk_protrusion_cluster_count(
    pd: *const PkProtrusionDecomposition,
) -> usize {
    pd.as_ref().map_or(0, |p| p.0.clusters.len())
}

/// The decomposition as JSON; release with [`pk_string_free`].
///
/// # Safety
/// `pd` must be a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn pk_protrusion_to_json(
    pd: *const PkProtrusionDecomposition,
) -> *mut c_char {
    let Some(pd) = pd.as_ref() else {
        null_error();
        return ptr::null_mut();
    };
    let json = serde_json::to_string(&pd.0).unwrap_or_default();
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Kernelizes Edge Dominating Set. Writes the reduced graph and budget, or
/// returns [`PkStatus::No`] when the matching bound rejects the instance.
///
/// # Safety
/// `g` must be a live graph handle; `out_graph` and `out_k` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_eds_kernelize(
    g: *const PkGraph,
    k: usize,
    r: usize,
    out_graph: *mut *mut PkGraph,
    out_k: *mut usize,
) -> PkStatus {
    let Some(g) = g.as_ref() else {
        return null_error();
    };
    if out_graph.is_null() || out_k.is_null() {
        return null_error();
    }
    guard(|| match eds_kernelize(&g.0, k, r)? {
        None => Ok(PkStatus::No),
        Some(kern) => {
            *out_k = kern.k;
            *out_graph = Box::into_raw(Box::new(PkGraph(kern.graph)));
            Ok(PkStatus::Ok)
        }
    })
}

/// A family from `len` pattern graphs; the patterns are copied.
///
/// # Safety
/// `patterns` must point to `len` live graph handles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_family_new(
    patterns: *const *const PkGraph,
    len: usize,
    out: *mut *mut PkFamily,
) -> PkStatus {
    if (patterns.is_null() && len > 0) || out.is_null() {
        return null_error();
    }
    let handles = if len == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(patterns, len)
    };
    let mut graphs = Vec::with_capacity(len);
    for &h in handles {
        let Some(h) = h.as_ref() else {
            return null_error();
        };
        graphs.push(h.0.clone());
    }
    guard(|| {
        *out = Box::into_raw(Box::new(PkFamily(Family::new(graphs)?)));
        Ok(PkStatus::Ok)
    })
}

/// # Safety
/// `f` must be null or a live family handle.
#[no_mangle]
pub unsafe extern "C" fn pk_family_free(f: *mut PkFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Solves Planar-F-Deletion. On success writes the solution into
/// `out[0..*out_len]`; returns [`PkStatus::No`] when none of size `k`
/// exists and [`PkStatus::BufferTooSmall`] (with `*out_len` set) when
/// `capacity` is too small. `tf` of zero selects the built-in bound.
///
/// # Safety
/// `g`, `f` must be live handles, `out` must have room for `capacity`
/// values and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_fdeletion_solve(
    g: *const PkGraph,
    f: *const PkFamily,
    k: usize,
    tf: usize,
    out: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> PkStatus {
    let (Some(g), Some(f)) = (g.as_ref(), f.as_ref()) else {
        return null_error();
    };
    if out_len.is_null() || (out.is_null() && capacity > 0) {
        return null_error();
    }
    guard(|| {
        let opts = SolverOptions {
            tf: (tf > 0).then_some(tf),
            ..Default::default()
        };
        let Some(sol) = Solver::new(&f.0, opts)?.solve(&g.0, k)? else {
            *out_len = 0;
            return Ok(PkStatus::No);
        };
        *out_len = sol.len();
        if sol.len() > capacity {
            set_error(format!(
                "solution has {} vertices, buffer {capacity}",
                sol.len()
            ));
            return Ok(PkStatus::BufferTooSmall);
        }
        for (i, v) in sol.into_iter().enumerate() {
            *out.add(i) = v;
        }
        Ok(PkStatus::Ok)
    })
}
