//! C ABI over `linkroot`.
//!
//! Graphs and root sets are opaque heap handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns an
//! [`LrStatus`]; on failure the message is available from
//! [`lr_last_error_message`] on the same thread. Strings returned by the
//! library must be released with [`lr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use linkroot::incidence::{incidence_flags, path_incidence_flags};
use linkroot::partition::count_cyclic_components;
use linkroot::{
    canonical_form, incidence_subgraph, is_isomorphic, is_l_equivalent, link_graph, minimal_link_roots,
    minimal_path_roots, partitioned_link_graph, path_graph, Error, Multigraph, SearchOptions,
};

/// Opaque multigraph handle.
pub struct LrGraph(Multigraph);

/// Opaque set of minimal roots, ordered by canonical form.
pub struct LrRootSet {
    roots: Vec<LrGraph>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    Budget = 5,
    NotMinimal = 6,
    Internal = 7,
}

/// Component census of the partitioned ℓ-link graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LrCensus {
    pub cyclic: usize,
    pub acyclic: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> LrStatus {
    match err {
        Error::Parse { .. } => LrStatus::Parse,
        Error::CapExceeded { .. } => LrStatus::CapExceeded,
        Error::Budget { .. } => LrStatus::Budget,
        Error::NotMinimal { .. } => LrStatus::NotMinimal,
        Error::Internal(_) => LrStatus::Internal,
        _ => LrStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LrStatus>) -> LrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LrStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside linkroot".into());
            LrStatus::Internal
        }
    }
}

fn fail(err: Error) -> LrStatus {
    let s = status_of(&err);
    set_error(err.to_string());
    s
}

fn null(what: &str) -> LrStatus {
    set_error(format!("{what} is null"));
    LrStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const LrGraph, what: &str) -> Result<&'a Multigraph, LrStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), LrStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed(g: Multigraph) -> *mut LrGraph {
    Box::into_raw(Box::new(LrGraph(g)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn lr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn lr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Graph with `n` vertices and no edges.
#[no_mangle]
pub extern "C" fn lr_graph_new(n: usize) -> *mut LrGraph {
    boxed(Multigraph::new(n))
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_free(g: *mut LrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Appends edge `u-v`; its id is written to `out_edge` when that is non-null.
///
/// # Safety
/// `g` must be a live handle; `out_edge` null or writable.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_add_edge(g: *mut LrGraph, u: usize, v: usize, out_edge: *mut usize) -> LrStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        let e = g.0.add_edge(u, v).map_err(fail)?;
        if !out_edge.is_null() {
            out_edge.write(e);
        }
        Ok(())
    })
}

/// Parses the `mg 1` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_parse(text: *const c_char, out: *mut *mut LrGraph) -> LrStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| {
            set_error(format!("text is not UTF-8: {e}"));
            LrStatus::InvalidArgument
        })?;
        let g = Multigraph::parse(s).map_err(fail)?;
        put(out, boxed(g))
    })
}

/// # Safety
/// `g` must be a live handle. Returns null if `g` is null.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_to_text(g: *const LrGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => c_string(g.0.to_text()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `g` must be null or a live handle; null yields 0.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_vertex_count(g: *const LrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be null or a live handle; null yields 0.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_edge_count(g: *const LrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Endpoints of edge `e`.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_graph_edge(g: *const LrGraph, e: usize, u: *mut usize, v: *mut usize) -> LrStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        g.check_edge(e).map_err(fail)?;
        let (a, b) = g.endpoints(e);
        put(u, a)?;
        put(v, b)
    })
}

/// The ℓ-link graph of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_link_graph(g: *const LrGraph, ell: usize, out: *mut *mut LrGraph) -> LrStatus {
    guard(|| {
        let r = link_graph(graph_ref(g, "graph")?, ell).map_err(fail)?;
        put(out, boxed(r.graph))
    })
}

/// The ℓ-path graph of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_path_graph(g: *const LrGraph, ell: usize, out: *mut *mut LrGraph) -> LrStatus {
    guard(|| {
        let r = path_graph(graph_ref(g, "graph")?, ell).map_err(fail)?;
        put(out, boxed(r.graph))
    })
}

/// The ℓ-incidence subgraph `G[ℓ]`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_incidence_subgraph(g: *const LrGraph, ell: usize, out: *mut *mut LrGraph) -> LrStatus {
    guard(|| {
        let rep = incidence_subgraph(graph_ref(g, "graph")?, ell);
        put(out, boxed(rep.subgraph.graph))
    })
}

/// ℓ-minimality, or ℓ-path-minimality when `path_mode` is set.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_is_minimal(g: *const LrGraph, ell: usize, path_mode: bool, out: *mut bool) -> LrStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let flags = if path_mode {
            path_incidence_flags(g, ell)
        } else {
            incidence_flags(g, ell)
        };
        put(out, flags.all())
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_is_equivalent(a: *const LrGraph, b: *const LrGraph, ell: usize, out: *mut bool) -> LrStatus {
    guard(|| {
        let (a, b) = (graph_ref(a, "first graph")?, graph_ref(b, "second graph")?);
        put(out, is_l_equivalent(a, b, ell))
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_is_isomorphic(a: *const LrGraph, b: *const LrGraph, out: *mut bool) -> LrStatus {
    guard(|| {
        let (a, b) = (graph_ref(a, "first graph")?, graph_ref(b, "second graph")?);
        put(out, is_isomorphic(a, b))
    })
}

/// Canonical form as lowercase hex; equal strings iff isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle. Returns null if `g` is null.
#[no_mangle]
pub unsafe extern "C" fn lr_canonical_hex(g: *const LrGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => c_string(canonical_form(&g.0).to_hex()),
        None => ptr::null_mut(),
    }
}

/// Cyclic and acyclic component counts of the partitioned ℓ-link graph.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_census(g: *const LrGraph, ell: usize, out: *mut LrCensus) -> LrStatus {
    guard(|| {
        let (_, h) = partitioned_link_graph(graph_ref(g, "graph")?, ell).map_err(fail)?;
        let c = count_cyclic_components(&h);
        put(
            out,
            LrCensus {
                cyclic: c.cyclic,
                acyclic: c.acyclic,
            },
        )
    })
}

/// All minimal ℓ-roots of `h` (ℓ-path-roots when `path_mode` is set).
/// `budget_secs <= 0` means no time limit.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lr_roots(
    h: *const LrGraph,
    ell: usize,
    path_mode: bool,
    budget_secs: f64,
    out: *mut *mut LrRootSet,
) -> LrStatus {
    guard(|| {
        let h = graph_ref(h, "target")?;
        let opts = SearchOptions {
            budget: (budget_secs > 0.0 && budget_secs.is_finite()).then(|| Duration::from_secs_f64(budget_secs)),
            ..SearchOptions::default()
        };
        let set = if path_mode {
            minimal_path_roots(h, ell, &opts)
        } else {
            minimal_link_roots(h, ell, &opts)
        }
        .map_err(fail)?;
        let roots = set.roots.into_iter().map(|r| LrGraph(r.graph)).collect();
        put(out, Box::into_raw(Box::new(LrRootSet { roots })))
    })
}

/// # Safety
/// `set` must be null or a live handle; null yields 0.
#[no_mangle]
pub unsafe extern "C" fn lr_root_set_len(set: *const LrRootSet) -> usize {
    set.as_ref().map_or(0, |s| s.roots.len())
}

/// Borrowed root `i`, owned by `set`; null when out of range. Do not free.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lr_root_set_get(set: *const LrRootSet, i: usize) -> *const LrGraph {
    set.as_ref()
        .and_then(|s| s.roots.get(i))
        .map_or(ptr::null(), |g| g as *const LrGraph)
}

/// # Safety
/// `set` must be null or a handle from [`lr_roots`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lr_root_set_free(set: *mut LrRootSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
