//! C ABI for krpack.
//!
//! Objects are opaque handles created by `kr_*_new`/`kr_*_read`/`kr_solve`
//! and released with the matching `kr_*_free`. Every fallible call returns a
//! [`KrStatus`]; on failure `kr_last_error` describes the problem (per
//! thread, valid until the next failing call). Vertex ids in memory are
//! 0-based; text formats (DIMACS, JSON) are 1-based as on disk.
//!
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with `kr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use krpack::gadget::{EdkKind, EdkReduction, VdkrReduction};
use krpack::packing::{exact_max_packing_with, ExactConfig, DEFAULT_MAX_CLIQUES};
use krpack::sat::brute_force_maxsat;
use krpack::{io, Error, Formula, Graph, Mode, Packing, RegimeTag};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    GuardExceeded = 5,
    InvalidPacking = 6,
    Corrupt = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrMode {
    Vertex = 0,
    Edge = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrMethod {
    Greedy = 0,
    Exact = 1,
    Local = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrRegime {
    LinearTime = 0,
    PolyVertexClawFree = 1,
    PolyEdgeClawFree = 2,
    ApxHard = 3,
}

pub struct KrGraph {
    inner: Graph,
}

pub struct KrFormula {
    inner: Formula,
}

pub struct KrPacking {
    inner: Packing,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> KrStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => KrStatus::Parse,
        Error::Io { .. } => KrStatus::Io,
        Error::GuardExceeded { .. } => KrStatus::GuardExceeded,
        Error::InvalidPacking(_) => KrStatus::InvalidPacking,
        Error::Corrupt(_) => KrStatus::Corrupt,
        _ => KrStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status plus `kr_last_error`.
fn guarded(f: impl FnOnce() -> Result<(), (KrStatus, String)>) -> KrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            KrStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (KrStatus, String)>;
}

impl<T> IntoFfi<T> for krpack::Result<T> {
    fn ffi(self) -> Result<T, (KrStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(what: &str) -> (KrStatus, String) {
    (KrStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, (KrStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (KrStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (KrStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (KrStatus, String)> {
    let c = CString::new(s).map_err(|_| (KrStatus::Corrupt, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn mode(m: KrMode) -> Mode {
    match m {
        KrMode::Vertex => Mode::Vertex,
        KrMode::Edge => Mode::Edge,
    }
}

/// Message for the last failing call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static version string.
#[no_mangle]
pub extern "C" fn kr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`, 0-based). `edges` may be NULL when
/// `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut KrGraph,
) -> KrStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            if edges.is_null() {
                return Err(null("edges"));
            }
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(n, &pairs).ffi()?;
        put(out, KrGraph { inner: g });
        Ok(())
    })
}

/// Parses DIMACS edge format text.
///
/// # Safety
/// `dimacs` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_from_dimacs(
    dimacs: *const c_char,
    out: *mut *mut KrGraph,
) -> KrStatus {
    guarded(|| {
        let s = text(dimacs, "dimacs")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = io::parse_dimacs(s, "<memory>").ffi()?;
        put(out, KrGraph { inner: g });
        Ok(())
    })
}

/// Reads a DIMACS edge file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_read(path: *const c_char, out: *mut *mut KrGraph) -> KrStatus {
    guarded(|| {
        let p = text(path, "path")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = io::read_graph(Path::new(p)).ffi()?;
        put(out, KrGraph { inner: g });
        Ok(())
    })
}

/// DIMACS text of `g` (edges sorted).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_to_dimacs(g: *const KrGraph, out: *mut *mut c_char) -> KrStatus {
    guarded(|| {
        let g = borrow(g, "graph")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, io::write_dimacs(&g.inner))
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_free(g: *mut KrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_vertex_count(g: *const KrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_edge_count(g: *const KrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Δ(G); 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn kr_graph_max_degree(g: *const KrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.max_degree())
}

/// Complexity regime of K_r packing at maximum degree `delta`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_classify(
    r: usize,
    delta: usize,
    m: KrMode,
    out: *mut KrRegime,
) -> KrStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let reg = krpack::classify_regime(r, delta, mode(m)).ffi()?;
        *out = match reg.tag {
            RegimeTag::LinearTime => KrRegime::LinearTime,
            RegimeTag::PolyVertexClawFree => KrRegime::PolyVertexClawFree,
            RegimeTag::PolyEdgeClawFree => KrRegime::PolyEdgeClawFree,
            RegimeTag::ApxHard => KrRegime::ApxHard,
        };
        Ok(())
    })
}

/// Packs K_r's in `g`. `t` is the swap size for the local method;
/// `max_cliques` guards the exact method (0 means the default guard).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_solve(
    g: *const KrGraph,
    r: usize,
    m: KrMode,
    method: KrMethod,
    t: usize,
    max_cliques: usize,
    out: *mut *mut KrPacking,
) -> KrStatus {
    guarded(|| {
        let g = &borrow(g, "graph")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = mode(m);
        let p = match method {
            KrMethod::Greedy => krpack::greedy_maximal_packing(g, r, m),
            KrMethod::Local => krpack::local_improvement_packing(g, r, m, t),
            KrMethod::Exact => {
                let cfg = ExactConfig {
                    max_cliques: if max_cliques == 0 {
                        DEFAULT_MAX_CLIQUES
                    } else {
                        max_cliques
                    },
                };
                exact_max_packing_with(g, r, m, &cfg).map(|o| o.packing)
            }
        }
        .ffi()?;
        put(out, KrPacking { inner: p });
        Ok(())
    })
}

/// Number of cliques; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live packing handle.
#[no_mangle]
pub unsafe extern "C" fn kr_packing_len(p: *const KrPacking) -> usize {
    p.as_ref().map_or(0, |p| p.inner.len())
}

/// Clique size r; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live packing handle.
#[no_mangle]
pub unsafe extern "C" fn kr_packing_r(p: *const KrPacking) -> usize {
    p.as_ref().map_or(0, |p| p.inner.r())
}

/// Copies the sorted 0-based vertices of clique `index` into `vertices`,
/// which must hold at least `capacity >= r` entries.
///
/// # Safety
/// `p` must be a live packing handle; `vertices` must have room for
/// `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn kr_packing_clique(
    p: *const KrPacking,
    index: usize,
    vertices: *mut usize,
    capacity: usize,
) -> KrStatus {
    guarded(|| {
        let p = &borrow(p, "packing")?.inner;
        if vertices.is_null() {
            return Err(null("vertices"));
        }
        let c = p.cliques().get(index).ok_or_else(|| {
            (
                KrStatus::InvalidArgument,
                format!("clique {index} out of range for packing of {}", p.len()),
            )
        })?;
        if capacity < c.len() {
            return Err((
                KrStatus::InvalidArgument,
                format!("capacity {capacity} < r = {}", c.len()),
            ));
        }
        ptr::copy_nonoverlapping(c.vertices().as_ptr(), vertices, c.len());
        Ok(())
    })
}

/// JSON record `{"mode", "r", "cliques" (1-based), "size"}`.
///
/// # Safety
/// `p` must be a live packing handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_packing_to_json(
    p: *const KrPacking,
    out: *mut *mut c_char,
) -> KrStatus {
    guarded(|| {
        let p = &borrow(p, "packing")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = serde_json::to_string(&p.to_record())
            .map_err(|e| (KrStatus::Corrupt, e.to_string()))?;
        put_string(out, s)
    })
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_packing_free(p: *mut KrPacking) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses DIMACS CNF text (clauses of one or two literals, each variable
/// in at most three clauses).
///
/// # Safety
/// `cnf` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_formula_from_dimacs(
    cnf: *const c_char,
    out: *mut *mut KrFormula,
) -> KrStatus {
    guarded(|| {
        let s = text(cnf, "cnf")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let f = io::parse_cnf(s, "<memory>").ffi()?;
        put(out, KrFormula { inner: f });
        Ok(())
    })
}

/// # Safety
/// `f` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_formula_free(f: *mut KrFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live formula handle.
#[no_mangle]
pub unsafe extern "C" fn kr_formula_variable_count(f: *const KrFormula) -> usize {
    f.as_ref().map_or(0, |f| f.inner.variable_count())
}

/// Exact MaxSAT optimum by enumeration (at most 24 variables). If
/// `assignment` is not NULL it receives the lexicographically least optimal
/// assignment, one byte (0/1) per variable.
///
/// # Safety
/// `f` must be a live formula handle; `optimum` must be writable;
/// `assignment` must be NULL or have room for one byte per variable.
#[no_mangle]
pub unsafe extern "C" fn kr_maxsat_optimum(
    f: *const KrFormula,
    optimum: *mut usize,
    assignment: *mut u8,
) -> KrStatus {
    guarded(|| {
        let f = &borrow(f, "formula")?.inner;
        if optimum.is_null() {
            return Err(null("optimum"));
        }
        let (opt, w) = brute_force_maxsat(f).ffi()?;
        *optimum = opt;
        if !assignment.is_null() {
            for (i, &b) in w.values().iter().enumerate() {
                *assignment.add(i) = u8::from(b);
            }
        }
        Ok(())
    })
}

/// MIS → VDK_r reduction of a triangle-free graph with Δ ≤ 3.
///
/// # Safety
/// `source` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_reduce_vdkr(
    source: *const KrGraph,
    r: usize,
    out: *mut *mut KrGraph,
) -> KrStatus {
    guarded(|| {
        let g = &borrow(source, "source")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let red = VdkrReduction::new(g, r).ffi()?;
        put(out, KrGraph { inner: red.target });
        Ok(())
    })
}

/// MAX2SAT(3) → EDK_r reduction for `r` = 4 or 5. `offset` (may be NULL)
/// receives Σ c·m_i, so that the EDK_r optimum of the target equals
/// `offset` plus the MaxSAT optimum.
///
/// # Safety
/// `source` must be a live formula handle; `out` must be writable;
/// `offset` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn kr_reduce_edk(
    source: *const KrFormula,
    r: usize,
    out: *mut *mut KrGraph,
    offset: *mut usize,
) -> KrStatus {
    guarded(|| {
        let f = &borrow(source, "source")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let kind = match r {
            4 => EdkKind::K4,
            5 => EdkKind::K5,
            _ => {
                return Err((
                    KrStatus::InvalidArgument,
                    format!("edk reduction needs r = 4 or 5, got {r}"),
                ))
            }
        };
        let red = EdkReduction::new(kind, f).ffi()?;
        if !offset.is_null() {
            *offset = red.offset();
        }
        put(out, KrGraph { inner: red.target });
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
