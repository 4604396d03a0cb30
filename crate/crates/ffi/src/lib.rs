//! C interface to `brtpoly`.
//!
//! Graphs are opaque handles owned by the caller and released with
//! [`brt_graph_free`]. Every function returns a [`BrtStatus`]; on failure a
//! message is available from [`brt_last_error_message`] on the same thread.
//! Strings returned through out-parameters are NUL-terminated UTF-8 and must
//! be released with [`brt_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use brtpoly::expansions::{self, duality_check, verify_all, Method};
use brtpoly::io::{order_from_one_based, parse_graph_json};
use brtpoly::quasitree::{enumerate_quasi_trees, genus_histogram};
use brtpoly::report::{QuasiTreeTable, RowOrder};
use brtpoly::{Error, Perm, RibbonGraph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Disconnected = 4,
    SizeLimit = 5,
    Mismatch = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrtMethod {
    StateSum = 0,
    SpanningTree = 1,
    Recursive = 2,
    QuasiTree = 3,
}

// Methods arrive as plain integers so an out-of-range value from C is an
// error rather than an invalid enum.
fn method_from_code(code: u32) -> Result<Method, Failure> {
    match code {
        c if c == BrtMethod::StateSum as u32 => Ok(Method::StateSum),
        c if c == BrtMethod::SpanningTree as u32 => Ok(Method::SpanningTree),
        c if c == BrtMethod::Recursive as u32 => Ok(Method::Recursive),
        c if c == BrtMethod::QuasiTree as u32 => Ok(Method::QuasiTree),
        c => Err(Failure::new(
            BrtStatus::InvalidInput,
            format!("unknown method {c}"),
        )),
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BrtCounts {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub components: u64,
    pub genus: u64,
    pub nullity: u64,
}

/// Opaque ribbon graph handle.
pub struct BrtGraph {
    graph: RibbonGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure {
    status: BrtStatus,
    message: String,
}

impl Failure {
    fn new(status: BrtStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Disconnected | Error::SplitRoot => BrtStatus::Disconnected,
            Error::SizeLimit { .. } => BrtStatus::SizeLimit,
            Error::Mismatch { .. } | Error::BijectionFailure(_) | Error::IdentityFailure { .. } => {
                BrtStatus::Mismatch
            }
            _ => BrtStatus::InvalidInput,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BrtStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let text = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure::new(BrtStatus::Panic, text))
    });
    match outcome {
        Ok(()) => {
            set_last_error("");
            BrtStatus::Ok
        }
        Err(f) => {
            set_last_error(&f.message);
            f.status
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::new(
            BrtStatus::NullPointer,
            format!("{name} is null"),
        ))
    } else {
        Ok(())
    }
}

unsafe fn graph_ref<'a>(graph: *const BrtGraph) -> Result<&'a RibbonGraph, Failure> {
    non_null(graph, "graph")?;
    Ok(&(*graph).graph)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    non_null(out, "out")?;
    let c = CString::new(s)
        .map_err(|_| Failure::new(BrtStatus::InvalidInput, "interior NUL in output"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_graph(out: *mut *mut BrtGraph, graph: RibbonGraph) -> Result<(), Failure> {
    non_null(out, "out")?;
    *out = Box::into_raw(Box::new(BrtGraph { graph }));
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// Parses a graph document `{"sigma0": [[...]], "sigma1": [[a, b], ...], "edge_order": [...]}`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_graph_from_json(
    json: *const c_char,
    out: *mut *mut BrtGraph,
) -> BrtStatus {
    guard(|| {
        non_null(json, "json")?;
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| Failure::new(BrtStatus::InvalidUtf8, "json is not UTF-8"))?;
        write_graph(out, parse_graph_json(text)?)
    })
}

/// Builds a graph from two permutations of `1..=half_edges` given as image
/// arrays: `sigma0[i - 1]` is the image of half-edge `i`.
///
/// # Safety
/// `sigma0` and `sigma1` must point to `half_edges` readable values.
#[no_mangle]
pub unsafe extern "C" fn brt_graph_from_permutations(
    sigma0: *const u32,
    sigma1: *const u32,
    half_edges: usize,
    out: *mut *mut BrtGraph,
) -> BrtStatus {
    guard(|| {
        let to_perm = |p: *const u32, name: &str| -> Result<Perm, Failure> {
            if half_edges == 0 {
                return Ok(Perm::identity(0));
            }
            non_null(p, name)?;
            let images = std::slice::from_raw_parts(p, half_edges)
                .iter()
                .map(|&x| match x as usize {
                    x if (1..=half_edges).contains(&x) => Ok(x - 1),
                    x => Err(Failure::from(Error::LabelOutOfRange(x))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Perm::from_images(images)?)
        };
        let s0 = to_perm(sigma0, "sigma0")?;
        let s1 = to_perm(sigma1, "sigma1")?;
        let graph = RibbonGraph::from_perms(s0, s1, (1..=half_edges).collect())?;
        write_graph(out, graph)
    })
}

/// Replaces the edge order. `order` lists 1-based edge indices from lowest
/// to highest and must have one entry per edge.
///
/// # Safety
/// `graph` must be a live handle and `order` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn brt_graph_set_edge_order(
    graph: *mut BrtGraph,
    order: *const u32,
    len: usize,
) -> BrtStatus {
    guard(|| {
        non_null(graph, "graph")?;
        let order: Vec<usize> = if len == 0 {
            Vec::new()
        } else {
            non_null(order, "order")?;
            std::slice::from_raw_parts(order, len)
                .iter()
                .map(|&e| e as usize)
                .collect()
        };
        let g = &mut (*graph).graph;
        let order = order_from_one_based(&order, g.edge_count())?;
        *g = g.clone().with_edge_order(order)?;
        Ok(())
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn brt_graph_free(graph: *mut BrtGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_graph_counts(
    graph: *const BrtGraph,
    out: *mut BrtCounts,
) -> BrtStatus {
    guard(|| {
        let c = graph_ref(graph)?.counts();
        non_null(out, "out")?;
        *out = BrtCounts {
            vertices: c.vertices as u64,
            edges: c.edges as u64,
            faces: c.faces as u64,
            components: c.components as u64,
            genus: c.genus as u64,
            nullity: c.nullity as u64,
        };
        Ok(())
    })
}

/// Computes `C(X, Y, Z)` in canonical text form. `method` is a
/// [`BrtMethod`] value. `cap` bounds the edge
/// count for the state sum; 0 selects the default.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_polynomial(
    graph: *const BrtGraph,
    method: u32,
    cap: usize,
    out: *mut *mut c_char,
) -> BrtStatus {
    guard(|| {
        let cap = if cap == 0 {
            expansions::DEFAULT_SIZE_CAP
        } else {
            cap
        };
        let r = expansions::compute(graph_ref(graph)?, method_from_code(method)?, cap)?;
        write_string(out, r.polynomial.to_string())
    })
}

/// Same as [`brt_polynomial`] but as a JSON array of
/// `{"coeff": "...", "x": .., "y": .., "z": .., "t": ..}` terms.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_polynomial_terms_json(
    graph: *const BrtGraph,
    method: u32,
    cap: usize,
    out: *mut *mut c_char,
) -> BrtStatus {
    guard(|| {
        let cap = if cap == 0 {
            expansions::DEFAULT_SIZE_CAP
        } else {
            cap
        };
        let r = expansions::compute(graph_ref(graph)?, method_from_code(method)?, cap)?;
        write_string(out, to_json(&r.polynomial.to_json_terms()))
    })
}

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_quasi_tree_count(graph: *const BrtGraph, out: *mut u64) -> BrtStatus {
    guard(|| {
        let n = enumerate_quasi_trees(graph_ref(graph)?)?.len();
        non_null(out, "out")?;
        *out = n as u64;
        Ok(())
    })
}

/// Writes quasi-tree counts indexed by genus into `out[0..capacity]` and the
/// number of entries into `*len`. Returns `BufferTooSmall` (with `*len` set)
/// when `capacity` is insufficient.
///
/// # Safety
/// `out` must point to `capacity` writable values (may be null when
/// `capacity` is 0) and `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn brt_genus_histogram(
    graph: *const BrtGraph,
    out: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> BrtStatus {
    guard(|| {
        let hist = genus_histogram(&enumerate_quasi_trees(graph_ref(graph)?)?);
        non_null(len, "len")?;
        *len = hist.len();
        if capacity < hist.len() {
            return Err(Failure::new(
                BrtStatus::BufferTooSmall,
                format!("need {} entries, have {capacity}", hist.len()),
            ));
        }
        non_null(out, "out")?;
        for (i, &n) in hist.iter().enumerate() {
            *out.add(i) = n as u64;
        }
        Ok(())
    })
}

/// The quasi-tree table as JSON, rows sorted by bitstring.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_quasi_tree_table_json(
    graph: *const BrtGraph,
    out: *mut *mut c_char,
) -> BrtStatus {
    guard(|| {
        let table = QuasiTreeTable::new(graph_ref(graph)?, RowOrder::Bitstring)?;
        write_string(out, to_json(&table))
    })
}

/// Runs all four methods; the JSON report is written only when they agree,
/// otherwise `Mismatch` is returned with both polynomials in the message.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_verify_json(
    graph: *const BrtGraph,
    cap: usize,
    out: *mut *mut c_char,
) -> BrtStatus {
    guard(|| {
        let cap = if cap == 0 {
            expansions::DEFAULT_SIZE_CAP
        } else {
            cap
        };
        let report = verify_all(graph_ref(graph)?, cap)?;
        write_string(out, to_json(&report))
    })
}

/// Duality report as JSON: quasi-tree histograms of the graph and its dual
/// and both forms of the identity at `points` seeded rational points.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_duality_json(
    graph: *const BrtGraph,
    seed: u64,
    points: usize,
    out: *mut *mut c_char,
) -> BrtStatus {
    guard(|| {
        let report = duality_check(graph_ref(graph)?, seed, points)?;
        write_string(out, to_json(&report))
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn brt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failing call on this thread, or an empty
/// string. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn brt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn brt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
