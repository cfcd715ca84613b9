use std::ffi::{CStr, CString};
use std::ptr;

use krpack_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(kr_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn graph(n: usize, edges: &[(usize, usize)]) -> *mut KrGraph {
    let flat: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    let st = unsafe { kr_graph_new(n, flat.as_ptr(), edges.len(), &mut g) };
    assert_eq!(st, KrStatus::Ok, "{}", last_error());
    g
}

fn bowtie() -> *mut KrGraph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

fn solve(g: *const KrGraph, r: usize, mode: KrMode, method: KrMethod) -> *mut KrPacking {
    let mut p = ptr::null_mut();
    let st = unsafe { kr_solve(g, r, mode, method, 2, 0, &mut p) };
    assert_eq!(st, KrStatus::Ok, "{}", last_error());
    p
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { kr_string_free(s) };
    out
}

#[test]
fn graph_accessors() {
    let g = bowtie();
    unsafe {
        assert_eq!(kr_graph_vertex_count(g), 5);
        assert_eq!(kr_graph_edge_count(g), 6);
        assert_eq!(kr_graph_max_degree(g), 4);
        assert_eq!(kr_graph_vertex_count(ptr::null()), 0);
        kr_graph_free(g);
        kr_graph_free(ptr::null_mut());
    }
}

#[test]
fn bowtie_packings_by_mode() {
    let g = bowtie();
    for method in [KrMethod::Greedy, KrMethod::Exact, KrMethod::Local] {
        let pv = solve(g, 3, KrMode::Vertex, method);
        let pe = solve(g, 3, KrMode::Edge, method);
        unsafe {
            assert_eq!(kr_packing_len(pv), 1, "{method:?}");
            assert_eq!(kr_packing_len(pe), 2, "{method:?}");
            assert_eq!(kr_packing_r(pe), 3);
            kr_packing_free(pv);
            kr_packing_free(pe);
        }
    }
    unsafe { kr_graph_free(g) };
}

#[test]
fn packing_cliques_and_json() {
    let g = bowtie();
    let p = solve(g, 3, KrMode::Edge, KrMethod::Exact);
    let mut buf = [0usize; 3];
    unsafe {
        assert_eq!(kr_packing_clique(p, 0, buf.as_mut_ptr(), 3), KrStatus::Ok);
        assert_eq!(buf, [0, 1, 2]);
        assert_eq!(kr_packing_clique(p, 1, buf.as_mut_ptr(), 3), KrStatus::Ok);
        assert_eq!(buf, [2, 3, 4]);
        assert_eq!(
            kr_packing_clique(p, 2, buf.as_mut_ptr(), 3),
            KrStatus::InvalidArgument
        );
        assert!(last_error().contains("out of range"));
        assert_eq!(
            kr_packing_clique(p, 0, buf.as_mut_ptr(), 2),
            KrStatus::InvalidArgument
        );

        let mut s = ptr::null_mut();
        assert_eq!(kr_packing_to_json(p, &mut s), KrStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["size"], 2);
        assert_eq!(v["mode"], "edge");
        assert_eq!(v["cliques"], serde_json::json!([[1, 2, 3], [3, 4, 5]]));
        kr_packing_free(p);
        kr_graph_free(g);
    }
}

#[test]
fn dimacs_round_trip() {
    let text =
        CString::new("c bowtie\np edge 5 6\ne 1 2\ne 1 3\ne 2 3\ne 3 4\ne 3 5\ne 4 5\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(kr_graph_from_dimacs(text.as_ptr(), &mut g), KrStatus::Ok);
        assert_eq!(kr_graph_edge_count(g), 6);
        let mut s = ptr::null_mut();
        assert_eq!(kr_graph_to_dimacs(g, &mut s), KrStatus::Ok);
        let out = take_string(s);
        assert!(out.starts_with("p edge 5 6\n"));
        assert!(out.contains("e 4 5\n"));
        kr_graph_free(g);
    }
}

#[test]
fn graph_read_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.col");
    std::fs::write(
        &path,
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    )
    .unwrap();
    let cpath = CString::new(path.to_str().unwrap()).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(kr_graph_read(cpath.as_ptr(), &mut g), KrStatus::Ok);
        assert_eq!(kr_graph_max_degree(g), 3);
        kr_graph_free(g);
        let missing = CString::new(dir.path().join("nope.col").to_str().unwrap()).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(kr_graph_read(missing.as_ptr(), &mut h), KrStatus::Io);
        assert!(h.is_null());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("p edge 2 1\ne 1 1\n").unwrap();
        assert_eq!(kr_graph_from_dimacs(bad.as_ptr(), &mut g), KrStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(
            kr_graph_from_dimacs(ptr::null(), &mut g),
            KrStatus::NullPointer
        );
        assert!(last_error().contains("NULL"));

        let loops = [0usize, 0];
        assert_eq!(
            kr_graph_new(2, loops.as_ptr(), 1, &mut g),
            KrStatus::InvalidArgument
        );
        assert_eq!(
            kr_graph_new(2, ptr::null(), 1, &mut g),
            KrStatus::NullPointer
        );

        let k = bowtie();
        let mut p = ptr::null_mut();
        assert_eq!(
            kr_solve(k, 1, KrMode::Vertex, KrMethod::Greedy, 2, 0, &mut p),
            KrStatus::InvalidArgument
        );
        kr_graph_free(k);
    }
}

#[test]
fn exact_guard_maps_to_its_own_code() {
    // 10 disjoint triangles give 10 cliques; a guard of 5 must trip.
    let edges: Vec<(usize, usize)> = (0..10)
        .flat_map(|i| {
            let b = 3 * i;
            [(b, b + 1), (b, b + 2), (b + 1, b + 2)]
        })
        .collect();
    let g = graph(30, &edges);
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            kr_solve(g, 3, KrMode::Vertex, KrMethod::Exact, 2, 5, &mut p),
            KrStatus::GuardExceeded
        );
        assert_eq!(
            kr_solve(g, 3, KrMode::Vertex, KrMethod::Exact, 2, 0, &mut p),
            KrStatus::Ok
        );
        assert_eq!(kr_packing_len(p), 10);
        kr_packing_free(p);
        kr_graph_free(g);
    }
}

#[test]
fn classify_matches_thresholds() {
    let cases = [
        (3, 3, KrMode::Vertex, KrRegime::LinearTime),
        (3, 4, KrMode::Edge, KrRegime::PolyEdgeClawFree),
        (3, 5, KrMode::Edge, KrRegime::ApxHard),
        (4, 5, KrMode::Vertex, KrRegime::PolyVertexClawFree),
        (4, 6, KrMode::Vertex, KrRegime::ApxHard),
        (6, 8, KrMode::Vertex, KrRegime::PolyVertexClawFree),
    ];
    for (r, d, m, want) in cases {
        let mut got = KrRegime::ApxHard;
        assert_eq!(unsafe { kr_classify(r, d, m, &mut got) }, KrStatus::Ok);
        assert_eq!(got, want, "r={r} delta={d} {m:?}");
    }
    let mut got = KrRegime::ApxHard;
    assert_eq!(
        unsafe { kr_classify(2, 1, KrMode::Vertex, &mut got) },
        KrStatus::InvalidArgument
    );
}

#[test]
fn formula_and_reductions() {
    // (x1)(¬x1)(x1 ∨ x2): optimum 2, least witness x1 = F, x2 = T.
    let cnf = CString::new("p cnf 2 3\n1 0\n-1 0\n1 2 0\n").unwrap();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(
            kr_formula_from_dimacs(cnf.as_ptr(), &mut f),
            KrStatus::Ok,
            "{}",
            last_error()
        );
        assert_eq!(kr_formula_variable_count(f), 2);
        let mut opt = 0usize;
        let mut w = [9u8; 2];
        assert_eq!(kr_maxsat_optimum(f, &mut opt, w.as_mut_ptr()), KrStatus::Ok);
        assert_eq!(opt, 2);
        assert_eq!(w, [0, 1]);

        // Unit clauses and a single-occurrence variable: not reduction-ready.
        let mut t = ptr::null_mut();
        assert_eq!(
            kr_reduce_edk(f, 4, &mut t, ptr::null_mut()),
            KrStatus::InvalidArgument
        );
        assert_eq!(
            kr_reduce_edk(f, 6, &mut t, ptr::null_mut()),
            KrStatus::InvalidArgument
        );
        kr_formula_free(f);
    }
    let ready = CString::new("p cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
    unsafe {
        assert_eq!(kr_formula_from_dimacs(ready.as_ptr(), &mut f), KrStatus::Ok);
        for (r, n) in [(4usize, 42usize), (5, 40)] {
            let mut t = ptr::null_mut();
            let mut offset = 0usize;
            assert_eq!(
                kr_reduce_edk(f, r, &mut t, &mut offset),
                KrStatus::Ok,
                "{}",
                last_error()
            );
            assert_eq!(kr_graph_vertex_count(t), n);
            assert!(offset > 0);
            kr_graph_free(t);
        }
        kr_formula_free(f);
    }

    let edge = graph(2, &[(0, 1)]);
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(kr_reduce_vdkr(edge, 3, &mut t), KrStatus::Ok);
        assert_eq!(kr_graph_vertex_count(t), 5);
        assert_eq!(kr_graph_max_degree(t), 4);
        kr_graph_free(t);
        let tri = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(kr_reduce_vdkr(tri, 3, &mut t), KrStatus::InvalidArgument);
        kr_graph_free(tri);
        kr_graph_free(edge);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/krpack.h");
    let src = include_str!("../src/lib.rs");
    let mut exported = 0;
    for line in src.lines() {
        if let Some(rest) = line
            .strip_prefix("pub unsafe extern \"C\" fn ")
            .or_else(|| line.strip_prefix("pub extern \"C\" fn "))
        {
            let name = &rest[..rest.find('(').unwrap()];
            let declared = [" ", "*"]
                .iter()
                .any(|p| header.contains(&format!("{p}{name}(")));
            assert!(declared, "{name} missing from header");
            exported += 1;
        }
    }
    assert!(exported >= 20, "only {exported} exports found");
    for ty in [
        "typedef struct KrGraph KrGraph;",
        "KR_STATUS_GUARD_EXCEEDED = 5",
        "KR_MODE_EDGE = 1",
    ] {
        assert!(header.contains(ty), "{ty}");
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(kr_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
