use std::ffi::{CStr, CString};
use std::ptr;

use linkroot_ffi::*;

unsafe fn parse(text: &str) -> *mut LrGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(lr_graph_parse(c.as_ptr(), &mut g), LrStatus::Ok);
    g
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lr_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(lr_last_error_message()).to_str().unwrap().to_owned()
}

#[test]
fn build_and_inspect() {
    unsafe {
        let g = lr_graph_new(3);
        let mut e = usize::MAX;
        assert_eq!(lr_graph_add_edge(g, 0, 1, &mut e), LrStatus::Ok);
        assert_eq!(e, 0);
        assert_eq!(lr_graph_add_edge(g, 1, 0, ptr::null_mut()), LrStatus::Ok);
        assert_eq!(lr_graph_vertex_count(g), 3);
        assert_eq!(lr_graph_edge_count(g), 2);
        let (mut u, mut v) = (9, 9);
        assert_eq!(lr_graph_edge(g, 1, &mut u, &mut v), LrStatus::Ok);
        assert_eq!((u, v), (1, 0));
        assert_eq!(lr_graph_edge(g, 2, &mut u, &mut v), LrStatus::InvalidArgument);
        assert_eq!(take_string(lr_graph_to_text(g)), "mg 1\nn 3\ne 0 1\ne 1 0\n");
        lr_graph_free(g);
    }
}

#[test]
fn errors_carry_messages() {
    unsafe {
        let g = lr_graph_new(2);
        assert_eq!(lr_graph_add_edge(g, 1, 1, ptr::null_mut()), LrStatus::InvalidArgument);
        assert!(last_error().contains("loop"));
        lr_graph_free(g);

        let bad = CString::new("mg 1\nn 2\ne 0 7\n").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(lr_graph_parse(bad.as_ptr(), &mut out), LrStatus::Parse);
        assert!(out.is_null());
        assert!(last_error().starts_with("line 3"), "{}", last_error());

        let mut flag = false;
        assert_eq!(lr_is_minimal(ptr::null(), 1, false, &mut flag), LrStatus::NullPointer);
        assert_eq!(lr_graph_vertex_count(ptr::null()), 0);
        lr_graph_free(ptr::null_mut());
        lr_root_set_free(ptr::null_mut());
        lr_string_free(ptr::null_mut());
    }
}

#[test]
fn link_graph_of_claw_is_triangle() {
    unsafe {
        let claw = parse("mg 1\nn 4\ne 0 1\ne 0 2\ne 0 3\n");
        let tri = parse("mg 1\nn 3\ne 0 1\ne 1 2\ne 2 0\n");
        let mut l = ptr::null_mut();
        assert_eq!(lr_link_graph(claw, 1, &mut l), LrStatus::Ok);
        let mut iso = false;
        assert_eq!(lr_is_isomorphic(l, tri, &mut iso), LrStatus::Ok);
        assert!(iso);
        assert_eq!(take_string(lr_canonical_hex(l)), take_string(lr_canonical_hex(tri)));

        let mut p = ptr::null_mut();
        assert_eq!(lr_path_graph(claw, 1, &mut p), LrStatus::Ok);
        assert_eq!(lr_graph_edge_count(p), 3);
        for h in [claw, tri, l, p] {
            lr_graph_free(h);
        }
    }
}

#[test]
fn minimality_incidence_and_equivalence() {
    unsafe {
        let claw = parse("mg 1\nn 4\ne 0 1\ne 0 2\ne 0 3\n");
        let mut flag = true;
        assert_eq!(lr_is_minimal(claw, 3, false, &mut flag), LrStatus::Ok);
        assert!(!flag);
        let mut sub = ptr::null_mut();
        assert_eq!(lr_incidence_subgraph(claw, 3, &mut sub), LrStatus::Ok);
        assert_eq!(lr_graph_vertex_count(sub), 0);

        let empty = lr_graph_new(0);
        assert_eq!(lr_is_equivalent(claw, empty, 3, &mut flag), LrStatus::Ok);
        assert!(flag);
        assert_eq!(lr_is_equivalent(claw, empty, 2, &mut flag), LrStatus::Ok);
        assert!(!flag);

        let bundle = parse("mg 1\nn 2\ne 0 1\ne 0 1\n");
        assert_eq!(lr_is_minimal(bundle, 0, true, &mut flag), LrStatus::Ok);
        assert!(!flag);
        for h in [claw, sub, empty, bundle] {
            lr_graph_free(h);
        }
    }
}

#[test]
fn census_counts_cyclic_components() {
    unsafe {
        let g = parse("mg 1\nn 7\ne 0 1\ne 1 2\ne 2 0\ne 3 4\ne 5 6\ne 5 6\n");
        let mut c = LrCensus::default();
        assert_eq!(lr_census(g, 2, &mut c), LrStatus::Ok);
        assert_eq!(c.cyclic, 2);
        assert_eq!(c.acyclic, 0);
        lr_graph_free(g);
    }
}

#[test]
fn roots_of_hexagon() {
    unsafe {
        let c6 = parse("mg 1\nn 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\n");
        let mut set = ptr::null_mut();
        assert_eq!(lr_roots(c6, 2, false, 0.0, &mut set), LrStatus::Ok);
        assert_eq!(lr_root_set_len(set), 2);
        let mut edges: Vec<usize> = (0..2).map(|i| lr_graph_edge_count(lr_root_set_get(set, i))).collect();
        edges.sort();
        assert_eq!(edges, [6, 6]);
        let mut iso = false;
        assert_eq!(lr_is_isomorphic(lr_root_set_get(set, 0), c6, &mut iso), LrStatus::Ok);
        assert!(iso);
        assert!(lr_root_set_get(set, 2).is_null());
        lr_root_set_free(set);
        lr_graph_free(c6);
    }
}

#[test]
fn oversized_search_reports_budget() {
    unsafe {
        let big = lr_graph_new(20);
        let mut set = ptr::null_mut();
        assert_eq!(lr_roots(big, 4, false, 0.0, &mut set), LrStatus::Budget);
        assert!(set.is_null());
        assert!(last_error().contains("budget"));
        lr_graph_free(big);
    }
}
