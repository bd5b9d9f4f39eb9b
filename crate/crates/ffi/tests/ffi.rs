use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use conic_ffi::*;

const SQUARE: &str = r#"{"format_version": 1, "name": "square",
  "vrep": {"ambient_dim": 2, "vertices": [["0","0"],["1","0"],["1","1"],["0","1"]]}}"#;

const OCTAHEDRON: &str = r#"{"name": "octahedron", "incidence": {"n_vertices": 6, "dim": 3,
  "facets": [[0,2,4],[0,2,5],[0,3,4],[0,3,5],[1,2,4],[1,2,5],[1,3,4],[1,3,5]]}}"#;

fn load(json: &str) -> *mut ConicPolytope {
    let text = CString::new(json).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { conic_polytope_from_json(text.as_ptr(), &mut p) }, ConicStatus::Ok);
    assert!(!p.is_null());
    p
}

fn last_error() -> String {
    let e = conic_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_string_lossy().into_owned()
}

#[test]
fn vectors_of_the_square() {
    let p = load(SQUARE);
    unsafe {
        assert_eq!(conic_polytope_num_vertices(p), 4);
        let mut f = [0u64; 3];
        let mut len = 0;
        assert_eq!(conic_polytope_f_vector(p, f.as_mut_ptr(), f.len(), &mut len), ConicStatus::Ok);
        assert_eq!((len, f), (3, [4, 4, 1]));
        let mut h = [0i64; 3];
        assert_eq!(conic_polytope_h_vector(p, h.as_mut_ptr(), h.len(), &mut len), ConicStatus::Ok);
        assert_eq!(h, [1, 2, 1]);
        let mut small = [0u64; 1];
        assert_eq!(conic_polytope_f_vector(p, small.as_mut_ptr(), 1, &mut len), ConicStatus::BufferTooSmall);
        assert_eq!(len, 3);
        conic_polytope_free(p);
    }
}

#[test]
fn search_then_verify() {
    let p = load(SQUARE);
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(conic_search(p, ConicConstraint::Simplex, 0, &mut cert), ConicStatus::Ok);
        assert!(!cert.is_null());
        assert_eq!(conic_verify(p, cert, ConicConstraint::Simplex), ConicStatus::Ok);
        let text = CStr::from_ptr(cert).to_str().unwrap().to_owned();
        conic_string_free(cert);

        let tampered = CString::new(text.replacen("\"vertex\": 0", "\"vertex\": 2", 1)).unwrap();
        assert_eq!(conic_verify(p, tampered.as_ptr(), ConicConstraint::Simplex), ConicStatus::InvalidCertificate);
        // deleting vertex 2 first is legal, but then vertex 1 sits on two edges
        assert!(last_error().contains("step 2"), "{}", last_error());
        conic_polytope_free(p);
    }
}

#[test]
fn octahedron_is_not_conic() {
    let p = load(OCTAHEDRON);
    unsafe {
        assert_eq!(conic_search(p, ConicConstraint::Any, 0, ptr::null_mut()), ConicStatus::NotConic);
        let mut report = ptr::null_mut();
        assert_eq!(conic_analyze(p, &mut report), ConicStatus::Ok);
        let text = CStr::from_ptr(report).to_str().unwrap();
        assert!(text.contains("\"not_conic\""));
        conic_string_free(report);
        conic_polytope_free(p);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        let bad = CString::new(r#"{"name": "x"}"#).unwrap();
        assert_eq!(conic_polytope_from_json(bad.as_ptr(), &mut p), ConicStatus::SchemaError);
        assert!(p.is_null());
        assert!(last_error().contains("exactly one"));

        let garbage = CString::new("{").unwrap();
        assert_eq!(conic_polytope_from_json(garbage.as_ptr(), &mut p), ConicStatus::ParseError);
        assert_eq!(conic_polytope_from_json(ptr::null(), &mut p), ConicStatus::NullPointer);

        let unbounded = CString::new(
            r#"{"name": "half-line", "hrep": {"ambient_dim": 1, "inequalities": [{"normal": ["-1"], "bound": "0"}]}}"#,
        )
        .unwrap();
        assert_eq!(conic_polytope_from_json(unbounded.as_ptr(), &mut p), ConicStatus::GeometryError);

        assert_eq!(conic_search(ptr::null(), ConicConstraint::Any, 0, ptr::null_mut()), ConicStatus::NullPointer);
        assert_eq!(conic_polytope_num_vertices(ptr::null()), 0);
        conic_polytope_free(ptr::null_mut());
        conic_string_free(ptr::null_mut());
    }
}

#[test]
fn budget_gives_inconclusive() {
    let hexagon = r#"{"name": "hexagon", "incidence": {"n_vertices": 6, "dim": 2,
      "facets": [[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}}"#;
    let p = load(hexagon);
    unsafe {
        assert_eq!(conic_search(p, ConicConstraint::Any, 1, ptr::null_mut()), ConicStatus::Inconclusive);
        conic_polytope_free(p);
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "conic.h"

int main(void) {
    const char *json = "{\"name\":\"triangle\",\"incidence\":{\"n_vertices\":3,\"dim\":2,\"facets\":[[0,1],[1,2],[0,2]]}}";
    ConicPolytope *p = NULL;
    if (conic_polytope_from_json(json, &p) != CONIC_STATUS_OK) return 1;
    uint64_t f[4];
    size_t len = 0;
    if (conic_polytope_f_vector(p, f, 4, &len) != CONIC_STATUS_OK || len != 3) return 2;
    char *cert = NULL;
    if (conic_search(p, CONIC_CONSTRAINT_SIMPLEX, 0, &cert) != CONIC_STATUS_OK) return 3;
    if (conic_verify(p, cert, CONIC_CONSTRAINT_SIMPLEX) != CONIC_STATUS_OK) return 4;
    conic_string_free(cert);
    conic_polytope_free(p);
    printf("%llu %llu %llu\n", (unsigned long long)f[0], (unsigned long long)f[1], (unsigned long long)f[2]);
    return 0;
}
"#;

#[test]
fn header_links_from_c() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libconic_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3 3 1\n");
}
