use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use scrollink_ffi::*;

fn scroll(degrees: &[i64]) -> *mut SlScroll {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sl_scroll_new(degrees.as_ptr(), degrees.len(), &mut out) }, SlStatus::Ok);
    out
}

fn last_error() -> String {
    let p = sl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn scroll_info_and_classes() {
    let s = scroll(&[0, 0, 3]);
    let mut info = SlScrollInfo::default();
    assert_eq!(unsafe { sl_scroll_info(s, &mut info) }, SlStatus::Ok);
    assert_eq!((info.dim, info.degree, info.embedding_dim, info.vertex_dim), (3, 3, 5, 1));
    assert!(info.cyclic_class_group);

    let mut c = SlClass::default();
    assert_eq!(unsafe { sl_scroll_normalize_class(s, SlClass { h: 1, r: 0 }, &mut c) }, SlStatus::Ok);
    assert_eq!(c, SlClass { h: 0, r: 3 });

    let mut refl = false;
    assert_eq!(unsafe { sl_scroll_is_reflexive(s, 1, 2, &mut refl) }, SlStatus::Ok);
    assert!(refl);
    assert_eq!(unsafe { sl_scroll_is_reflexive(s, 1, 3, &mut refl) }, SlStatus::Ok);
    assert!(!refl);
    unsafe { sl_scroll_free(s) };
}

#[test]
fn smooth_scroll_has_no_reflexivity_question() {
    let s = scroll(&[1, 1, 1]);
    let mut refl = true;
    assert_eq!(unsafe { sl_scroll_is_reflexive(s, 1, 1, &mut refl) }, SlStatus::Precondition);
    assert!(refl, "output untouched on failure");
    assert!(last_error().contains("scroll_singular"));
    unsafe { sl_scroll_free(s) };
}

#[test]
fn intersections() {
    let s = scroll(&[0, 1, 2]);
    let classes = [SlClass { h: 1, r: 0 }, SlClass { h: 1, r: 0 }, SlClass { h: 0, r: 1 }];
    let mut v = 0;
    assert_eq!(unsafe { sl_intersect(s, classes.as_ptr(), 3, &mut v) }, SlStatus::Ok);
    assert_eq!(v, 1);
    assert_eq!(unsafe { sl_intersect(s, classes.as_ptr(), 2, &mut v) }, SlStatus::Precondition);

    let e = CString::new("(2H+R)*H*H").unwrap();
    assert_eq!(unsafe { sl_intersect_expr(s, e.as_ptr(), &mut v) }, SlStatus::Ok);
    assert_eq!(v, 7);
    let bad = CString::new("H*H*").unwrap();
    assert_eq!(unsafe { sl_intersect_expr(s, bad.as_ptr(), &mut v) }, SlStatus::Parse);
    let bytes = [0xffu8, 0];
    assert_eq!(unsafe { sl_intersect_expr(s, bytes.as_ptr().cast(), &mut v) }, SlStatus::InvalidUtf8);
    unsafe { sl_scroll_free(s) };
}

#[test]
fn curves_and_linkage() {
    let s = scroll(&[0, 0, 3]);
    let mut ci = SlCurve::default();
    assert_eq!(unsafe { sl_ci_invariants(s, 3, 11, &mut ci) }, SlStatus::Ok);
    assert_eq!(ci, SlCurve { degree: 99, genus: 562, ruling_degree: 33 });

    let mut c = SlClass::default();
    assert_eq!(unsafe { sl_total_transform(s, 5, &mut c) }, SlStatus::Ok);
    assert_eq!(unsafe { sl_proper_transform(s, 4, 2, &mut c) }, SlStatus::Ok);
    assert_eq!(c, SlClass { h: 2, r: 6 });

    let mut mult = 0;
    assert_eq!(unsafe { sl_vertex_multiplicity_ci(s, 4, 2, 3, 1, &mut mult) }, SlStatus::Ok);
    assert_eq!(unsafe { sl_vertex_multiplicity_in_ruling_plane(s, 4, 2, &mut mult) }, SlStatus::Ok);

    let mut linked = SlCurve::default();
    let empty = SlCurve { degree: 0, genus: 1, ruling_degree: 0 };
    assert_eq!(unsafe { sl_link_genus(s, 3, 11, empty, 99, 33, &mut linked) }, SlStatus::Precondition);
    assert!(last_error().contains("vertex_not_a_line"));
    unsafe { sl_scroll_free(s) };

    // linking the empty curve gives the complete intersection itself
    let s = scroll(&[0, 1, 2]);
    let mut linked = SlCurve::default();
    assert_eq!(unsafe { sl_link_genus(s, 3, 11, empty, 99, 33, &mut linked) }, SlStatus::Ok);
    assert_eq!(linked.genus, 562);
    let mut back = SlCurve::default();
    assert_eq!(unsafe { sl_link_genus(s, 3, 11, linked, 0, 0, &mut back) }, SlStatus::Ok);
    assert_eq!(back, empty);
    assert_eq!(unsafe { sl_link_genus(s, 3, 11, empty, 98, 33, &mut back) }, SlStatus::Precondition);
    unsafe { sl_scroll_free(s) };
}

#[test]
fn params_profile_and_bound() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sl_params_new(96, 5, 9, &mut p) }, SlStatus::Ok);
    let mut view = SlParamsView::default();
    assert_eq!(unsafe { sl_params_view(p, &mut view) }, SlStatus::Ok);
    assert_eq!((view.m, view.eps, view.w, view.v, view.k, view.delta, view.e), (10, 5, 2, 2, 2, 0, 1));

    let mut g = 0;
    assert_eq!(unsafe { sl_genus_bound(p, &mut g) }, SlStatus::Ok);
    assert_eq!(g, 529);
    let mut cf = SlRational::default();
    assert_eq!(unsafe { sl_genus_closed_form(p, &mut cf) }, SlStatus::Ok);
    assert_eq!(cf, SlRational { num: 518, den: 1 });

    let mut prof = ptr::null_mut();
    assert_eq!(unsafe { sl_profile_new(p, &mut prof) }, SlStatus::Ok);
    let len = unsafe { sl_profile_len(prof) };
    let mut buf = vec![0i64; len];
    let mut full = 0usize;
    assert_eq!(unsafe { sl_profile_deltas(prof, buf.as_mut_ptr(), len, &mut full) }, SlStatus::Ok);
    assert_eq!(full, len);
    assert_eq!(buf.iter().sum::<i64>(), 96);
    for (r, &d) in buf.iter().enumerate() {
        let mut x = 0;
        assert_eq!(unsafe { sl_delta_h(p, r as i64, &mut x) }, SlStatus::Ok);
        assert_eq!(x, d);
    }
    let (mut h, mut mass, mut genus) = (0, 0, 0);
    assert_eq!(
        unsafe { sl_profile_query(prof, 1, &mut h, &mut mass, ptr::null_mut(), &mut genus) },
        SlStatus::Ok
    );
    assert_eq!((h, mass, genus), (5, 96, 529));

    // a truncated copy still reports the full length
    let mut small = [0i64; 2];
    assert_eq!(unsafe { sl_profile_deltas(prof, small.as_mut_ptr(), 2, &mut full) }, SlStatus::Ok);
    assert_eq!(full, len);
    assert_eq!(small[..], buf[..2]);
    unsafe { sl_profile_free(prof) };

    let mut h0 = 0;
    assert_eq!(unsafe { sl_h0_residual(p, -1, &mut h0) }, SlStatus::Precondition);
    unsafe { sl_params_free(p) };
}

#[test]
fn explicit_profile() {
    let deltas = [1i64, 1, 1, 1];
    let mut prof = ptr::null_mut();
    assert_eq!(unsafe { sl_profile_from_deltas(deltas.as_ptr(), 4, &mut prof) }, SlStatus::Ok);
    let mut genus = 0;
    let status = unsafe { sl_profile_query(prof, 0, ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), &mut genus) };
    assert_eq!(status, SlStatus::Ok);
    // plane quartic
    assert_eq!(genus, 3);
    unsafe { sl_profile_free(prof) };
}

#[test]
fn params_errors() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sl_params_new(0, 5, 9, &mut p) }, SlStatus::Precondition);
    assert!(p.is_null());
    assert!(last_error().contains("d_positive"));
    assert_eq!(unsafe { sl_params_new(96, 5, 9, ptr::null_mut()) }, SlStatus::NullPointer);
    let mut g = 0;
    assert_eq!(unsafe { sl_genus_bound(ptr::null(), &mut g) }, SlStatus::NullPointer);
    assert_eq!(unsafe { sl_profile_len(ptr::null()) }, 0);
    unsafe {
        sl_scroll_free(ptr::null_mut());
        sl_params_free(ptr::null_mut());
        sl_profile_free(ptr::null_mut());
        sl_string_free(ptr::null_mut());
    }
}

#[test]
fn classification_json() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sl_classify_json(96, 5, 9, &mut out) }, SlStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { sl_string_free(out) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["d"], 96);
    assert_eq!(v["G"], 529);
    assert_eq!(v["closure_ok"], true);

    let mut ok = false;
    assert_eq!(unsafe { sl_verify_closure(96, 5, 9, &mut ok) }, SlStatus::Ok);
    assert!(ok);
}

#[test]
fn scalar_helpers() {
    let mut v = 0;
    assert_eq!(unsafe { sl_clebsch(4, &mut v) }, SlStatus::Ok);
    assert_eq!(v, 3);
    assert_eq!(unsafe { sl_clebsch(0, &mut v) }, SlStatus::Precondition);
    assert_eq!(unsafe { sl_noether_union(1, 2, 3, &mut v) }, SlStatus::Ok);
    assert_eq!(v, 5);
}

#[test]
fn errors_are_per_thread() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sl_params_new(0, 5, 9, &mut p) }, SlStatus::Precondition);
    std::thread::spawn(|| assert!(sl_last_error().is_null())).join().unwrap();
}

#[test]
fn header_is_current_and_compiles() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(crate_dir.join("include/scrollink.h")).unwrap();
    for name in ["sl_scroll_new", "sl_genus_bound", "sl_classify_json", "sl_last_error", "SL_STATUS_PARSE"] {
        assert!(header.contains(name), "{name} missing from header");
    }

    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok()) else {
        eprintln!("no C compiler; skipping link check");
        return;
    };
    // tests live in target/<profile>/deps
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libscrollink_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping link check", lib.display());
        return;
    }
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("scrollink_smoke");
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
