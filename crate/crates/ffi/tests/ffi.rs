use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use wreath_lab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn family(json: &str) -> *mut WlFamily {
    let mut fam = ptr::null_mut();
    assert_eq!(
        unsafe { wl_family_from_json(c(json).as_ptr(), &mut fam) },
        WlStatus::Ok
    );
    fam
}

fn parse(word: &str, compact: bool) -> *mut WlElement {
    let mut e = ptr::null_mut();
    assert_eq!(
        unsafe { wl_element_parse(c(word).as_ptr(), compact, &mut e) },
        WlStatus::Ok
    );
    e
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    wl_string_free(p);
    s
}

#[test]
fn embed_membership_and_json() {
    unsafe {
        let fam = family(r#"{"groups":[{"name":"integers"}]}"#);
        let mut psi = ptr::null_mut();
        assert_eq!(wl_embed(fam, 1, c("x1").as_ptr(), &mut psi), WlStatus::Ok);

        let mut json = ptr::null_mut();
        assert_eq!(wl_element_to_json(psi, &mut json), WlStatus::Ok);
        assert_eq!(
            take_string(json),
            r#"{"factors":[[0,1],[1,1],[0,-1],[1,-1]],"sExp":0}"#
        );

        let from_word = parse("fsfSFsFS", true);
        let mut eq = false;
        assert_eq!(wl_equal(fam, psi, from_word, &mut eq), WlStatus::Ok);
        assert!(eq);

        let mut member = false;
        let mut pre = ptr::null_mut();
        assert_eq!(
            wl_membership(fam, 1, psi, 0, &mut member, &mut pre),
            WlStatus::Ok
        );
        assert!(member);
        assert_eq!(take_string(pre), "x1");

        let mut len = 0i64;
        assert_eq!(wl_geodesic_length(fam, psi, 8, 0, &mut len), WlStatus::Ok);
        assert_eq!(len, 8);
        assert_eq!(wl_geodesic_length(fam, psi, 7, 0, &mut len), WlStatus::Ok);
        assert_eq!(len, -1);

        wl_element_free(from_word);
        wl_element_free(psi);
        wl_family_free(fam);
    }
}

#[test]
fn word_problem_and_sign() {
    unsafe {
        let fam = family(r#"{"groups":[{"name":"free","params":{"rank":2}}]}"#);
        let a = parse("F s F^-1 s^-1", false);
        let b = parse("s F s^-1 F^-1", false);
        let mut prod = ptr::null_mut();
        assert_eq!(wl_element_mul(a, b, &mut prod), WlStatus::Ok);
        let mut trivial = false;
        assert_eq!(wl_is_trivial(fam, prod, &mut trivial), WlStatus::Ok);
        assert!(trivial);
        let mut sign = 7;
        assert_eq!(wl_sign(fam, prod, &mut sign), WlStatus::Ok);
        assert_eq!(sign, 0);
        let s = parse("S", true);
        assert_eq!(wl_sign(fam, s, &mut sign), WlStatus::Ok);
        assert_eq!(sign, -1);
        for p in [a, b, prod, s] {
            wl_element_free(p);
        }
        wl_family_free(fam);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut fam = ptr::null_mut();
        let status =
            wl_family_from_json(c(r#"{"groups":[{"name":"monster"}]}"#).as_ptr(), &mut fam);
        assert_eq!(status, WlStatus::InvalidInput);
        let msg = CStr::from_ptr(wl_last_error()).to_str().unwrap();
        assert!(msg.contains("monster"), "{msg}");
        assert!(fam.is_null());

        assert_eq!(
            wl_family_from_json(ptr::null(), &mut fam),
            WlStatus::NullPointer
        );

        let fam = family(r#"{"groups":[{"name":"integers"}]}"#);
        let mut e = ptr::null_mut();
        assert_eq!(
            wl_embed(fam, 2, c("x1").as_ptr(), &mut e),
            WlStatus::InvalidInput
        );
        let psi = parse("F s F s^-1 F^-1 s F^-1 s^-1", false);
        let mut len = 0i64;
        assert_eq!(
            wl_geodesic_length(fam, psi, 8, 3, &mut len),
            WlStatus::Budget
        );

        let cyclic = family(r#"{"groups":[{"name":"cyclic","params":{"order":3}}]}"#);
        let mut sign = 0;
        assert_eq!(wl_sign(cyclic, psi, &mut sign), WlStatus::Unsupported);

        wl_element_free(psi);
        wl_family_free(fam);
        wl_family_free(cyclic);
    }
}

#[test]
fn element_json_round_trip() {
    unsafe {
        let mut e = ptr::null_mut();
        let text = r#"{"factors":[[2,1],[-1,-1]],"sExp":3}"#;
        assert_eq!(wl_element_from_json(c(text).as_ptr(), &mut e), WlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(wl_element_to_json(e, &mut out), WlStatus::Ok);
        assert_eq!(take_string(out), text);
        wl_element_free(e);
        let mut bad = ptr::null_mut();
        let status = wl_element_from_json(c(r#"{"factors":[[0,2]],"sExp":0}"#).as_ptr(), &mut bad);
        assert_eq!(status, WlStatus::InvalidInput);
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(manifest_dir().join("include/wreath_lab.h")).unwrap();
    for name in [
        "wl_family_from_json",
        "wl_embed",
        "wl_membership",
        "wl_geodesic_length",
        "wl_last_error",
        "WL_STATUS_BUDGET",
        "typedef struct WlFamily WlFamily;",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Directory holding the library artifacts next to this test binary.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = artifact_dir().join("libwreath_lab_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest_dir().join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("running cc");
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
