use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use delpezzo_ffi::*;

fn last_error() -> String {
    let p = dp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn cohom_and_buffer_rules() {
    let mut h = [0i64; 5];
    let mut n = 0usize;
    unsafe {
        assert_eq!(dp_cohom(DP_VARIETY_PHI, 1, 1, h.as_mut_ptr(), 5, &mut n), DpStatus::Ok);
        assert_eq!((n, h), (5, [9, 0, 0, 0, 0]));
        assert!(dp_last_error().is_null());
        assert_eq!(
            dp_cohom(DP_VARIETY_F, 0, 0, h.as_mut_ptr(), 3, &mut n),
            DpStatus::BufferTooSmall
        );
        assert_eq!(n, 4);
        assert_eq!(
            dp_cohom(DP_VARIETY_F, 0, 0, ptr::null_mut(), 4, &mut n),
            DpStatus::NullPointer
        );
        assert!(last_error().contains("out"));
        assert_eq!(dp_cohom(2, 0, 0, h.as_mut_ptr(), 5, &mut n), DpStatus::InvalidVariety);
    }
}

#[test]
fn line_bundle_flags() {
    let mut r = DpLineBundle::default();
    unsafe {
        assert_eq!(dp_line_bundle(DP_VARIETY_F, 2, 0, &mut r), DpStatus::Ok);
    }
    assert!(r.is_acm && r.is_initialized && r.is_ulrich);
    unsafe {
        assert_eq!(dp_line_bundle(DP_VARIETY_F, 0, 3, &mut r), DpStatus::Ok);
    }
    assert!(!r.is_acm && r.initial_twist == 0);
}

#[test]
fn chow_handles() {
    let expr = CString::new("h1*h2").unwrap();
    let bad = CString::new("h1 +").unwrap();
    let eta = CString::new("eta1").unwrap();
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    let mut c = ptr::null_mut();
    let mut s = ptr::null_mut();
    let mut d = 0i64;
    unsafe {
        assert_eq!(dp_chow_parse(DP_VARIETY_F, expr.as_ptr(), &mut a), DpStatus::Ok);
        assert_eq!(dp_chow_to_string(a, &mut s), DpStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "h1^2 + h2^2");
        dp_string_free(s);
        assert_eq!(dp_chow_parse(DP_VARIETY_F, bad.as_ptr(), &mut b), DpStatus::ParseError);
        assert!(last_error().contains("parse error"));
        assert_eq!(dp_chow_parse(DP_VARIETY_PHI, eta.as_ptr(), &mut b), DpStatus::Ok);
        assert_eq!(dp_chow_add(a, b, &mut c), DpStatus::VarietyMismatch);
        assert_eq!(dp_chow_free(b), ());
        let h = CString::new("h").unwrap();
        assert_eq!(dp_chow_parse(DP_VARIETY_F, h.as_ptr(), &mut b), DpStatus::Ok);
        assert_eq!(dp_chow_mul(a, b, &mut c), DpStatus::Ok);
        assert_eq!(dp_chow_degree(c, &mut d), DpStatus::Ok);
        assert_eq!(d, 2);
        dp_chow_free(a);
        dp_chow_free(b);
        dp_chow_free(c);
        dp_chow_free(ptr::null_mut());
        dp_string_free(ptr::null_mut());
    }
}

#[test]
fn tables_and_verify() {
    let name = CString::new("theoremB-Phi").unwrap();
    let json = CString::new("json").unwrap();
    let svg = CString::new("svg").unwrap();
    let scope = CString::new("cohomology").unwrap();
    let mut out = ptr::null_mut();
    let mut passed = false;
    unsafe {
        assert_eq!(dp_table(name.as_ptr(), json.as_ptr(), &mut out), DpStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        assert_eq!(v["rows"]["entries"].as_array().unwrap().len(), 4);
        dp_string_free(out);
        assert_eq!(
            dp_table(name.as_ptr(), svg.as_ptr(), &mut out),
            DpStatus::InvalidArgument
        );
        assert_eq!(dp_verify(scope.as_ptr(), &mut passed, ptr::null_mut()), DpStatus::Ok);
    }
    assert!(passed);
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/ffi-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let lib = target_dir().join("libdelpezzo_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("delpezzo-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    std::fs::remove_file(&exe).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
