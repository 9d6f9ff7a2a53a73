use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use braidforge_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    bf_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut BfBraid {
    let mut b = ptr::null_mut();
    assert_eq!(bf_braid_parse(cstr(text).as_ptr(), &mut b), BfStatus::Ok);
    b
}

#[test]
fn parse_and_query() {
    unsafe {
        let b = parse("3: 1 1 1 1 2 1 1 2");
        assert_eq!(bf_braid_strands(b), 3);
        assert_eq!(bf_braid_len(b), 8);
        let mut k = 99;
        assert_eq!(bf_full_twists(b, &mut k), BfStatus::Ok);
        assert_eq!(k, 1);
        let mut n = 0;
        assert_eq!(bf_component_count(b, &mut n), BfStatus::Ok);
        assert_eq!(n, 3);
        let mut s = ptr::null_mut();
        assert_eq!(bf_braid_to_string(b, &mut s), BfStatus::Ok);
        assert_eq!(take(s), "3: 1 1 1 1 2 1 1 2");
        bf_braid_free(b);
    }
}

#[test]
fn json_outputs() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(
            bf_braid_from_vlink(cstr("V((2,4),(3,3))").as_ptr(), &mut b),
            BfStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(bf_linking_json(b, &mut s), BfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 3);
        assert_eq!(bf_invariants_json(b, &mut s), BfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["linking_multiset"], serde_json::json!([1, 1, 3]));
        assert_eq!(bf_normal_form_json(b, &mut s), BfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["delta_power"], 2);
        bf_braid_free(b);
    }
}

#[test]
fn satellite_operations() {
    unsafe {
        let twist = parse("3: 1 2 1 2 1 2");
        let mut hopf = ptr::null_mut();
        let ids = [3usize];
        assert_eq!(
            bf_delete_components(twist, ids.as_ptr(), 1, &mut hopf),
            BfStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(bf_braid_to_string(hopf, &mut s), BfStatus::Ok);
        assert_eq!(take(s), "2: 1 1");

        let mut lifted = ptr::null_mut();
        assert_eq!(bf_adjoin_axis(hopf, &mut lifted), BfStatus::Ok);
        // the axis of the Hopf link closes up to the full twist on 3 strands
        let mut t = ptr::null_mut();
        assert_eq!(
            bf_braid_from_tlink(cstr("T((3,3))").as_ptr(), &mut t),
            BfStatus::Ok
        );
        let mut eq = false;
        assert_eq!(bf_positive_equal(lifted, t, &mut eq), BfStatus::Ok);
        assert!(eq);
        let letters = [1, 1, 2, 1, 2, 1, 2, 1];
        let mut other = ptr::null_mut();
        assert_eq!(
            bf_braid_new(3, letters.as_ptr(), letters.len(), &mut other),
            BfStatus::Ok
        );
        assert_eq!(bf_positive_equal(lifted, other, &mut eq), BfStatus::Ok);
        assert!(!eq);
        for b in [twist, hopf, lifted, t, other] {
            bf_braid_free(b);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(
            bf_braid_parse(cstr("3: 1 x").as_ptr(), &mut b),
            BfStatus::Parse
        );
        assert!(b.is_null());
        let msg = take(bf_last_error());
        assert!(msg.contains("token 2"), "{msg}");

        assert_eq!(bf_braid_parse(ptr::null(), &mut b), BfStatus::NullPointer);
        assert_eq!(
            bf_braid_parse(cstr("3: 1").as_ptr(), ptr::null_mut()),
            BfStatus::NullPointer
        );
        assert_eq!(
            bf_braid_parse(cstr("3: 3").as_ptr(), &mut b),
            BfStatus::Parse
        );
        let letters = [3];
        assert_eq!(
            bf_braid_new(3, letters.as_ptr(), 1, &mut b),
            BfStatus::InvalidInput
        );
        assert_eq!(
            bf_braid_new(3, ptr::null(), 1, &mut b),
            BfStatus::NullPointer
        );

        let neg = parse("2: -1");
        let mut k = 0;
        assert_eq!(bf_full_twists(neg, &mut k), BfStatus::NotPositive);
        let mut out = ptr::null_mut();
        assert_eq!(bf_adjoin_axis(neg, &mut out), BfStatus::NotPositive);
        let ids = [1usize, 2];
        assert_eq!(
            bf_delete_components(neg, ids.as_ptr(), 2, &mut out),
            BfStatus::InvalidInput
        );
        assert_eq!(bf_full_twists(ptr::null(), &mut k), BfStatus::NullPointer);
        bf_braid_free(neg);

        let bad = [0xffu8, 0];
        assert_eq!(
            bf_braid_parse(bad.as_ptr().cast(), &mut b),
            BfStatus::InvalidUtf8
        );

        // success clears the thread's last error
        let ok = parse("2: 1");
        assert!(bf_last_error().is_null());
        bf_braid_free(ok);
        bf_braid_free(ptr::null_mut());
        bf_string_free(ptr::null_mut());
    }
}

#[test]
fn static_strings() {
    unsafe {
        let v = CStr::from_ptr(bf_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
        let m = CStr::from_ptr(bf_status_message(BfStatus::NotPositive))
            .to_str()
            .unwrap();
        assert_eq!(m, "braid is not positive");
    }
}

#[test]
fn verify_all_report() {
    unsafe {
        let mut s = ptr::null_mut();
        let mut passed = false;
        assert_eq!(bf_verify_all_json(1, &mut s, &mut passed), BfStatus::Ok);
        assert!(passed);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["summary"]["fail"], 0);
    }
}

/// Builds the static library into its own target directory; the outer
/// test run holds the lock on the shared one and does not refresh the
/// staticlib artifact.
fn build_static_lib() -> Option<PathBuf> {
    let cargo = std::env::var("CARGO").ok()?;
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = manifest.join("../../target/c-abi-check");
    let status = Command::new(cargo)
        .args(["build", "--quiet", "--lib", "--manifest-path"])
        .arg(manifest.join("Cargo.toml"))
        .arg("--target-dir")
        .arg(&target)
        .status()
        .ok()?;
    assert!(status.success(), "building the static library failed");
    Some(target.join("debug/libbraidforge_ffi.a"))
}

fn have_cc() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "braidforge.h"

int main(void) {
    BfBraid *b = NULL;
    if (bf_braid_from_tlink("T((3,1),(7,3))", &b) != BF_STATUS_OK) return 1;
    size_t n = 0;
    if (bf_component_count(b, &n) != BF_STATUS_OK || n != 3) return 2;
    size_t k = 0;
    if (bf_full_twists(b, &k) != BF_STATUS_OK) return 3;
    char *json = NULL;
    if (bf_invariants_json(b, &json) != BF_STATUS_OK) return 4;
    printf("%zu %s\n", k, json);
    bf_string_free(json);
    bf_braid_free(b);
    BfBraid *bad = NULL;
    if (bf_braid_parse("2: 5", &bad) != BF_STATUS_PARSE) return 5;
    char *msg = bf_last_error();
    if (msg == NULL || strlen(msg) == 0) return 6;
    bf_string_free(msg);
    return 0;
}
"#;

#[test]
fn header_compiles_and_links_from_c() {
    if !have_cc() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = std::env::temp_dir().join(format!("braidforge-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(&src, C_PROGRAM).unwrap();

    let syntax = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(syntax.success(), "header does not compile as C11");

    let Some(lib) = build_static_lib() else {
        eprintln!("cargo not found; skipping link step");
        return;
    };
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(
        status.success(),
        "linking against the static library failed"
    );
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "C program exited with {:?}",
        out.status.code()
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("0 {"), "{stdout}");
    std::fs::remove_dir_all(dir).unwrap();
}
