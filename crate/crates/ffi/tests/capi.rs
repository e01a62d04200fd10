use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use binomap_ffi::*;

fn last_error() -> String {
    let p = binomap_last_error_message();
    assert!(!p.is_null(), "no error message set");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    binomap_string_free(p);
    s
}

fn parse(text: &str) -> (BinomapStatus, *mut BinomapSystem) {
    let text = CString::new(text).unwrap();
    let mut sys = ptr::null_mut();
    let st = unsafe { binomap_system_parse(text.as_ptr(), &mut sys) };
    (st, sys)
}

#[test]
fn decompose_minors_through_the_c_api() {
    unsafe {
        let mut sys = ptr::null_mut();
        assert_eq!(binomap_system_adjacent_minors(2, 6, &mut sys), BinomapStatus::Ok);
        assert_eq!(binomap_system_num_vars(sys), 12);
        assert_eq!(binomap_system_num_equations(sys), 5);

        let mut opts = binomap_options_default();
        opts.pure_dim = true;
        let mut d = ptr::null_mut();
        assert_eq!(binomap_decompose(sys, &opts, &mut d), BinomapStatus::Ok);
        assert_eq!(binomap_decomposition_count(d), 8);
        assert_eq!(binomap_decomposition_num_vars(d), 12);

        for map in 0..8 {
            let mut dim = 0;
            assert_eq!(binomap_map_dim(d, map, &mut dim), BinomapStatus::Ok);
            assert_eq!(dim, 7);
            for var in 0..12 {
                let mut zero = false;
                assert_eq!(binomap_map_is_zero(d, map, var, &mut zero), BinomapStatus::Ok);
                let (mut re, mut im) = (f64::NAN, f64::NAN);
                assert_eq!(binomap_map_coeff(d, map, var, &mut re, &mut im), BinomapStatus::Ok);
                assert_eq!(zero, re == 0.0 && im == 0.0);
                let mut e = 0;
                assert_eq!(binomap_map_exponent(d, map, 0, var, &mut e), BinomapStatus::Ok);
                if zero {
                    assert_eq!(e, 0);
                }
            }
        }

        let mut json = ptr::null_mut();
        assert_eq!(binomap_decomposition_to_json(d, &mut json), BinomapStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["count"], 8);

        binomap_decomposition_free(d);
        binomap_system_free(sys);
    }
}

#[test]
fn parse_serialize_and_names() {
    let (st, sys) = parse("x11*x22 - x21*x12;");
    assert_eq!(st, BinomapStatus::Ok);
    unsafe {
        let mut name = ptr::null_mut();
        assert_eq!(binomap_system_var_name(sys, 2, &mut name), BinomapStatus::Ok);
        assert_eq!(take_string(name), "x21");
        assert_eq!(
            binomap_system_var_name(sys, 4, &mut name),
            BinomapStatus::OutOfRange
        );
        let mut text = ptr::null_mut();
        assert_eq!(binomap_system_serialize(sys, &mut text), BinomapStatus::Ok);
        assert_eq!(take_string(text), "x11*x22 - x21*x12;");
        binomap_system_free(sys);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let (st, sys) = parse("x*y - ;");
    assert_eq!(st, BinomapStatus::ParseError);
    assert!(sys.is_null());
    assert!(last_error().contains("line 1"));

    let (st, sys) = parse("x*y;");
    assert_eq!(st, BinomapStatus::Ok);
    assert!(binomap_last_error_message().is_null());
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(binomap_decompose(sys, ptr::null(), &mut d), BinomapStatus::NotBinomial);
        assert!(d.is_null());
        assert!(last_error().contains("binomial"));
        binomap_system_free(sys);
    }

    let (_, sys) = parse("x^5 - 3;");
    unsafe {
        let mut opts = binomap_options_default();
        opts.branch_limit = 4;
        let mut d = ptr::null_mut();
        assert_eq!(binomap_decompose(sys, &opts, &mut d), BinomapStatus::BranchLimit);
        opts.tolerance = -1.0;
        assert_eq!(binomap_decompose(sys, &opts, &mut d), BinomapStatus::InvalidArgument);
        binomap_system_free(sys);
    }
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        let mut sys = ptr::null_mut();
        assert_eq!(binomap_system_parse(ptr::null(), &mut sys), BinomapStatus::NullPointer);
        let text = CString::new("x - y;").unwrap();
        assert_eq!(
            binomap_system_parse(text.as_ptr(), ptr::null_mut()),
            BinomapStatus::NullPointer
        );
        let mut d = ptr::null_mut();
        assert_eq!(binomap_decompose(ptr::null(), ptr::null(), &mut d), BinomapStatus::NullPointer);
        let mut dim = 0;
        assert_eq!(binomap_map_dim(ptr::null(), 0, &mut dim), BinomapStatus::NullPointer);
        assert_eq!(binomap_decomposition_count(ptr::null()), 0);
        assert_eq!(binomap_system_num_vars(ptr::null()), 0);
        // freeing null is a no-op
        binomap_system_free(ptr::null_mut());
        binomap_decomposition_free(ptr::null_mut());
        binomap_string_free(ptr::null_mut());
    }
}

#[test]
fn invalid_utf8_is_reported() {
    let bytes = CString::new(vec![b'x', 0xff, b';']).unwrap();
    let mut sys = ptr::null_mut();
    let st = unsafe { binomap_system_parse(bytes.as_ptr(), &mut sys) };
    assert_eq!(st, BinomapStatus::InvalidUtf8);
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(binomap_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn c_compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok()?;
    Some(cc)
}

#[test]
fn header_is_valid_c_and_cxx() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler; skipping header check");
        return;
    };
    let include = crate_dir().join("include");
    assert!(include.join("binomap.h").exists());
    for lang in ["c", "c++"] {
        let out = Command::new(&cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg("-I")
            .arg(&include)
            .arg(crate_dir().join("tests/c/smoke.c"))
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{lang}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

/// `target/<profile>` of the running test binary.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler; skipping link check");
        return;
    };
    let lib = profile_dir().join("libbinomap_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping link check", lib.display());
        return;
    }
    let dir = tempfile::TempDir::new().unwrap();
    let exe = dir.path().join("smoke");
    let out = Command::new(&cc)
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
