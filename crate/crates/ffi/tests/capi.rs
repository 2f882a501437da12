use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use zk3_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    zk3_string_free(s);
    out
}

#[test]
fn lattice_round_trip() {
    let a1_a13_u = r#"{"label":"A2","rank":2,"gram":[[-2,1],[1,-2]]}"#;
    let json = CString::new(a1_a13_u).unwrap();
    unsafe {
        let mut l = ptr::null_mut();
        assert_eq!(zk3_lattice_from_json(json.as_ptr(), &mut l), Zk3Status::Ok);
        let mut rank = 0usize;
        assert_eq!(zk3_lattice_rank(l, &mut rank), Zk3Status::Ok);
        assert_eq!(rank, 2);
        let mut s = ptr::null_mut();
        assert_eq!(zk3_lattice_discriminant(l, &mut s), Zk3Status::Ok);
        assert_eq!(take(s), "3");
        assert_eq!(zk3_lattice_discriminant_group(l, &mut s), Zk3Status::Ok);
        assert_eq!(take(s), "Z/3");
        let mut sigma = 0u32;
        assert_eq!(zk3_lattice_artin_bound(l, 5, &mut sigma), Zk3Status::Ok);
        assert_eq!(sigma, 10);
        assert_eq!(zk3_lattice_artin_bound(l, 3, &mut sigma), Zk3Status::PrimeDividesDiscriminant);
        assert!(!zk3_last_error().is_null());
        zk3_lattice_free(l);
    }
}

#[test]
fn gram_input_and_errors() {
    unsafe {
        let mut l = ptr::null_mut();
        let u = [0i64, 1, 1, 0];
        assert_eq!(zk3_lattice_from_gram(u.as_ptr(), 2, &mut l), Zk3Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(zk3_lattice_discriminant_group(l, &mut s), Zk3Status::Ok);
        assert_eq!(take(s), "0");
        zk3_lattice_free(l);

        let asym = [0i64, 1, 2, 0];
        assert_eq!(zk3_lattice_from_gram(asym.as_ptr(), 2, &mut l), Zk3Status::InvalidArgument);
        let zero = [0i64; 4];
        assert_eq!(zk3_lattice_from_gram(zero.as_ptr(), 2, &mut l), Zk3Status::Ok);
        assert_eq!(zk3_lattice_discriminant(l, &mut s), Zk3Status::Singular);
        zk3_lattice_free(l);

        assert_eq!(zk3_lattice_from_gram(ptr::null(), 2, &mut l), Zk3Status::NullPointer);
        assert_eq!(zk3_lattice_rank(ptr::null(), ptr::null_mut()), Zk3Status::NullPointer);
        let msg = CStr::from_ptr(zk3_last_error()).to_str().unwrap();
        assert!(msg.contains("null"));
        zk3_lattice_free(ptr::null_mut());
        zk3_string_free(ptr::null_mut());
    }
}

#[test]
fn adjusted_bound() {
    let mut out = 0u32;
    unsafe {
        assert_eq!(zk3_artin_bound_adjusted(21, 26, 13, &mut out), Zk3Status::Ok);
    }
    assert_eq!(out, 1);
}

#[test]
fn quaternion_product() {
    // F in the j=0 basis and τ in the j=1728 basis are both the second coordinate
    let f = CString::new("0,1,0,0").unwrap();
    let tau = CString::new("0,1,0,0").unwrap();
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(zk3_quat_mul(Zk3Case::J0, 11, f.as_ptr(), f.as_ptr(), &mut s), Zk3Status::Ok);
        assert_eq!(take(s), "-11,0,0,0");
        assert_eq!(zk3_quat_mul(Zk3Case::J1728, 7, tau.as_ptr(), tau.as_ptr(), &mut s), Zk3Status::Ok);
        assert_eq!(take(s), "-1,0,0,0");
        assert_eq!(
            zk3_quat_mul(Zk3Case::J1728, 5, tau.as_ptr(), tau.as_ptr(), &mut s),
            Zk3Status::InadmissiblePrime
        );
        let bad = CString::new("1,2").unwrap();
        assert_eq!(zk3_quat_mul(Zk3Case::J0, 5, bad.as_ptr(), f.as_ptr(), &mut s), Zk3Status::InvalidArgument);
    }
}

#[test]
fn repro_through_the_abi() {
    let filter = CString::new("prop-2.3").unwrap();
    let primes = [5u64, 11, 23];
    unsafe {
        let mut s = ptr::null_mut();
        let mut failed = -1;
        let st = zk3_repro_run(filter.as_ptr(), primes.as_ptr(), 3, Zk3Format::Json, &mut s, &mut failed);
        assert_eq!(st, Zk3Status::Ok);
        assert_eq!(failed, 0);
        let text = take(s);
        assert_eq!(text.matches("\"id\": \"prop-2.3\"").count(), 6);
        assert!(!text.contains("\"fail\""));

        let unknown = CString::new("no-such-claim").unwrap();
        let st = zk3_repro_run(unknown.as_ptr(), ptr::null(), 0, Zk3Format::Tsv, &mut s, &mut failed);
        assert_eq!(st, Zk3Status::UnknownClaim);
    }
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let lib = target_dir().join("libzk3_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = tempfile_path("zk3_smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{run:?}");
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
    let _ = std::fs::remove_file(out);
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
