use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use admissible_ffi::*;
use serde_json::Value;

fn fixture(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

unsafe fn take(s: *mut c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    adm_string_free(s);
    v
}

unsafe fn last_error() -> String {
    let p = adm_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn load(name: &str) -> *mut AdmGame {
    let mut g = ptr::null_mut();
    assert_eq!(adm_game_load(fixture(name).as_ptr(), &mut g), AdmStatus::Ok);
    g
}

#[test]
fn game_queries() {
    unsafe {
        let g = load("example1.json");
        let mut n = 0usize;
        assert_eq!(adm_game_num_strategies(g, 0, &mut n), AdmStatus::Ok);
        assert_eq!(n, 3);

        let mut out = ptr::null_mut();
        assert_eq!(adm_game_ia(g, &mut out), AdmStatus::Ok);
        let v = take(out);
        assert_eq!(v["limit"]["a"], serde_json::json!(["m"]));
        assert_eq!(v["fixpoint"], 3);

        assert_eq!(adm_game_sas_enumerate(g, false, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["sas"].as_array().unwrap().len(), 4);

        let set = CString::new("a=u;b=r").unwrap();
        assert_eq!(adm_game_sas_check(g, set.as_ptr(), &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["holds"], true);

        assert_eq!(adm_game_stahl(g, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["rounds"].as_array().unwrap().len(), 4);
        adm_game_free(g);
    }
}

#[test]
fn structures() {
    unsafe {
        let g = load("example1.json");
        let mut ts = ptr::null_mut();
        let set = CString::new("a=m;b=l").unwrap();
        assert_eq!(adm_structure_build_sas(g, set.as_ptr(), &mut ts), AdmStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(adm_structure_iterate(ts, AdmMode::Rhat, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["projection"], "{m}×{l}");

        // round trip through JSON
        assert_eq!(adm_structure_to_json(ts, &mut out), AdmStatus::Ok);
        let doc = CString::new(take(out).to_string()).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(adm_structure_from_json(doc.as_ptr(), &mut again), AdmStatus::Ok);
        assert_eq!(adm_structure_iterate(again, AdmMode::Rcbr, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["projection"], "{m}×{l}");
        adm_structure_free(ts);
        adm_structure_free(again);

        let mut d1 = ptr::null_mut();
        assert_eq!(
            adm_structure_load(fixture("exampleD1.json").as_ptr(), &mut d1),
            AdmStatus::Ok
        );
        assert_eq!(adm_structure_iterate(d1, AdmMode::Rhat, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["projection"], "{u}×{r}");
        adm_structure_free(d1);

        let bad = CString::new("a=u;b=l").unwrap();
        assert_eq!(
            adm_structure_build_sas(g, bad.as_ptr(), &mut ts),
            AdmStatus::Precondition
        );
        assert!(last_error().contains("precondition"));
        adm_game_free(g);
    }
}

#[test]
fn lps_checks() {
    unsafe {
        let doc =
            CString::new(r#"{"space":[["s1","t"],["s2","t"],["s3","t"]],"levels":[[1,0,0],[0,"1/2","1/2"]]}"#).unwrap();
        let mut mu = ptr::null_mut();
        assert_eq!(adm_lps_from_json(doc.as_ptr(), &mut mu), AdmStatus::Ok);
        let mut out = ptr::null_mut();
        let e = CString::new("s1").unwrap();
        assert_eq!(
            adm_lps_check(mu, e.as_ptr(), AdmNotion::Cautious, &mut out),
            AdmStatus::Ok
        );
        assert_eq!(take(out)["result"], 1);
        let e = CString::new("s1;s2").unwrap();
        assert_eq!(
            adm_lps_check(mu, e.as_ptr(), AdmNotion::Cautious, &mut out),
            AdmStatus::Ok
        );
        assert_eq!(take(out)["result"], Value::Null);
        assert_eq!(adm_lps_check(mu, e.as_ptr(), AdmNotion::Weak, &mut out), AdmStatus::Ok);
        assert_eq!(take(out)["result"], true);
        adm_lps_free(mu);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let junk = CString::new("{not json").unwrap();
        assert_eq!(adm_game_from_json(junk.as_ptr(), &mut g), AdmStatus::Invalid);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(adm_game_from_json(ptr::null(), &mut g), AdmStatus::NullArgument);
        assert_eq!(last_error(), "json is null");

        let missing = CString::new("/nonexistent.json").unwrap();
        assert_eq!(adm_game_load(missing.as_ptr(), &mut g), AdmStatus::Io);

        let mut out = ptr::null_mut();
        assert_eq!(adm_game_ia(ptr::null(), &mut out), AdmStatus::NullArgument);

        // success clears the previous message
        let g = load("boss.json");
        assert!(adm_last_error().is_null());
        assert_eq!(adm_game_num_strategies(g, 7, ptr::null_mut()), AdmStatus::Invalid);
        adm_game_free(g);
        adm_game_free(ptr::null_mut());
        adm_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_lists_items() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(adm_verify(1, &mut out), AdmStatus::Ok);
        let v = take(out);
        let items = v["items"].as_array().unwrap();
        assert!(items
            .iter()
            .any(|it| it["name"] == "Theorem 5" && it["status"] == "not-runnable"));
        let version = CStr::from_ptr(adm_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/admissible.h")).unwrap();
    for name in [
        "typedef struct AdmGame AdmGame;",
        "ADM_STATUS_NULL_ARGUMENT = 5",
        "adm_game_ia(",
        "adm_structure_build_lemma1(",
        "adm_lps_check(",
        "adm_last_error(void)",
        "adm_string_free(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libadmissible_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile_dir();
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&exe)
        .arg(fixture("example1.json").to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["limit"]["b"], serde_json::json!(["l"]));
    assert_eq!(lines[1]["projection"], "{m}×{l}");
}

fn tempfile_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
