use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use althecke_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ah_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = ah_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn representation_round_trip() {
    unsafe {
        let mut rep = ptr::null_mut();
        let st = ah_representation_new(c("2,1").as_ptr(), c("2").as_ptr(), AhForm::G, &mut rep);
        assert_eq!(st, AhStatus::Ok);
        assert!(ah_last_error().is_null());
        assert_eq!(ah_representation_dim(rep), 2);
        assert_eq!(ah_representation_n(rep), 3);
        let mut re = [0.0; 4];
        let mut im = [0.0; 4];
        let st = ah_representation_generator(rep, 1, re.as_mut_ptr(), im.as_mut_ptr(), 4);
        assert_eq!(st, AhStatus::Ok);
        // basis 1,3/2 then 1,2/3: g1 acts by -1 and q
        assert_eq!(re, [-1.0, 0.0, 0.0, 2.0]);
        assert_eq!(im, [0.0; 4]);
        // quadratic relation g^2 = (q-1) g + q on generator 2
        let st = ah_representation_generator(rep, 2, re.as_mut_ptr(), ptr::null_mut(), 4);
        assert_eq!(st, AhStatus::Ok);
        for r in 0..2 {
            for col in 0..2 {
                let sq: f64 = (0..2).map(|k| re[r * 2 + k] * re[k * 2 + col]).sum();
                let want = re[r * 2 + col] + if r == col { 2.0 } else { 0.0 };
                assert!((sq - want).abs() < 1e-12);
            }
        }
        assert_eq!(ah_representation_generator(rep, 3, re.as_mut_ptr(), ptr::null_mut(), 4), AhStatus::OutOfRange);
        assert_eq!(ah_representation_generator(rep, 1, re.as_mut_ptr(), ptr::null_mut(), 3), AhStatus::OutOfRange);
        ah_representation_free(rep);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut rep = ptr::null_mut();
        let st = ah_representation_new(c("2,1").as_ptr(), c("-1").as_ptr(), AhForm::F, &mut rep);
        assert_eq!(st, AhStatus::Inadmissible);
        assert!(last_error().contains("q = -1"));
        assert!(rep.is_null());
        let st = ah_representation_new(c("2,x").as_ptr(), c("2").as_ptr(), AhForm::F, &mut rep);
        assert_eq!(st, AhStatus::InvalidInput);
        let st = ah_representation_new(ptr::null(), c("2").as_ptr(), AhForm::F, &mut rep);
        assert_eq!(st, AhStatus::NullPointer);
        let mut engine = ptr::null_mut();
        assert_eq!(ah_engine_new(1, &mut engine), AhStatus::InvalidInput);
        // null handles are tolerated by the free functions
        ah_representation_free(ptr::null_mut());
        ah_engine_free(ptr::null_mut());
        ah_string_free(ptr::null_mut());
        assert_eq!(ah_representation_dim(ptr::null()), 0);
    }
}

#[test]
fn engine_rewrites_to_json() {
    unsafe {
        let mut engine = ptr::null_mut();
        assert_eq!(ah_engine_new(4, &mut engine), AhStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(ah_engine_rewrite_json(engine, c("y2 y2").as_ptr(), &mut out), AhStatus::Ok);
        let text = take(out);
        assert!(text.contains("\"word\": \"1\""), "{text}");
        assert_eq!(text.matches("\"word\"").count(), 1);
        let st = ah_engine_rewrite_json(engine, c("y5").as_ptr(), &mut out);
        assert_eq!(st, AhStatus::InvalidInput);
        ah_engine_free(engine);
    }
}

#[test]
fn run_matches_command_line() {
    unsafe {
        let args = [c("dim"), c("--n"), c("4")];
        let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
        let mut out = ptr::null_mut();
        let mut err = ptr::null_mut();
        assert_eq!(ah_run(argv.len(), argv.as_ptr(), &mut out, &mut err), 0);
        let text = take(out);
        assert!(take(err).is_empty());
        assert!(text.contains("\"rank\": 12"));

        let args = [c("dim"), c("--n"), c("4"), c("--q"), c("0")];
        let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
        assert_eq!(ah_run(argv.len(), argv.as_ptr(), ptr::null_mut(), &mut err), 1);
        assert!(take(err).contains("inadmissible"));
        assert_eq!(ah_run(1, ptr::null(), ptr::null_mut(), ptr::null_mut()), -1);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = std::env::temp_dir().join(format!("althecke_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"althecke.h\"\n\
         int main(void) {\n\
           AhRepresentation *rep = 0;\n\
           AhStatus st = ah_representation_new(\"3,1\", \"2\", AH_FORM_F, &rep);\n\
           size_t d = ah_representation_dim(rep);\n\
           ah_representation_free(rep);\n\
           return st == AH_STATUS_OK && d == 3 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .status()
        .expect("a C compiler on PATH");
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}
