use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("althecke").chain(args.iter().copied());
    let code = althecke::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dim_reports_exactly_four_keys() {
    let v = run_json(&["dim", "--n", "4", "--q", "2"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["even_words", "expected", "pass", "rank"]);
    assert_eq!(v["even_words"], 12);
    assert_eq!(v["rank"], 12);
    assert_eq!(v["expected"], 12);
    assert_eq!(v["pass"], true);
}

#[test]
fn rewrite_cube_of_first_generator() {
    let v = run_json(&["rewrite", "--n", "4", "--word", "y1 y1 y1"]);
    let words: Vec<&str> = v["normal_form"].as_array().unwrap().iter().map(|t| t["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["1", "y1", "y1 y1"]);
    // y1^3 = 1 + c^2 y1 - c^2 y1^2 with c = (q-1)/(q+1)
    let nf = v["normal_form"].as_array().unwrap();
    assert_eq!(nf[0]["coeff"]["num"], "1");
    assert_eq!(nf[1]["coeff"]["num"], "q^2 - 2*q + 1");
    assert_eq!(nf[1]["coeff"]["den"], "q^2 + 2*q + 1");
    assert_eq!(nf[2]["coeff"]["num"], "-q^2 + 2*q - 1");
}

#[test]
fn classify_three_strands() {
    let v = run_json(&["classify", "--n", "3", "--q", "3/2"]);
    let names: Vec<&str> = v["labels"].as_array().unwrap().iter().map(|l| l["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["3", "2,1+", "2,1-"]);
    assert_eq!(v["equivalences"], serde_json::json!([["3", "1,1,1"]]));
    assert_eq!(v["checks"]["sum_dim_sq"], 3);
    assert_eq!(v["checks"]["pass"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["classify", "--n", "5", "--q", "5/7"][..],
        &["verify", "--n", "4", "--q", "1.7", "--seed", "7"][..],
        &["rep", "--shape", "3,2", "--q", "0.3"][..],
        &["symmetry", "--shape", "3,1", "--q", "2"][..],
    ] {
        let (a, out_a, _) = run(args);
        let (b, out_b, _) = run(args);
        assert_eq!(a, b);
        assert_eq!(out_a, out_b, "{args:?}");
    }
}

#[test]
fn verify_passes_on_sample_points() {
    for q in ["2", "5/7", "0.3"] {
        let v = run_json(&["verify", "--n", "5", "--q", q]);
        assert_eq!(v["pass"], true, "q = {q}");
        assert_eq!(v["presentation"]["pass"], true);
        assert_eq!(v["f_relations"]["pass"], true);
        assert_eq!(v["rewriting_sample"]["pass"], true);
    }
}

#[test]
fn induce_and_tableaux() {
    let v = run_json(&["induce", "--n", "4", "--shape", "2,2"]);
    let rows = v["induced"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert_eq!(r["multiplicities"]["2,2"], 1);
        assert_eq!(r["induced_dim"], 2);
    }
    let t = run_json(&["tableaux", "--n", "4"]);
    let dims: Vec<u64> = t["diagrams"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 3, 2, 3, 1]);
}

#[test]
fn rep_matrices_are_square() {
    let v = run_json(&["rep", "--shape", "2,1", "--q", "2", "--form", "g"]);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 2);
    // g1 on the (2,1) tableau with 1,2 in a row acts by q
    assert_eq!(v["basis"][1], "1,2/3");
    assert_eq!(gens[0][1][1]["re"].as_f64(), Some(2.0));
}

#[test]
fn exit_codes_for_bad_input() {
    let cases: &[&[&str]] = &[
        &["dim", "--n", "3", "--q", "-1"],
        &["dim", "--n", "3", "--q", "0"],
        &["dim", "--n", "9"],
        &["dim", "--n", "4", "--max-n", "3"],
        &["rep", "--n", "3"],
        &["rep", "--shape", "2,2", "--n", "3"],
        &["rewrite", "--n", "4", "--word", "y3"],
        &["rewrite", "--n", "4"],
        &["classify", "--n", "3", "--q", "abc"],
        &["frobnicate"],
        &["dim"],
    ];
    for args in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}: {out}{err}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn text_output() {
    let (code, out, _) = run(&["dim", "--n", "3", "--output", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "even words: 3\nrank: 3\nexpected: 3\npass: true\n");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_althecke");
    let ok = Command::new(bin).args(["dim", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["dim", "--n", "3", "--q", "-1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("inadmissible"));
}
