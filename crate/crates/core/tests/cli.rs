//! End-to-end runs of the binary: outputs, exit codes, atomic writes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankwitness"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

const GAB_N4_K2: &str = r#"{"field":{"p":2,"m":4},"code":{"kind":"gabidulin","k":2},"points":{"kind":"standard","n":4}}"#;

#[test]
fn run_list_names_bundled_recipes() {
    let out = rw(&["run", "--list"]);
    assert!(out.status.success());
    let names = json_of(&out);
    assert_eq!(names.as_array().unwrap().len(), 5);
}

#[test]
fn run_writes_report_then_verify_and_lift_accept_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let out = rw(&["run", "gabidulin_n4_general", "-o", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stdout.is_empty());
    let run: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(run["verified"], true);
    assert_eq!(run["witness"]["bound"], 35);
    // no temporary files left beside the output
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let wpath = dir.path().join("witness.json");
    std::fs::write(&wpath, run["witness"].to_string()).unwrap();
    let v = rw(&["witness", "verify", wpath.to_str().unwrap(), "--exhaustive"]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(json_of(&v)["checks"]["exhaustive_ball"], 35);

    let l = rw(&["lift", wpath.to_str().unwrap()]);
    assert_eq!(l.status.code(), Some(0));
    let l = json_of(&l);
    assert_eq!(l["ball_injection"]["holds"], true);
    assert_eq!(l["lifted_code"]["distance_law_holds"], true);
}

#[test]
fn tampered_report_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = rw(&["run", "gabidulin_n4_binomial"]);
    let mut w = json_of(&out)["witness"].clone();
    // replace w by the first listed codeword: now w ∈ C
    w["w"] = w["list"][0].clone();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, w.to_string()).unwrap();
    let v = rw(&["witness", "verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(3));
    assert_eq!(json_of(&v)["checks"]["w_outside_code"], false);
}

#[test]
fn hypothesis_violation_exits_2_and_names_it() {
    let spec = r#"{"field":{"p":2,"m":4},"code":{"kind":"gabidulin","k":1},"points":{"kind":"standard","n":4},
        "witness":{"mode":"subfield_basis","l":2,"h":1,"j":0,"family":{"kind":"binomial","n":4,"t":1}}}"#;
    let out = rw(&["witness", "build", "--spec", spec]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).trim().is_empty());
}

#[test]
fn malformed_input_exits_1() {
    let out = rw(&["analyze", "--spec", "{not json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = rw(&["run", "no_such_recipe"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_json_and_csv_agree() {
    let j = json_of(&rw(&["analyze", "--spec", GAB_N4_K2]));
    let claims = j["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 12);
    let out = rw(&["analyze", "--spec", GAB_N4_K2, "--format", "csv"]);
    assert!(out.status.success());
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), claims.len());
    for (row, claim) in rows.iter().zip(claims) {
        assert_eq!(&row[0], claim["theorem"].as_str().unwrap());
        assert_eq!(&row[1], claim["applicable"].to_string());
    }
}

#[test]
fn code_mindist_and_singleton() {
    let md = json_of(&rw(&["code", "mindist", "--spec", GAB_N4_K2]));
    assert_eq!(md["min_distance"]["d"], 3);
    let s = json_of(&rw(&["code", "singleton", "--spec", GAB_N4_K2]));
    assert_eq!(s["singleton"]["is_mrd"], true);
    let tight = rw(&["code", "mindist", "--spec", GAB_N4_K2, "--budget", "3"]);
    assert_eq!(tight.status.code(), Some(1));
}

#[test]
fn bounds_and_field_arithmetic() {
    let j = json_of(&rw(&[
        "bounds", "johnson", "--m", "8", "--n", "8", "--h", "2",
    ]));
    assert!((j["threshold"].as_f64().unwrap() - (8.0 - 8f64.sqrt())).abs() < 1e-9);
    let neg = rw(&["bounds", "johnson", "--m", "4", "--n", "4", "--h", "0"]);
    assert_eq!(neg.status.code(), Some(2));
    let g = json_of(&rw(&[
        "bounds", "gaussian", "--n", "4", "--r", "2", "--q", "2",
    ]));
    assert_eq!(g["value"], "35");
    let f = json_of(&rw(&[
        "field",
        "--p",
        "3",
        "--m",
        "2",
        "--op",
        "div",
        "--a",
        "\"one\"",
        "--b",
        "\"primitive\"",
    ]));
    let x = json_of(&rw(&[
        "field",
        "--p",
        "3",
        "--m",
        "2",
        "--op",
        "mul",
        "--a",
        &f["result"]["coords"].to_string(),
        "--b",
        "\"primitive\"",
    ]));
    assert_eq!(x["result"]["coords"], serde_json::json!([1, 0]));
    let z = rw(&[
        "field", "--p", "2", "--m", "3", "--op", "div", "--a", "\"one\"", "--b", "[0,0,0]",
    ]);
    assert_eq!(z.status.code(), Some(1));
}

#[test]
fn family_and_poly() {
    let fam = json_of(&rw(&[
        "family",
        "--p",
        "2",
        "--m",
        "4",
        "--spec",
        r#"{"kind":"binomial","n":4,"t":2}"#,
        "--members",
    ]));
    assert_eq!(fam["actual_size"], 5);
    assert_eq!(fam["members"].as_array().unwrap().len(), 5);
    let first = fam["members"][0].to_string();
    let p = json_of(&rw(&["poly", "--p", "2", "--m", "4", "--coeffs", &first]));
    assert_eq!(p["is_subspace_poly"], true);
    assert_eq!(p["kernel_dim"], 2);
}

#[test]
fn spec_arguments_may_be_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    std::fs::write(&path, GAB_N4_K2).unwrap();
    let out = rw(&["code", "build", "--spec", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["size_log_q"], 8);
    assert!(Path::new(&path).exists());
}
