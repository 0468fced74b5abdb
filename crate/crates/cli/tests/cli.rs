use std::process::{Command, Output};

use kacpoly::closedform::{a_one, a_one_rho_poly};
use kacpoly::hua::refine;
use kacpoly::{BigRat, Partition, QPoly};
use serde_json::Value;

fn kacpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kacpoly")).args(args).output().expect("run kacpoly")
}

fn json(args: &[&str]) -> Value {
    let out = kacpoly(&[args, &["--format", "json"]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn rat_list(v: &Value) -> Vec<BigRat> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect()
}

#[test]
fn table_json_round_trips_exact_values() {
    let v = json(&["table", "--g", "3", "--nmax", "4"]);
    let table = refine(3, 4).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), table.entries().count());
    for (row, entry) in rows.iter().zip(table.entries()) {
        assert_eq!(row["lambda"], entry.partition.to_string());
        let num = QPoly::new(rat_list(&row["A_coeffs"]));
        let den = QPoly::new(rat_list(&row["denominator"]));
        assert_eq!(&num, entry.value.num());
        assert_eq!(&den, entry.value.den());
        assert_eq!(row["polynomial"], true);
        assert_eq!(row["nonnegative"], true);
        assert_eq!(row["at_one_series"], row["at_one_closed"]);
    }
}

#[test]
fn genus_one_has_no_closed_form_column() {
    let v = json(&["table", "--g", "1", "--nmax", "2"]);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["at_one_closed"].is_null()));
    let text = String::from_utf8(kacpoly(&["table", "--g", "1", "--nmax", "2"]).stdout).unwrap();
    assert!(text.contains("n/a"));
}

#[test]
fn closedform_outputs() {
    let v = json(&["closedform", "--lambda", "2,1", "--rho", "2"]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["rho"], 2);
    let v = json(&["closedform", "--lambda", "3,1,1", "--rho", "3"]);
    let lambda: Partition = "3,1,1".parse().unwrap();
    assert_eq!(v["value"].as_str().unwrap().parse::<BigRat>().unwrap(), a_one(3, &lambda).unwrap());

    let v = json(&["closedform", "--lambda", "1,1,1", "--symbolic"]);
    let coeffs = rat_list(&v["rho_poly"]);
    assert_eq!(coeffs.len(), 3);
    assert_eq!(coeffs.last().unwrap(), &"1/2".parse::<BigRat>().unwrap());
    let poly = a_one_rho_poly(&"1,1,1".parse().unwrap()).unwrap();
    assert_eq!(coeffs, poly.coeffs());
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["table", "--g", "2", "--nmax", "5", "--format", "json"][..],
        &["verify", "--suite", "inversion", "--seed", "42", "--format", "json"][..],
        &["asymptotics", "--a", "3", "--T", "0.5", "--format", "json"][..],
    ] {
        let first = kacpoly(args);
        let second = kacpoly(args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "--suite", "closedform", "--max-size", "4", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_kacpoly")).args(args).env("KAC_THREADS", "1").output().unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_kacpoly")).args(args).env("KAC_THREADS", "4").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_reports_seed_and_suites() {
    let v = json(&["verify", "--suite", "inversion", "--seed", "7"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["options"]["seed"], 7);
    assert_eq!(v["suites"][0]["suite"], "inversion");
    let other = json(&["verify", "--suite", "inversion", "--seed", "8"]);
    assert_ne!(v, other, "the random matrices depend on the seed");
}

#[test]
fn asymptotics_report() {
    let v = json(&["asymptotics", "--a", "2", "--T", "1"]);
    let z = v["z"].as_f64().unwrap();
    assert!((z - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-14);
    for r in v["residuals"].as_array().unwrap() {
        assert!(r.as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| kacpoly(args).status.code();
    assert_eq!(code(&["table", "--g", "2", "--nmax", "0"]), Some(2));
    assert_eq!(code(&["table", "--g", "5", "--nmax", "2"]), Some(2));
    assert_eq!(code(&["closedform", "--lambda", "2,1", "--rho", "0"]), Some(2));
    assert_eq!(code(&["closedform", "--lambda", "1,2", "--rho", "2"]), Some(2));
    assert_eq!(code(&["closedform", "--lambda", "2,1"]), Some(2));
    assert_eq!(code(&["asymptotics", "--a", "-1", "--T", "1"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "closedform", "--max-size", "4"]), Some(0));
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_kacpoly"))
        .args(["table", "--g", "2", "--nmax", "1"])
        .env("KAC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}
