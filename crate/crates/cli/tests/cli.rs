use std::process::{Command, Output};

use serde_json::Value;

fn cuspidal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cuspidal(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn bessel_suite_exits_zero() {
    let out = cuspidal(&["verify", "--suite", "bessel", "--q", "3", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "verify/v1");
    assert_eq!(v["passed"], true);
}

#[test]
fn three_cuspidals_of_gl2_f3() {
    let v = json(&["cuspidals", "--q", "3", "--r", "2", "--format", "json"]);
    assert_eq!(v["cuspidals"].as_array().unwrap().len(), 3);
    assert!(v["cuspidals"].as_array().unwrap().iter().all(|c| c["dim"] == 2));
}

#[test]
fn rank_one_epsilon_has_modulus_one() {
    let v = json(&["epsilon", "--q", "3", "--r", "1", "--theta1", "1", "--theta2", "0", "--oracle"]);
    assert_eq!(v["modulus"], 1.0);
    assert_eq!(v["epsilon_at_half"]["re"], 0.0);
    assert_eq!(v["epsilon_at_half"]["im"], 1.0);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["l_factor"]["type"], "trivial");
}

#[test]
fn same_sigma_l_factor() {
    let v = json(&[
        "epsilon", "--q", "3", "--r", "2", "--theta1", "1", "--theta2", "1", "--t1", "-1", "--oracle",
    ]);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["l_factor"]["type"], "factor");
    assert_eq!(v["modulus"], 1.0);
}

#[test]
fn bessel_table_of_gl2_f2_has_six_rows() {
    let v = json(&["bessel", "--q", "2", "--r", "2", "--theta", "1"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    let out = cuspidal(&["--format", "csv", "bessel", "--q", "2", "--r", "2", "--theta", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("#schema=bessel/v1"));
    assert_eq!(lines.next(), Some("g,value,re,im"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn repeated_invocations_are_identical() {
    for args in [
        &["field", "--q", "9"][..],
        &["--format", "csv", "cuspidals", "--q", "2", "--r", "3"],
        &["bessel", "--q", "3", "--r", "2", "--theta", "1", "--domain", "mirabolic"],
        &["epsilon", "--q", "5", "--r", "1", "--theta1", "1", "--theta2", "3", "--t2", "i"],
        &["transfer", "--q", "3", "--r", "1", "--theta1", "1", "--theta2", "0", "--vnu", "1", "--N", "2", "--e", "2"],
        &["verify", "--suite", "transfer"],
    ] {
        let a = cuspidal(args);
        let b = cuspidal(args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn transfer_shifts_the_s_power() {
    let v = json(&[
        "transfer", "--q", "3", "--r", "1", "--theta1", "1", "--theta2", "0", "--vnu", "1", "--N", "2", "--e", "2",
        "--zeta", "-1",
    ]);
    assert_eq!(v["transferred"]["qbase"], 3);
    assert_eq!(v["transferred"]["s_coeff"], "1");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["cuspidals", "--q", "6", "--r", "2"][..],
        &["bogus"],
        &["epsilon", "--q", "3", "--r", "1", "--theta1", "0", "--theta2", "0", "--t1", "2"],
        &["transfer", "--q", "3", "--r", "1", "--theta1", "1", "--theta2", "0", "--vnu", "0", "--N", "3", "--e", "2"],
        &["verify", "--suite", "nope"],
        &["--field-cap", "8", "field", "--q", "9"],
    ] {
        let out = cuspidal(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn csv_header_is_versioned() {
    let out = cuspidal(&["--format", "csv", "cuspidals", "--q", "2", "--r", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("#schema=cuspidals/v1\nexponent,orbit,dim,central_exponent\n"));
}

#[test]
fn writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suites.json");
    let out = cuspidal(&["-o", path.to_str().unwrap(), "verify", "--list"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 6);
}

#[test]
fn unwritable_output_path_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.json");
    let out = cuspidal(&["-o", path.to_str().unwrap(), "field", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
