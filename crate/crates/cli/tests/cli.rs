use std::process::{Command, Output};

use serde_json::Value;

const ODD_GOLDEN: &str = include_str!("../../core/tests/golden/odd.csv");
const EVEN_GOLDEN: &str = include_str!("../../core/tests/golden/even.csv");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetterberg")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn field_command() {
    let v = json(&["field", "--p", "2", "--m", "2", "--s", "2"]);
    assert_eq!(v["h_order"], 17);
    let v = json(&["field", "--p", "3", "--m", "1", "--s", "2", "--dump"]);
    assert_eq!(v["modulus"].as_array().unwrap().len(), 5);
    assert_eq!(code(&["field", "--p", "4", "--m", "1", "--s", "1"]), 2);
}

#[test]
fn radius_command() {
    let v = json(&["radius", "--q0", "3", "--s", "2", "--method", "verify", "--no-timing"]);
    assert_eq!(v["rho"], 3);
    let checks = v["cross_checks"].as_array().unwrap();
    assert!(checks.len() >= 2);
    assert!(checks.iter().all(|c| c["rho"] == 3));

    let v = json(&["radius", "--q0", "13", "--s", "3", "--no-timing"]);
    assert_eq!(v["rho"], 3);
    assert!(v["witness"].is_object());

    assert_eq!(code(&["radius", "--q0", "16", "--s", "9"]), 4);
    assert_eq!(code(&["radius", "--q0", "16", "--s", "3", "--method", "oracle"]), 3);
    assert_eq!(code(&["radius", "--q0", "3", "--s", "2", "--method", "bogus"]), 2);
}

#[test]
fn mindist_command() {
    let v = json(&["mindist", "--q0", "4", "--s", "2", "--variant", "full", "--exhaustive"]);
    assert_eq!(v["d"], 4);
    assert_eq!(v["verified"], true);
    let v = json(&["mindist", "--q0", "3", "--s", "2", "--variant", "half", "--exhaustive"]);
    assert_eq!(v["d"], 5);
    let v = json(&["mindist", "--q0", "5", "--s", "1", "--variant", "half"]);
    assert_eq!(v["d"], 3);
    assert_eq!(code(&["mindist", "--q0", "4", "--s", "2", "--variant", "half"]), 2);
}

#[test]
fn thresholds_command() {
    assert_eq!(stdout(&["thresholds", "--parity", "odd", "--q0-max", "59"]), ODD_GOLDEN);
    assert_eq!(stdout(&["thresholds", "--parity", "even", "--q0-max", "128"]), EVEN_GOLDEN);
    let small = stdout(&["thresholds", "--parity", "odd", "--q0-max", "5"]);
    let q0s: Vec<&str> = small.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(q0s, ["3", "5"]);
}

#[test]
fn classify_command() {
    let v = json(&["classify", "--q0", "2", "--s-max", "6", "--variant", "full", "--no-timing"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let by_s = |s: u64| rows.iter().find(|r| r["s"] == s).unwrap();
    assert_eq!((by_s(1)["rho"].as_u64(), by_s(1)["perfect"].as_bool()), (Some(1), Some(true)));
    assert_eq!((by_s(2)["d"].as_u64(), by_s(2)["perfect"].as_bool()), (Some(5), Some(true)));
    for s in [4, 6] {
        assert_eq!(by_s(s)["rho"], 3);
        assert_eq!(by_s(s)["quasi_perfect"], true);
        assert_eq!(by_s(s)["maximal"], true);
    }

    let v = json(&["classify", "--q0", "5", "--s-max", "3", "--variant", "half"]);
    let s1 = &v.as_array().unwrap()[0];
    assert_eq!((s1["d"].as_u64(), s1["rho"].as_u64()), (Some(3), Some(2)));
    assert_eq!(s1["quasi_perfect"], true);

    let md = stdout(&["classify", "--q0", "7", "--s-max", "2", "--variant", "half", "--format", "markdown"]);
    assert!(md.contains("| 7 | 2 | 4 | 3 | - | yes |"), "{md}");
}

#[test]
fn outputs_are_deterministic() {
    let cases: [&[&str]; 3] = [
        &["radius", "--q0", "4", "--s", "3", "--method", "verify", "--no-timing"],
        &["classify", "--q0", "3", "--s-max", "3", "--variant", "full", "--format", "csv", "--no-timing"],
        &["field", "--p", "5", "--m", "1", "--s", "2", "--dump"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
