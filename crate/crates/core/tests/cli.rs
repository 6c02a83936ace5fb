//! The installed binary: output text and exit codes.

use std::process::Command;

fn taukit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_taukit")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

const R_EQUAL_D: &str = r#"{"constant":"1","num":[{"lin":{"shift":"0"}}],"den":[]}"#;
const R_RATIO: &str = r#"{"num":[{"lin":{"shift":"1/2"}}],"den":[{"lin":{"shift":"1/3"}}]}"#;

#[test]
fn expand_example() {
    let (code, out, _) = taukit(&["expand", "--rspec", R_EQUAL_D, "-M", "1", "-d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"[]\":\"1\",\"[1]\":\"1\",\"[2]\":\"2\",\"[1,1]\":\"0\"}\n");
    let (_, out, _) = taukit(&["expand", "--rspec", R_EQUAL_D, "-d", "0"]);
    assert_eq!(out, "{\"[]\":\"1\"}\n");
    let (_, csv, _) = taukit(&["expand", "--rspec", R_EQUAL_D, "-M", "1", "-d", "1", "--format", "csv"]);
    assert_eq!(csv, "partition,coefficient\n[],1\n[1],1\n");
}

#[test]
fn rspec_from_file() {
    let path = std::env::temp_dir().join(format!("taukit-rspec-{}.json", std::process::id()));
    std::fs::write(&path, R_RATIO).unwrap();
    let arg = format!("@{}", path.display());
    let (code, from_file, _) = taukit(&["expand", "--rspec", &arg, "-M", "-1", "-d", "3"]);
    let (_, inline, _) = taukit(&["expand", "--rspec", R_RATIO, "-M", "-1", "-d", "3"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(from_file, inline);
    assert_eq!(taukit(&["expand", "--rspec", "@/nonexistent/r.json"]).0, 2);
}

#[test]
fn verify_reports() {
    let (code, out, _) = taukit(&["verify", "hirota", "--rspec", R_RATIO, "-M", "0", "-d", "5"]);
    assert_eq!(code, 0);
    let rep: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rep["pass"], true);
    assert_eq!(rep["grade"], 4);
    assert!(rep["failure"].is_null());

    let (code, _, err) = taukit(&["verify", "toda", "--gauge", "standard", "--rspec", R_EQUAL_D, "-d", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("vanishes at integer point 0"), "{err}");
    assert_eq!(taukit(&["verify", "toda", "--rspec", R_EQUAL_D, "-d", "3"]).0, 0);

    for args in [
        &["verify", "kp", "--rspec", R_RATIO, "-M", "1", "-d", "4"][..],
        &["verify", "ode", "--a", "1/2,1/3", "--b", "5/7", "--order", "10"],
        &["verify", "qdiff", "--a", "1/2", "--b", "3/2", "--q", "1/9", "--order", "10"],
        &["verify", "qdiff", "--qa", "3/7", "--qb", "2/9", "--q", "1/3"],
        &["verify", "oracle", "--rspec", R_RATIO, "-M", "0", "-d", "4", "--window", "6"],
        &["verify", "remark1", "--mode", "miwa", "-N", "2", "-d", "6"],
        &["verify", "prop4", "--rspec", R_RATIO, "--b", "-1/3", "-M", "-1", "-d", "4"],
    ] {
        let (code, out, err) = taukit(args);
        assert_eq!(code, 0, "{args:?}: {out} {err}");
    }
}

#[test]
fn eval_pfq_series() {
    let (code, out, _) = taukit(&["eval", "pfq", "--a", "1/2", "--b", "3/2", "--x", "1/4", "--order", "6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // (1/2)_k / ((3/2)_k k!) = 1 / ((2k+1) k!)
    let expected = ["1", "1/3", "1/10", "1/42", "1/216", "1/1320", "1/9360"];
    assert_eq!(v["coefficients"], serde_json::json!(expected));
    let (_, csv, _) = taukit(&["eval", "pfq", "--a", "1/2", "--b", "3/2", "--order", "2", "--format", "csv"]);
    assert_eq!(csv, "k,coefficient\n0,1\n1,1/3\n2,1/10\n");
}

#[test]
fn eval_families() {
    let (code, out, _) = taukit(&["eval", "cg", "--spins", "1/2,1/2,1,1/2,1/2", "--q", "1/2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rational"], "1");
    assert_eq!(v["radicand"], "1");
    let (code, out, _) = taukit(&["eval", "aw", "-n", "1", "--params", "1/5,1/7,2/7,1/11", "--q", "1/3", "--x", "1/2"]);
    assert_eq!(code, 0);
    // p_1 = 2(1 - abcd)x - (a+b+c+d) + abc + abd + acd + bcd
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "807/2695");
    let (code, _, err) = taukit(&["eval", "qphi", "--a", "1/2", "--q", "1/3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not rational"));
}

#[test]
fn usage_errors() {
    for args in [
        &["bogus"][..],
        &["expand"],
        &["expand", "--rspec", "{not json"],
        &["expand", "--rspec", R_EQUAL_D, "--format", "xml"],
        &["verify", "ode", "--a", "one-half"],
        &["verify", "oracle", "--rspec", R_EQUAL_D, "-d", "4", "--window", "2"],
        &["verify", "prop4", "--rspec", R_RATIO],
        &["eval", "aw", "-n", "1", "--params", "1,2", "--q", "1/3", "--x", "0"],
        &["suite", "--only", "15"],
    ] {
        let (code, _, err) = taukit(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn pole_reported_with_point() {
    let pole = r#"{"num":[],"den":[{"lin":{"shift":"-1"}}]}"#;
    let (code, _, err) = taukit(&["expand", "--rspec", pole, "-d", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("pole of r at integer point 1"), "{err}");
}

#[test]
fn suite_subset_and_seed() {
    let out = Command::new(env!("CARGO_BIN_EXE_taukit"))
        .args(["suite", "--only", "6,8"])
        .env("TAUKIT_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], "5");
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    let bad =
        Command::new(env!("CARGO_BIN_EXE_taukit")).args(["suite", "--only", "6"]).env("TAUKIT_SEED", "x").output();
    assert_eq!(bad.unwrap().status.code(), Some(2));
}
