use std::process::{Command, Output};

use serde_json::Value;

fn gforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gforge")).args(args).env_remove("GFORGE_SEED").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bb_construct_then_verify_in_fresh_process() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = gforge(&["bb-construct", "--stem", "Y^2 - 2", "--n", "2", "--out", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = gforge(&["verify", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["ok"], Value::Bool(true));

    // a bare certificate document is accepted too
    let artifact: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, artifact["result"].to_string()).unwrap();
    assert_eq!(gforge(&["verify", "--cert", bare.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    gforge(&["bb-construct", "--stem", "Y^3 - 2", "--n", "3", "--out", cert.to_str().unwrap()]);
    let mut artifact: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let r = artifact["result"]["R"].as_str().unwrap().to_string();
    artifact["result"]["R"] = Value::String(format!("{r} + 1"));
    std::fs::write(&cert, artifact.to_string()).unwrap();
    let out = gforge(&["verify", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let reasons = json(&out)["result"]["reasons"].to_string();
    assert!(reasons.contains("node mismatch at T=0"), "{reasons}");
}

#[test]
fn specialize_reports_one_quadratic_fiber() {
    let out = gforge(&["specialize", "--poly", "Y^2 - T", "--field", "GF(5)", "--at", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let fibers = v["result"]["fibers"].as_array().unwrap();
    assert_eq!(fibers.len(), 1);
    assert_eq!(fibers[0]["degree"], 2);
    assert_eq!(v["result"]["unramified"], true);
}

#[test]
fn reducible_input_is_inconclusive() {
    let out = gforge(&["certify-sn", "--poly", "(Y-1)*(Y-2)", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["result"]["group"], "inconclusive");
}

#[test]
fn certify_sn_on_quintic() {
    let out = gforge(&["certify-sn", "--poly", "Y^5 - Y - 1", "--budget", "200"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["group"], "S5");
}

#[test]
fn polynomial_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    std::fs::write(&f, "Y^3 + Y^2 - 2*Y - 1\n").unwrap();
    let out = gforge(&["cubic-group", "--poly", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["group"], "C3");
}

#[test]
fn parse_error_reports_position() {
    let out = gforge(&["certify-sn", "--poly", "Y^2 +\n  )"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 3"), "{err}");
}

#[test]
fn artifacts_are_byte_identical() {
    let args = ["trinomial", "split"];
    assert_eq!(gforge(&args).stdout, gforge(&args).stdout);
    let args = ["specialize", "--poly", "Y^3 + T*Y + 1", "--field", "GF(9)", "--at", "g"];
    assert_eq!(gforge(&args).stdout, gforge(&args).stdout);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gforge"))
        .args(["trinomial", "split"])
        .env("GFORGE_SEED", "0x10")
        .output()
        .unwrap();
    assert_eq!(json(&out)["config"]["seed"], 16);
    assert_eq!(json(&gforge(&["trinomial", "split"]))["config"]["seed"], 0x5EED);
}

#[test]
fn trinomials() {
    let v = json(&gforge(&["trinomial", "split"]));
    assert_eq!(v["result"]["a"], "-343/36");
    assert_eq!(v["result"]["alpha"], "2");
    let v = json(&gforge(&["trinomial", "lp", "--x", "0"]));
    assert_eq!(v["result"]["discriminant"], "-4*T^3 - 27*T^2");
    assert_eq!(gforge(&["trinomial", "split", "--field", "GF(9)"]).status.code(), Some(1));
}

#[test]
fn skew_commands() {
    let v = json(&gforge(&["skew", "mul", "--ring", "GF(4);frob", "--lhs", "T", "--rhs", "g"]));
    assert_eq!(v["result"]["product"], "(g + 1)*T");
    let v = json(&gforge(&["skew", "div", "--ring", "GF(4);frob", "--lhs", "T^2 + g", "--rhs", "T + 1"]));
    assert_eq!(v["result"]["convention"], "lhs = quotient*rhs + remainder");
    let out = gforge(&["skew", "ore", "--ring", "H;conj(i)", "--lhs", "T + j", "--rhs", "k*T"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&gforge(&["skew", "center", "--ring", "GF(9);frob", "--lhs", "T^2 + 1"]));
    assert_eq!(v["result"]["central"], true);
    let v = json(&gforge(&["skew", "center", "--ring", "GF(4);frob", "--lhs", "g*T^2"]));
    assert_eq!(v["result"]["central"], false);
    assert_eq!(gforge(&["skew", "mul", "--ring", "GF(4);frob", "--lhs", "T"]).status.code(), Some(1));
    assert_eq!(gforge(&["skew", "mul", "--ring", "Q;frob", "--lhs", "T", "--rhs", "T"]).status.code(), Some(1));
}

#[test]
fn normalizer_quotient_matches_stem_field() {
    let v = json(&gforge(&["normquot", "--degree", "3", "--sub", "(1 2)", "--stem", "Y^3 - 2"]));
    assert_eq!(v["result"]["quotient_order"], 1);
    assert_eq!(v["result"]["matches_stem"], true);
    let v = json(&gforge(&["normquot", "--degree", "3", "--group", "(1 2 3)", "--stem", "Y^3 + Y^2 - 2*Y - 1"]));
    assert_eq!(v["result"]["quotient_order"], 3);
    assert_eq!(v["result"]["normal"], true);
    assert_eq!(v["result"]["matches_stem"], true);
}
