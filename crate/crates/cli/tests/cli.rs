use std::process::{Command, Output};

use serde_json::Value;

fn qshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle"))
        .args(args)
        .env_remove("QSHUFFLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qshuffle(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn dn_golden() {
    assert_eq!(stdout(&["dn", "2", "--mode", "recursive"]), "xyxy + (q^2 + 2 + q^-2)*xxyy\n");
    assert_eq!(stdout(&["dn", "2"]), "xyxy + (q^2 + 2 + q^-2)*xxyy\n");
    assert_eq!(stdout(&["dn", "0"]), "1\n");
    assert_eq!(stdout(&["dn", "1", "--mode", "closed"]), "-xy\n");
}

#[test]
fn modes_print_identically() {
    let rec = stdout(&["dn", "5", "--mode", "recursive"]);
    assert_eq!(rec, stdout(&["dn", "5", "--mode", "closed"]));
    assert_eq!(rec, stdout(&["dn", "5", "--mode", "one-step"]));
}

#[test]
fn output_does_not_depend_on_threads() {
    let one = stdout(&["--parallelism", "1", "dn", "6", "--format", "json"]);
    assert_eq!(one, stdout(&["--parallelism", "3", "dn", "6", "--format", "json"]));
    assert_eq!(one, stdout(&["dn", "6", "--format", "json"]));
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "--order", "8"]);
    assert!(!out.contains("FAIL"));
    assert!(out.trim_end().ends_with("order 8)"), "{out}");
    let doc = json(&["verify", "--order", "4"]);
    assert_eq!(doc["result"]["all_passed"], Value::Bool(true));
}

#[test]
fn json_envelope() {
    let doc = json(&["dn", "2"]);
    assert_eq!(doc["command"], "dn");
    assert_eq!(doc["args"]["n"], 2);
    assert_eq!(doc["args"]["mode"], "one-step");
    let terms = doc["result"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["word"], "xyxy");
    assert_eq!(terms[1]["coeff"]["-2"], "1");
    assert_eq!(terms[1]["coeff"]["0"], "2");

    let doc = json(&["catalan", "3"]);
    assert_eq!(doc["result"]["count"], "5");
    assert_eq!(doc["result"]["words"].as_array().unwrap().len(), 5);

    let doc = json(&["bench", "--order", "3"]);
    assert_eq!(doc["result"].as_array().unwrap().len(), 4);
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&["shuffle", "x", "y"]), "q^-2*yx + xy\n");
    assert_eq!(stdout(&["shuffle", "1", "xy"]), "xy\n");
    assert_eq!(
        stdout(&["catalan", "3"]),
        "xyxyxy\nxxyyxy\nxyxxyy\nxxyxyy\nxxxyyy\n"
    );
    assert_eq!(
        stdout(&["profile", "xxyxyy"]),
        "elevation (0,1,2,1,2,1,0)\nprofile (0,2,1,2,0)\ncatalan true\n"
    );
    assert!(stdout(&["profile", "yx"]).ends_with("catalan false\n"));
    assert_eq!(stdout(&["coeff", "xxyy", "2"]), "q^2 + 2 + q^-2\n");
    assert_eq!(stdout(&["coeff", "xxyy", "2", "--mode", "closed"]), "q^2 + 2 + q^-2\n");
    assert_eq!(stdout(&["coeff", "xy", "1", "--mode", "closed"]), "-1\n");
    assert_eq!(stdout(&["coeff", "yxxy", "2"]), "0\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["dn", "-1"][..],
        &["dn", "13"],
        &["--max-n", "4", "catalan", "5"],
        &["shuffle", "xz", "y"],
        &["profile", ""],
        &["frobnicate"],
    ] {
        assert_eq!(qshuffle(args).status.code(), Some(2), "{args:?}");
    }
    let with_cap = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_qshuffle"))
            .args(["dn", "3"])
            .env("QSHUFFLE_MAX_N", cap)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(with_cap("2"), Some(2));
    assert_eq!(with_cap("3"), Some(0));
}
