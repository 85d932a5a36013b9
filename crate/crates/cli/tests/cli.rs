//! End-to-end checks of the command-line interface: the documented
//! output strings, exit codes, determinism, and the JSON schemas.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfseries"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn digits_cahen_matches_the_published_prefix() {
    assert_eq!(stdout(&["digits", "cahen(1,1)", "--digits", "15"]), "0.643410546288338\n");
}

#[test]
fn cf_davison_shallit_prefix() {
    assert_eq!(
        stdout(&["cf", "davison_shallit", "--terms", "11"]),
        "[0,1,1,1,2,3,8,27,224,6075,1361024]\n"
    );
}

#[test]
fn pierce_of_seven_tenths_terminates() {
    assert_eq!(stdout(&["pierce", "7/10"]), "[1,3,10] terminating\n");
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let out = run(&["verify", "all", "--depth", "8"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["digits", "no_such_constant"][..],
        &["series", "typeI:B=3,2"][..],
        &["cf", "sylvester(1,1)"][..],
        &["verify", "no_such_suite"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    // clap-level usage errors also exit 2
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["digits", "kellogg_curtiss(1,1)", "--digits", "10"]);
    let b = stdout(&["digits", "kellogg_curtiss(1,1)", "--digits", "10"]);
    assert_eq!(a, b);
    assert_eq!(a, "1.6910302067\n");

    let a = run(&["verify", "all", "--depth", "6", "--format", "json"]);
    let b = run(&["verify", "all", "--depth", "6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_round_trips_through_the_schema() {
    let out = stdout(&["verify", "identities", "--depth", "6", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    let arr = parsed.as_array().expect("array of reports");
    assert!(!arr.is_empty());
    for r in arr {
        for key in ["check", "params", "depth", "pass", "first_failure", "witnesses"] {
            assert!(r.get(key).is_some(), "missing {key}: {r}");
        }
        assert_eq!(r["pass"], serde_json::Value::Bool(true));
    }
    // and the reproduction: serialize back and re-parse identically
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
}

#[test]
fn scf_json_prefix_parses_as_integers() {
    let out = stdout(&["cf", "cahen(2,1)", "--terms", "6"]);
    let parsed: Vec<i64> = serde_json::from_str(out.trim()).expect("integer array");
    assert_eq!(parsed, vec![0, 2, 1, 4, 9, 196]);
}

#[test]
fn general_cf_prefix_uses_pairs() {
    let out = stdout(&["cf", "typeI:B=1,3,15,255", "--terms", "4"]);
    assert_eq!(out, "[[1,1],[1,2],[9,12],[225,240]]\n");
}

#[test]
fn series_sums_schema() {
    let out = stdout(&["series", "typeII:A=2,3,4,5", "--terms", "4", "--sums"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "[2,3,4,5]");
    let first: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(first["n"], 0);
    assert_eq!(first["num"], "1");
    assert_eq!(first["den"], "2");
    assert_eq!(first["tail_num"], "1");
    assert_eq!(first["tail_den"], "6");
}

#[test]
fn bfile_is_zero_indexed() {
    let out = stdout(&["bfile", "sylvester(1,1)", "--terms", "4"]);
    assert_eq!(out, "0 1\n1 2\n2 3\n3 7\n");
}

#[test]
fn construct_and_decompose_round_trip_in_text() {
    let out = stdout(&["construct", "M=1...", "--depth", "9"]);
    assert!(out.contains("A: [1,2,3,4,9,28,225,6076,1361025]"), "{out}");
    assert!(out.contains("scf: [0,1,1,1,2,3,8,27,224,6075]"), "{out}");

    let out = stdout(&["decompose", "davison_shallit", "--depth", "8"]);
    assert_eq!(out, "M: [1,1,1,1,1,1,1,1,1]\n");

    let out = stdout(&["decompose", "liouville_alt", "--depth", "4"]);
    assert!(out.starts_with("failure at index 1"), "{out}");
}

#[test]
fn certified_digits_never_overclaim() {
    // at depth 12 the e−1 fraction certifies fewer than 12 digits; the
    // certified output must be a prefix of the true expansion
    let out = stdout(&["digits", "e_minus_1_scf", "--digits", "12", "--certified"]);
    let digits = out.trim();
    assert!("1.718281828459045235".starts_with(digits), "{digits}");
    assert!(digits.len() >= 6);
}

#[test]
fn digit_cap_override_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_cfseries"))
        .args(["series", "liouville_alt", "--terms", "12"])
        .env("CFSERIES_DIGIT_CAP", "10000")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("over the cap of 10000"), "{err}");
}

#[test]
fn measure_certifies_the_liouville_schedule() {
    let out = stdout(&["measure", "liouville_alt", "--depth", "4", "--mu", "3", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    for r in parsed["records"].as_array().unwrap() {
        assert_eq!(r["certs"][0]["certified"], serde_json::Value::Bool(true));
    }
}
