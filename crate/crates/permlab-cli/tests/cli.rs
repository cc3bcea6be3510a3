//! End-to-end runs of the compiled binary.

use std::process::{Command, Output};

fn permlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn stat_counts_the_worked_example() {
    let out = permlab(&[
        "stat", "--stat", "ldes", "--order", "color-major",
        "--word", "2,4,1,5,6,3", "--colors", "0,1,3,3,0,2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = permlab(&[
        "stat", "--stat", "lexc", "--order", "color-major",
        "--word", "2,4,1,5,6,3", "--colors", "0,1,3,3,0,2", "--verbose",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "4");
    assert!(text.contains("indices: [1, 2, 5, 6]"));
}

#[test]
fn stat_understands_signed_words_and_defaults() {
    // colors omitted with --signed: all +1; des_b of the identity is 0
    let out = permlab(&["stat", "--stat", "des_b", "--word", "1,2", "--signed"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    // negative colors imply the signed scheme
    let out = permlab(&["stat", "--stat", "des_b", "--word", "1,2", "--colors", "-1,-1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn custom_order_lists_work() {
    let out = permlab(&[
        "stat", "--stat", "ldes",
        "--order", "list:2.0,1.0,1.1,2.1",
        "--word", "1,2", "--colors", "0,0", "--d", "2",
    ]);
    assert!(out.status.success());
    // under this order 1_0 > 2_0, so the identity word has one descent
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn bijection_round_trips_through_the_cli() {
    let out = permlab(&[
        "bijection", "--map", "phi", "--order", "color-major",
        "--word", "2,4,1,5,6,3", "--colors", "0,1,3,3,0,2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("output: 5_3 4_1 2_0 1_3 3_2 6_0"));
    assert!(text.contains("lexc(preimage) = 4"));
    assert!(text.contains("ldes(image)    = 4"));

    let out = permlab(&[
        "bijection", "--map", "phi", "--order", "color-major", "--inverse",
        "--word", "5,4,2,1,3,6", "--colors", "3,1,0,3,2,0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("output: 2_0 4_1 1_3 5_3 6_0 3_2"));
}

#[test]
fn poly_emits_json_with_optional_certificates() {
    let out = permlab(&["poly", "--family", "B", "--n", "2", "--k=-1", "--sturm"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"coeffs\":[\"0\",\"1\",\"1\"]"));
    assert!(text.contains("\"real_rooted\":true"));

    let out = permlab(&["poly", "--family", "A", "--n", "6", "--k", "3", "--format", "tsv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "A\t6\t3\t0,8,60,48,4");

    // gamma of a palindromic family member
    let out = permlab(&["poly", "--family", "A", "--n", "5", "--k", "1", "--gamma", "--format", "tsv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "A\t5\t1\t1,11,11,1\t1,8");
}

#[test]
fn series_prints_both_sides() {
    let out = permlab(&["series", "--identity", "carlitz", "--n", "2", "--i=-1", "--terms", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lhs\t0,1,3,5"));
    assert!(text.contains("rhs\t0,1,3,5"));
    assert!(text.contains("equal\ttrue"));

    let out = permlab(&["series", "--identity", "brenti", "--n", "2", "--terms", "2", "--format", "json"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"equal\":true"));
}

#[test]
fn table_matches_the_frozen_b2_rows() {
    let out = permlab(&["table", "--family", "B", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1\t1,1\n-1\t0,1,1\n2\t0,2\n-2\t0,2");

    let out = permlab(&["table", "--family", "A", "--n", "6", "--format", "json"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"family\":\"A\""));
}

#[test]
fn verify_exit_codes_follow_outcomes() {
    let out = permlab(&["verify", "--check", "table-n6"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("table-n6\tpass"));

    // the strict mode demonstrates the printed-bound failure: exit 1
    let out = permlab(&["verify", "--check", "thm1.10-carlitz", "--n", "3", "--strict-paper"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fail"));

    let out = permlab(&["verify", "--check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));

    let out = permlab(&["verify", "--list"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().count() >= 14);
}

#[test]
fn verify_accepts_parameter_overrides_and_json() {
    let out = permlab(&[
        "verify", "--check", "thm1.3-equidistribution",
        "--n", "3", "--d", "2", "--trials", "5", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"check\":\"thm1.3-equidistribution\""));
    assert!(text.contains("\"status\":\"pass\""));
    assert!(text.contains("\"trials\":5"));
}

#[test]
fn enumeration_cap_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(["table", "--family", "A", "--n", "6"])
        .env("PERMLAB_MAX_ELEMENTS", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds the enumeration cap"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = permlab(&["stat", "--stat", "nope", "--word", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = permlab(&["stat", "--stat", "ldes", "--word", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}
