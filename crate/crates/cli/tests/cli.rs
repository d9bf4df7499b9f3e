//! End-to-end tests against the compiled binary: output shapes, exit codes,
//! and a handful of frozen values double-checking the library through the
//! front door.

use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_genus-gaps"));
    c.env_remove("GENUS_GAPS_FORMAT");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn surface_table_reports_the_threshold_genus() {
    let (code, out, _) = run(&[
        "surface", "--d", "5", "--e", "5", "--pg", "4", "--q", "0", "--n4", "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("phi = 331"));
    assert!(out.contains("n0* = 12"));
    assert!(out.contains("every genus g >= 331"));
}

#[test]
fn surface_rejects_parity_violations() {
    let (code, _, err) = run(&[
        "surface", "--d", "5", "--e", "4", "--pg", "4", "--q", "0", "--n4", "2",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("parity"), "stderr was: {err}");
}

#[test]
fn surface_json_round_trips_byte_identically() {
    let (code, out, _) = run(&[
        "surface", "--d", "5", "--e", "5", "--pg", "4", "--q", "0", "--n4", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let value: Value = serde_json::from_str(&out).expect("valid json");
    let keys: Vec<&str> = value
        .as_object()
        .expect("json object")
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        [
            "delta0",
            "delta1",
            "n1",
            "n2",
            "n3",
            "n0",
            "phi",
            "intervals"
        ]
    );
    let reprinted = serde_json::to_string_pretty(&value).expect("reprint");
    assert_eq!(out.trim_end_matches('\n'), reprinted);
    assert_eq!(value["phi"], "331");
    assert_eq!(value["intervals"][0]["lo"], "331");
}

#[test]
fn witness_for_genus_zero_on_the_septic() {
    let (code, out, _) = run(&["abs-gaps", "--d", "7", "--g", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["mode"], "severi");
    assert_eq!(v["n"], "4");
    assert_eq!(v["delta"], "99");
    assert_eq!(v["interval"]["lo"], "0");
    assert_eq!(v["interval"]["hi"], "99");
    assert_eq!(v["standard_range"], Value::Bool(true));
}

#[test]
fn small_degrees_need_no_witness() {
    let (code, out, _) = run(&["abs-gaps", "--d", "3", "--g", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("classical"));
}

#[test]
fn high_range_witness_flags_the_side_condition() {
    let (code, out, _) = run(&["abs-gaps", "--d", "7", "--g", "142", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["mode"], "high-range");
    assert_eq!(v["threshold"], "86");
    assert_eq!(v["side_condition_ok"], Value::Bool(false));
}

#[test]
fn range_audit_passes_on_the_quintic() {
    let (code, out, _) = run(&["abs-gaps", "--d", "5", "--g-range", "0..1000", "--audit"]);
    assert_eq!(code, 0);
    assert!(out.contains("pass"), "stdout was: {out}");
}

#[test]
fn audit_command_covers_a_degree_range() {
    let (code, out, _) = run(&["audit", "--d-range", "5..8"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.contains("verified")));
}

#[test]
fn p3_range_csv_shows_the_discriminant_sign_change() {
    let (code, out, _) = run(&["p3", "--d-range", "4..40", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 37);
    assert!(lines[0].starts_with("d,e,p,q,n4,delta0,"));
    let delta0_at = |d: &str| -> i64 {
        let row = lines[1..]
            .iter()
            .find(|l| l.split(',').next() == Some(d))
            .expect("degree present");
        row.split(',')
            .nth(5)
            .expect("delta0 column")
            .parse()
            .expect("integer")
    };
    assert!(delta0_at("32") >= 0);
    assert!(delta0_at("33") < 0);
}

#[test]
fn p3_json_reports_the_genus_bound_exactly() {
    let (code, out, _) = run(&["p3", "--d", "100", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["cd_bound"], "921601");
    assert_eq!(v["cd_bound_at_dm4"], "907251");
    assert_eq!(v["cd_over_d3"]["exact"], "921601/1000000");
    assert_eq!(v["cd_over_d3"]["decimal"], "0.9216");
    assert_eq!(v["closed_forms"]["n3_1"], "18");
    assert_eq!(v["n3"], "16");
    assert_eq!(v["warnings"][0]["kind"], "n3");
}

#[test]
fn nfold_computes_the_quintic_bound() {
    let (code, out, _) = run(&["nfold", &fixture("quintic.hilb"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).expect("valid json");
    let keys: Vec<&str> = v
        .as_object()
        .expect("json object")
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["m_XL", "p_XL", "tail_from"]);
    assert_eq!(v["m_XL"], "12");
    assert_eq!(v["p_XL"], "331");
    assert_eq!(v["tail_from"], "14");
}

#[test]
fn nfold_mismatched_leading_coefficients_fail_certification() {
    let (code, _, err) = run(&["nfold", &fixture("mismatch.hilb")]);
    assert_eq!(code, 3);
    assert!(err.contains("leading coefficients"), "stderr was: {err}");
}

#[test]
fn nfold_malformed_file_points_at_the_line() {
    let (code, _, err) = run(&["nfold", &fixture("malformed.hilb")]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "stderr was: {err}");
}

#[test]
fn nfold_missing_file_is_an_input_error() {
    let (code, _, err) = run(&["nfold", "/no/such/file.hilb"]);
    assert_eq!(code, 2);
    assert!(err.contains("file.hilb"), "stderr was: {err}");
}

#[test]
fn env_var_sets_the_default_format_and_the_flag_wins() {
    let out = bin()
        .env("GENUS_GAPS_FORMAT", "json")
        .args(["p3", "--d", "7"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).expect("utf8");
    assert!(stdout.trim_start().starts_with('{'), "stdout was: {stdout}");

    let out = bin()
        .env("GENUS_GAPS_FORMAT", "csv")
        .args(["p3", "--d", "7", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).expect("utf8");
    assert!(stdout.trim_start().starts_with('{'), "stdout was: {stdout}");

    let out = bin()
        .env("GENUS_GAPS_FORMAT", "sideways")
        .args(["p3", "--d", "7"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conflicting_selectors_are_usage_errors() {
    let (code, _, err) = run(&["p3", "--d", "7", "--d-range", "4..9"]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly one"));

    let (code, _, _) = run(&["abs-gaps", "--d", "7"]);
    assert_eq!(code, 2);

    let (code, _, err) = run(&["abs-gaps", "--d", "7", "--g", "3", "--audit"]);
    assert_eq!(code, 2);
    assert!(err.contains("--g-range"));

    let (code, _, err) = run(&["p3", "--d-range", "9..4"]);
    assert_eq!(code, 2);
    assert!(err.contains("backwards"));
}
