//! CLI contract details beyond the acceptance examples.

use std::process::Command;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    run_cli_with_env(args, &[])
}

fn run_cli_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut command = Command::new(env!("CARGO_BIN_EXE_starlike-radii"));
    command.args(args);
    for (key, value) in env {
        command.env(key, value);
    }
    let output = command.output().expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn unknown_region_is_rejected() {
    let (code, stdout, stderr) = run_cli(&["radius", "--family", "t1", "--target", "lemniscate"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("unknown region name"), "stderr: {stderr}");
}

#[test]
fn unknown_family_is_rejected() {
    let (code, _, stderr) = run_cli(&["radius", "--family", "t3", "--target", "cardioid"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown family name"), "stderr: {stderr}");
}

#[test]
fn malformed_flags_exit_2_with_one_line_reason() {
    let (code, _, stderr) = run_cli(&["radius", "--family", "t1", "--bogus"]);
    assert_eq!(code, 2);
    assert_eq!(stderr.trim_end().lines().count(), 1, "stderr: {stderr}");

    let (code, _, _) = run_cli(&["nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn parameters_are_scoped_to_their_targets() {
    let (code, _, stderr) = run_cli(&[
        "radius", "--family", "t1", "--target", "cardioid", "--alpha", "0.5",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("takes no --alpha"), "stderr: {stderr}");

    let (code, _, stderr) = run_cli(&[
        "radius", "--family", "t1", "--target", "halfplane", "--B", "-0.5",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("janowski"), "stderr: {stderr}");
}

#[test]
fn janowski_radius_query() {
    let (code, stdout, _) = run_cli(&[
        "radius", "--family", "t1", "--target", "janowski", "--A", "0.5", "--B", "-0.5",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((report["closed_form"].as_f64().unwrap() - 4.0 / 13.0).abs() < 1e-12);
    assert_eq!(report["exactness"], "exact");

    let (code, stdout, _) = run_cli(&[
        "radius", "--family", "t2", "--target", "janowski", "--A", "1", "--B", "0",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((report["closed_form"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-12);
    assert_eq!(report["exactness"], "lower_bound_only");

    let (code, _, stderr) = run_cli(&[
        "radius", "--family", "t1", "--target", "janowski", "--A", "0.5", "--B", "0.5",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("-1 <= B < A <= 1"), "stderr: {stderr}");
}

#[test]
fn parameterized_halfplane_query() {
    let (code, stdout, _) = run_cli(&[
        "radius", "--family", "t1", "--target", "halfplane", "--alpha", "0.5",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((report["closed_form"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    assert!((report["witness_value"]["re"].as_f64().unwrap() - 0.5).abs() < 1e-10);
}

#[test]
fn bounds_command_reports_member_bound_and_growth() {
    let (code, stdout, _) = run_cli(&["bounds", "--family", "t2", "--r", "0.3"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((report["member_bound"].as_f64().unwrap() - 0.9).abs() < 1e-14);
    assert!((report["factor_bound"].as_f64().unwrap() - 0.3).abs() < 1e-14);
    let lo = report["growth"]["lo"].as_f64().unwrap();
    let hi = report["growth"]["hi"].as_f64().unwrap();
    assert!((lo - 0.3 * (-0.9f64).exp()).abs() < 1e-14);
    assert!((hi - 0.3 * 0.9f64.exp()).abs() < 1e-14);

    let (code, _, stderr) = run_cli(&["bounds", "--family", "t2", "--r", "1.0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("[0,1)"), "stderr: {stderr}");
}

#[test]
fn verify_radii_suite_fails_at_unreachable_tolerance() {
    let (code, stdout, _) = run_cli(&[
        "verify", "--suite", "radii", "--radius-tol", "1e-15",
    ]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["overall"], serde_json::Value::Bool(false));
    let failing: Vec<&str> = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["pass"] == serde_json::Value::Bool(false))
        .map(|s| s["witness"].as_str().unwrap())
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|w| w.contains("region=")));
}

#[test]
fn table_formats_are_consistent() {
    let (code, csv, _) = run_cli(&["table", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.trim_end().lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "family,region,params,closed_form_expr,closed_form_value,numeric_value,\
         radius_residual,sharpness_residual,exactness"
    );
    assert_eq!(lines.count(), 20);

    let (code, text, _) = run_cli(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim_end().lines().count(), 21);

    let (code, _, stderr) = run_cli(&["table", "--format", "yaml"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown format"), "stderr: {stderr}");
}

#[test]
fn thread_cap_env_is_validated() {
    let (code, stdout, _) = run_cli_with_env(
        &["radius", "--family", "t2", "--target", "nephroid"],
        &[("STARLIKE_RADIUS_THREADS", "2")],
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((report["closed_form"].as_f64().unwrap() - 2.0 / 9.0).abs() < 1e-12);

    let (code, _, stderr) = run_cli_with_env(
        &["table", "--format", "json"],
        &[("STARLIKE_RADIUS_THREADS", "zero")],
    );
    assert_eq!(code, 2);
    assert!(
        stderr.contains("STARLIKE_RADIUS_THREADS must be a positive integer"),
        "stderr: {stderr}"
    );
}

#[test]
fn verify_rejects_bad_counts() {
    let (code, _, stderr) = run_cli(&["verify", "--suite", "lemmas", "--samples", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("at least 1"), "stderr: {stderr}");

    let (code, _, stderr) = run_cli(&["verify", "--suite", "everything"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown suite"), "stderr: {stderr}");
}
