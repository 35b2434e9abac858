//! End-to-end checks of the `jt` binary: exit codes, report determinism, and
//! the documented subcommand behaviors.

use std::process::Command;

fn jt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jt"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = jt().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn classify_diagonal_example() {
    let (code, stdout, _) = run(&["classify", "--algebra", "sym:3", "--element", "diag:2,-1,0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["classification"]["rank"], 2);
    assert_eq!(v["classification"]["index"], 0);
    assert_eq!(v["classification"]["invertible"], false);
}

#[test]
fn classify_minkowski_spectrum() {
    let (code, stdout, _) = run(&["classify", "--algebra", "mink:4", "--element", "3,1,0,0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let vals = v["spectral_values"].as_array().unwrap();
    assert!((vals[0].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert!((vals[1].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn malformed_element_exits_2() {
    let (code, _, stderr) = run(&["classify", "--algebra", "sym:3", "--element", "1,2,zebra"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
    let (code, _, _) = run(&["classify", "--algebra", "sym:3", "--element", "1,2"]);
    assert_eq!(code, 2);
}

#[test]
fn octonion_is_formula_only() {
    // element arithmetic is rejected with the dedicated message
    let (code, _, stderr) = run(&["classify", "--algebra", "octonion:3", "--element", "1,2,3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("exceptional algebra unsupported"));
    // the parity interface accepts it
    let (code, stdout, _) = run(&["support-report", "--algebra", "octonion:3", "--s", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["formula_only"], true);
    assert_eq!(v["pierce_dim"], 8);
    assert_eq!(v["wallach_admissible"], true);
}

#[test]
fn support_report_examples() {
    let (code, stdout, _) = run(&["support-report", "--algebra", "mink:4", "--s", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["components"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["vanishes"] == true));
    assert!(v["detail"].as_str().unwrap().contains("boundary"));

    let (code, stdout, _) = run(&["support-report", "--algebra", "sym:3", "--s", "2/3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for c in v["components"].as_array().unwrap() {
        let j = c["index"].as_i64().unwrap();
        assert_eq!(c["vanishes"] == true, j.abs() == 3, "j = {j}");
    }
}

#[test]
fn support_report_scan_and_csv() {
    let (code, stdout, _) = run(&[
        "support-report",
        "--algebra",
        "sym:2",
        "--scan",
        "1..3:1",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    // one header plus (3 components + 3 duality rows) per s value
    let lines = stdout.trim().lines().count();
    assert_eq!(lines, 3 * (1 + 3 + 3));
}

#[test]
fn wedge_duality_one_dimensional() {
    let (code, stdout, _) = run(&["wedge-duality", "--algebra", "sym:1", "--s", "2", "--k", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["nu"], "1");
    assert_eq!(row["nu_integral"], true);
    let (_, stdout, _) = run(&["wedge-duality", "--algebra", "sym:1", "--s", "1", "--k", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["rows"][0]["nu"], "1/2");
    assert_eq!(v["rows"][0]["nu_integral"], false);
}

#[test]
fn riesz_eval_boundary_and_wallach_rejection() {
    let (code, stdout, _) = run(&[
        "riesz-eval",
        "--algebra",
        "mink:4",
        "--s",
        "1",
        "--element",
        "0,2,0,0",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((v["value"]["re"].as_f64().unwrap() - 0.25).abs() < 1e-10);
    assert!(v["value"]["im"].as_f64().unwrap().abs() < 1e-10);
    // s = 1/2 is below the Wallach edge for mink:4 (d/2 = 1)
    let (code, _, stderr) = run(&[
        "riesz-eval",
        "--algebra",
        "mink:4",
        "--s",
        "1/2",
        "--element",
        "0,2,0,0",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("Wallach"));
}

#[test]
fn wedge_membership_and_audit() {
    let (code, stdout, _) = run(&[
        "wedge",
        "--algebra",
        "mink:4",
        "--k",
        "1",
        "--element",
        "0,1,0,0",
        "--samples",
        "50",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["membership"]["in_wedge"], true);
    assert_eq!(v["boost"]["dim_plus"], 1);
    assert_eq!(v["boost"]["dim_zero"], 2);
}

#[test]
fn modular_verify_passes_and_is_deterministic() {
    let args = ["modular-verify", "--dim", "5", "--trials", "40", "--seed", "7"];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (code, second, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(first, second, "identical config + seed must be byte-identical");
    let (_, other_seed, _) = run(&[
        "modular-verify",
        "--dim",
        "5",
        "--trials",
        "40",
        "--seed",
        "8",
    ]);
    assert_ne!(first, other_seed);
}

#[test]
fn rep1d_coarse_grid_fails_with_trend() {
    let (code, stdout, _) = run(&[
        "modular-verify",
        "--rep1d",
        "s=1",
        "--grid",
        "64",
        "--bumps",
        "4",
    ]);
    assert_eq!(code, 1, "coarse grid must fail the thresholds");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let sym = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "symplectic-orthogonality")
        .unwrap();
    assert_eq!(sym["pass"], false);
    assert!(sym["parameters"].as_str().unwrap().contains("trend"));
}

#[test]
fn rep1d_fine_grid_passes() {
    let (code, stdout, _) = run(&[
        "modular-verify",
        "--rep1d",
        "s=1",
        "--grid",
        "1024",
        "--bumps",
        "4",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, _, _) = run(&[
        "support-report",
        "--algebra",
        "mink:4",
        "--s",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["algebra"], "mink:4");
}

#[test]
fn jt_threads_env_is_honored() {
    let out = jt()
        .env("JT_THREADS", "1")
        .args(["modular-verify", "--dim", "4", "--trials", "10", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
