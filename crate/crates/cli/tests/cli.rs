//! End-to-end tests driving the `mckay` binary.

use std::process::Command;

fn mckay(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = mckay(args);
    assert!(
        out.status.success(),
        "command failed: {:?}\nstderr: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_symmetric_slope_one() {
    let doc = stdout_json(&["classify", "--N", "5", "--omega", "1,1,1,1", "--mu", "1"]);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 4);
    for (l, c) in classes.iter().enumerate() {
        assert_eq!(c["i"], l + 1);
        assert_eq!(c["j"], l + 1);
        assert_eq!(c["e"], serde_json::json!([0]));
        assert_eq!(c["chi"], 1);
    }
    assert_eq!(doc["chains"], serde_json::json!([[0, 1, 2, 3]]));
    assert_eq!(doc["lambda"], serde_json::json!([4]));
    assert_eq!(doc["yangian"], serde_json::json!(["Y+(sl(5))"]));
}

#[test]
fn translate_infinite_slope() {
    let doc = stdout_json(&["translate", "--N", "4", "--omega", "1,1,1", "--mu", "inf"]);
    assert_eq!(doc["zeta"], serde_json::json!(["1", "1", "1", "-3"]));
}

#[test]
fn fan_rays() {
    let doc = stdout_json(&["fan", "--N", "2"]);
    assert_eq!(doc["rays"], serde_json::json!([[0, 1], [1, 0], [2, -1]]));
}

#[test]
fn intersection_pairing() {
    let doc = stdout_json(&[
        "intersection", "--N", "5", "--a", "1,2", "--b", "3,4",
    ]);
    assert_eq!(doc["pairing"], 1);
}

#[test]
fn verify_rep_structure_sheaf() {
    let dir = std::env::temp_dir().join("mckay-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rep.json");
    std::fs::write(
        &path,
        r#"{"dims": [1, 0, 1, 1], "x": {"3": [[1]]}, "y": {"4": [[1]]}}"#,
    )
    .unwrap();
    let doc = stdout_json(&[
        "verify-rep",
        "--N",
        "4",
        "--file",
        path.to_str().unwrap(),
        "--zeta",
        "1,1,1,-2",
    ]);
    assert_eq!(doc["moment_map"], "zero");
    assert_eq!(doc["verdict"], "stable");
}

#[test]
fn determinism_identical_invocations() {
    let args = [
        "betti-series", "--N", "3", "--omega", "1,1", "--mu", "1",
        "--trunc-z", "2", "--trunc-q", "4",
    ];
    let a = mckay(&args);
    let b = mckay(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn domain_error_exits_one() {
    let out = mckay(&["classify", "--N", "5", "--omega", "1,1,1,1", "--mu", "inf"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_error_exits_two() {
    let out = mckay(&["classify", "--N", "5", "--omega", "1,1,1,1", "--mu", "1", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tsv_and_pretty_formats() {
    let tsv = mckay(&["yangian", "--N", "4", "--omega", "1,1,1", "--mu", "1", "--format", "tsv"]);
    let text = String::from_utf8(tsv.stdout).unwrap();
    assert!(text.lines().any(|l| l == "0\tY+(sl(4))"), "{text}");
    let pretty = mckay(&["fan", "--N", "3", "--format", "pretty"]);
    assert!(pretty.status.success());
    assert!(String::from_utf8_lossy(&pretty.stdout).contains("v_0"));
}

#[test]
fn kac_restricted_counts() {
    let doc = stdout_json(&["kac-restricted", "--N", "4", "--omega", "1,1,1", "--mu", "1"]);
    assert_eq!(doc["monomial_count"], 6);
    assert_eq!(doc["root_count"], 6);
}
