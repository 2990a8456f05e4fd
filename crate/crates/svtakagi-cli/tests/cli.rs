//! End-to-end command tests: exit codes, CSV values, report plumbing, and
//! determinism of repeated runs.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn svtakagi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svtakagi"))
        .args(args)
        .env("SVTAKAGI_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn write_scenario(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

/// `F(x) = {-x^2}` checked as convex with zero errors: a guaranteed failure.
fn failing_scenario() -> String {
    serde_json::json!({
        "id": "negative-quadratic",
        "domain_dim": 1,
        "value_dim": 1,
        "grid": {"kind": "box", "lo": ["-1"], "hi": ["1"], "step": "1/2"},
        "map": {"kind": "singleton", "components": [[{"coef": "-1", "powers": [2]}]]},
        "a": {"kind": "singleton", "components": [[]]},
        "b": {"kind": "singleton", "components": [[]]},
        "pairs": [{"x": ["1"], "y": ["-1"]}],
        "depth": 2,
        "slack": "0",
        "mode": "convex",
        "probe_weakened": false
    })
    .to_string()
}

#[test]
fn verify_passing_scenario_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = serde_json::to_string(
        &svtakagi_core::builtin_scenarios()
            .into_iter()
            .find(|s| s.id == "bernstein-doetsch")
            .unwrap(),
    )
    .unwrap();
    let path = write_scenario(dir.path(), "bd.json", &scenario);
    let out = dir.path().join("report.json");
    let result = svtakagi(&["verify", "--scenario", &path, "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(0), "{result:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["scenario"], "bernstein-doetsch");
}

#[test]
fn verify_failing_scenario_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "neg.json", &failing_scenario());
    let out = dir.path().join("report.json");
    let result = svtakagi(&["verify", "--scenario", &path, "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1), "{result:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let witnessed = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["pass"] == false && c["witness"].is_array());
    assert!(witnessed, "{report}");
}

#[test]
fn verify_malformed_json_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "broken.json", "{\"id\": ");
    let out = dir.path().join("report.json");
    let result = svtakagi(&["verify", "--scenario", &path, "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn verify_unknown_field_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&failing_scenario()).unwrap();
    value["extra"] = serde_json::json!(true);
    let path = write_scenario(dir.path(), "extra.json", &value.to_string());
    let out = dir.path().join("report.json");
    let result = svtakagi(&["verify", "--scenario", &path, "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn verify_missing_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let result = svtakagi(&[
        "verify",
        "--scenario",
        dir.path().join("absent.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn verify_overrides_reach_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "neg.json", &failing_scenario());
    let out = dir.path().join("report.json");
    let result = svtakagi(&[
        "verify",
        "--scenario",
        &path,
        "--out",
        out.to_str().unwrap(),
        "--slack",
        "1/8",
        "--depth",
        "1",
    ]);
    assert!(matches!(result.status.code(), Some(0) | Some(1)), "{result:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["slack"] == "1/8"), "{report}");
    // depth 1 leaves only t in {0, 1/2, 1}
    for check in checks {
        if let Some(t) = check["t"].as_str() {
            assert!(["0", "1/2", "1"].contains(&t), "unexpected t {t}");
        }
    }
}

#[test]
fn takagi_closed_form_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t2.csv");
    let result = svtakagi(&[
        "takagi", "--alpha", "2", "--from", "0", "--to", "1", "--steps", "5", "--tail",
        "1/1024", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0), "{result:?}");
    let csv = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "t,value_lower,value_upper");
    assert_eq!(lines.len(), 6);
    // T_2 = 4t(1-t) exactly on the dyadic grid: 0, 3/4, 1, 3/4, 0
    let expected = ["0", "3/4", "1", "3/4", "0"];
    for (line, want) in lines[1..].iter().zip(expected) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 3);
        let value = cells[1].split('=').next().unwrap();
        assert_eq!(value, want, "line {line}");
        assert_eq!(cells[1], cells[2], "exact point must have zero width");
    }
}

#[test]
fn takagi_interval_mode_for_unsupported_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t3.csv");
    let result = svtakagi(&[
        "takagi", "--alpha", "3", "--from", "1/3", "--to", "2/3", "--steps", "3", "--tail",
        "1/256", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0), "{result:?}");
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("notice"), "{stderr}");
    let csv = fs::read_to_string(&out).unwrap();
    // non-dyadic points carry genuine enclosures; the dyadic midpoint is exact
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    let third = lines[1].split(',').collect::<Vec<_>>();
    assert_ne!(third[1], third[2]);
    let half = lines[2].split(',').collect::<Vec<_>>();
    assert_eq!(half[1], half[2]);
}

#[test]
fn takagi_rejects_bad_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bad.csv");
    let cases: [&[&str]; 3] = [
        &["takagi", "--alpha", "2", "--from", "1", "--to", "0", "--steps", "5", "--tail", "1/4"],
        &["takagi", "--alpha", "2", "--from", "0", "--to", "1", "--steps", "1", "--tail", "1/4"],
        &["takagi", "--alpha", "0", "--from", "0", "--to", "1", "--steps", "5", "--tail", "1/4"],
    ];
    for case in cases {
        let mut args = case.to_vec();
        let out_str = out.to_str().unwrap();
        args.extend_from_slice(&["--out", out_str]);
        let result = svtakagi(&args);
        assert_eq!(result.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn suite_writes_reports_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("suite-a");
    let out_b = dir.path().join("suite-b");
    for out in [&out_a, &out_b] {
        let result = svtakagi(&["suite", "--out", out.to_str().unwrap()]);
        assert_eq!(result.status.code(), Some(0), "{result:?}");
    }
    let mut names: Vec<String> = fs::read_dir(&out_a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "bernstein-doetsch.json",
            "cone-valued-2d.json",
            "hazy-pales.json",
            "index.json",
            "ng-nikodem.json",
            "strong-quadratic-concave.json",
            "strong-quadratic.json",
        ]
    );
    for name in &names {
        let a = fs::read(out_a.join(name)).unwrap();
        let b = fs::read(out_b.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}

#[test]
fn suite_missing_parent_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("absent").join("suite");
    let result = svtakagi(&["suite", "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(3));
}
