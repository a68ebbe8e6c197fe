use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn choreo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_choreo")).args(args).output().expect("spawn choreo")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn search(dir: &Path, group: &str, seed: &str) -> Output {
    choreo(&["search", "--group", group, "--R", "6", "--seed", seed, "--out", dir.to_str().unwrap()])
}

#[test]
fn search_then_analyze_reproduces_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = search(dir.path(), "C(3,1)", "42");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = stdout_json(&out);
    assert_eq!(summary["schema_version"], 1);
    assert_eq!(summary["status"], "converged");

    let result = read_json(&dir.path().join("result.json"));
    let saved = read_json(&dir.path().join("report.json"));
    let curve = dir.path().join("curve.json");
    std::fs::write(&curve, serde_json::to_string(&result["curve"]).unwrap()).unwrap();

    let traj = dir.path().join("trajectory.json");
    let analyzed = choreo(&["analyze", traj.to_str().unwrap(), "--loop", curve.to_str().unwrap()]);
    assert_eq!(analyzed.status.code(), Some(0));
    let fresh = stdout_json(&analyzed);
    for key in ["winding_profile", "winding_origin", "chi_full", "chi_generator", "perm_generator", "pair_winding_total", "adjacency"] {
        assert_eq!(fresh[key], saved[key], "{key}");
    }
    let rel = |key: &str| {
        let (a, b) = (fresh[key].as_f64().unwrap(), saved[key].as_f64().unwrap());
        (a - b).abs() / b.abs().max(1.0)
    };
    assert!(rel("action") < 1e-12);
    assert!(rel("min_distance") < 1e-12);
}

#[test]
fn search_is_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert_eq!(search(a.path(), "C'(5,2)", "5").status.code(), Some(0));
    assert_eq!(search(b.path(), "C'(5,2)", "5").status.code(), Some(0));
    for file in ["result.json", "trajectory.json", "report.json"] {
        let x = std::fs::read(a.path().join(file)).unwrap();
        let y = std::fs::read(b.path().join(file)).unwrap();
        assert_eq!(x, y, "{file}");
    }
}

#[test]
fn not_converged_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = choreo(&["search", "--group", "C(3,1)", "--R", "4", "--max-iter", "1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["status"], "not_converged");
    assert_eq!(read_json(&dir.path().join("result.json"))["converged"], false);
}

#[test]
fn colliding_start_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let start = dir.path().join("start.json");
    std::fs::write(&start, r#"{"schema_version":1,"n":4,"R":2,"coeffs":[[0,0],[0,0],[0,0],[0,0],[1,0]]}"#).unwrap();
    let out = choreo(&["search", "--group", "C(4,1)", "--R", "2", "--init", start.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"]["kind"], "collision");
}

#[test]
fn two_particle_trajectory_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, r#"{"schema_version":1,"n":2,"M":3,"positions":[[[1,0],[0,1],[-1,0]],[[-1,0],[0,-1],[1,0]]]}"#).unwrap();
    let out = choreo(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["schema_version"], 1);
    assert_eq!(err["error"]["kind"], "format");
    assert_eq!(err["error"]["field"], "n");
}

#[test]
fn unsupported_schema_version_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l.json");
    std::fs::write(&path, r#"{"schema_version":2,"n":3,"R":0,"coeffs":[[0,0]]}"#).unwrap();
    let out = choreo(&["project", "--group", "C(3,1)", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "format");
}

#[test]
fn malformed_group_is_an_error() {
    let out = choreo(&["catalog", "describe", "C(3,4/2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(stderr_json(&out)["error"]["kind"], "group");
}

#[test]
fn describe_json() {
    let d = stdout_json(&choreo(&["catalog", "describe", "D(6,4)", "--json"]));
    assert_eq!(d["order"], 48);
    assert_eq!(d["core"], 2);
    assert_eq!(d["rcc"]["holds"], false);

    let d = stdout_json(&choreo(&["catalog", "describe", "C'(3,2)", "--json"]));
    assert_eq!(d["order"], 6);
    assert_eq!(d["rcc"]["holds"], true);
}

#[test]
fn catalog_list_json() {
    let out = choreo(&["catalog", "list", "--n", "3", "--kmax", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let names: Vec<&str> = v["groups"].as_array().unwrap().iter().map(|g| g["name"].as_str().unwrap()).collect();
    for name in ["C(3,1)", "D(3,1)", "C'(3,2)", "D'(3,1)"] {
        assert!(names.contains(&name), "{name} missing from {names:?}");
    }
}

#[test]
fn lattice_json_contains_edge() {
    let v = stdout_json(&choreo(&["catalog", "lattice", "--n", "3", "--kmax", "2", "--json"]));
    let edges = v["edges"].as_array().unwrap();
    assert!(edges.iter().any(|e| e["sub"] == "C(3,1)" && e["sup"] == "D'(3,1)"));
    assert!(!edges.iter().any(|e| e["sub"] == "D'(3,1)" && e["sup"] == "C(3,1)"));
}

#[test]
fn project_writes_symmetric_loop_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.json");
    std::fs::write(&input, r#"{"schema_version":1,"n":3,"R":2,"coeffs":[[0.1,0.2],[0.3,0],[0,0],[1,0.4],[0.2,0.1]]}"#).unwrap();
    let projected = dir.path().join("p.json");
    let traj = dir.path().join("t.json");
    let out = choreo(&[
        "project", "--group", "D'(3,1)", "--input", input.to_str().unwrap(),
        "--out", projected.to_str().unwrap(), "--trajectory", traj.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = stdout_json(&out);
    assert!(summary["violation_before"].as_f64().unwrap() > 0.1);
    assert!(summary["residual_after"].as_f64().unwrap() < 1e-12);

    // projecting again changes nothing
    let again = choreo(&["project", "--group", "D'(3,1)", "--input", projected.to_str().unwrap()]);
    assert_eq!(stdout_json(&again), read_json(&projected));

    let svg = dir.path().join("t.svg");
    let analyzed = choreo(&["analyze", traj.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert_eq!(analyzed.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert_eq!(text.matches("<polygon").count(), 3);
}

#[test]
fn builtin_fig8_analysis() {
    let dir = tempfile::tempdir().unwrap();
    let out = choreo(&[
        "search", "--group", "D'(3,1)", "--init", "builtin:fig8", "--R", "7", "--max-iter", "0",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["winding_profile"], serde_json::json!([0, 0]));
    assert_eq!(report["chi_full"], 0);
    assert!(report["mean_angular_momentum"].as_f64().unwrap().abs() < 1e-6);
}
