use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn dissect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dissect")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_pair() {
    let o = dissect(&["validate", fixture("pair.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "valid\n");
}

#[test]
fn validate_rejects_overlap() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_slice(&std::fs::read(fixture("grid2x2.json")).unwrap()).unwrap();
    let first = doc["tiles"][0].clone();
    doc["tiles"][1] = first;
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_vec(&doc).unwrap()).unwrap();
    let o = dissect(&["validate", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn analyze_grid_json() {
    let o = dissect(&["analyze", fixture("grid2x2.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["Delta"], 1);
    assert_eq!(v["ratioIdentity"], true);
    assert_eq!(v["linearIdentity"]["verdict"], "holds");
}

#[test]
fn hgraph_and_segments() {
    let o = dissect(&["hgraph", fixture("pair_grid2.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parity"]["nEven"], true);
    let o = dissect(&["segments", fixture("pair_grid2.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["solveX"]["status"], "solved");
    assert_eq!(v["areaConstraint"]["sPositive"], true);
}

#[test]
fn hgraph_needs_trapezoid() {
    let o = dissect(&["hgraph", fixture("grid2x2.json").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn search_pair_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = dissect(&[
        "search", "--prototile", "trapezoid", "--x", "(-1/2)+(1/2)√3", "--region", "√3x√3", "--n", "2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1 tilings, exhausted"));
    let found = std::fs::read(out.join("tiling-001.json")).unwrap();
    let v = dissect(&["validate", out.join("tiling-001.json").to_str().unwrap()]);
    assert_eq!(code(&v), 0);
    assert!(!found.is_empty());
    let summary: Value = serde_json::from_slice(&std::fs::read(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["exhausted"], true);
}

#[test]
fn search_odd_case() {
    let o = dissect(&["search", "--x", "(1/3)√3", "--region", "(3/2)+(1/2)√3x(3/2)+(1/2)√3", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("0 tilings, exhausted"));
}

#[test]
fn search_node_limit_exit_code() {
    let o = dissect(&[
        "search", "--prototile", "rectangle", "--w", "1", "--h", "2", "--region", "4x4", "--n", "8", "--node-limit", "3",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn render_is_deterministic() {
    let f = fixture("pair.json");
    let a = dissect(&["render", f.to_str().unwrap(), "--hgraph", "--segments", "--patterns"]);
    let b = dissect(&["render", f.to_str().unwrap(), "--hgraph", "--segments", "--patterns", "--threads", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("<svg"));
}

#[test]
fn sweep_table() {
    let o = dissect(&["sweep", "--x", "(-1/2)+(1/2)√3", "--n", "1..3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert_eq!(v[1]["status"], "searched");
    assert!(v[1]["count"].as_u64().unwrap() >= 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&dissect(&["frobnicate"])), 1);
    assert_eq!(code(&dissect(&["validate"])), 1);
    assert_eq!(code(&dissect(&["validate", "/nonexistent.json"])), 1);
    assert_eq!(code(&dissect(&["--help"])), 0);
}

#[test]
fn json_output_is_stable() {
    let f = fixture("two_pairs.json");
    for verb in ["analyze", "hgraph", "segments"] {
        let a = dissect(&[verb, f.to_str().unwrap(), "--json"]);
        let b = dissect(&[verb, f.to_str().unwrap(), "--json"]);
        assert_eq!(a.stdout, b.stdout, "{verb}");
    }
}
