use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn nzflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nzflow")).args(args).output().unwrap()
}

fn corpus(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn info_petersen() {
    let o = nzflow(&["info", &corpus("petersen.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "n=10 m=15 cubic bridgeless girth=5");
}

#[test]
fn info_triangle_and_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.edges", "0 1\n1 2\n2 0\n");
    let o = nzflow(&["info", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not cubic"));
    let bad = write(dir.path(), "bad.edges", "0 x\n");
    let o = nzflow(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn certify_petersen_and_k4() {
    let o = nzflow(&["certify", &corpus("petersen.g6")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "CERTIFIED");
    assert_eq!(v["verified"], true);
    assert_eq!(v["flow"]["k"], 5);
    assert_eq!(v["omega"], 2);

    let o = nzflow(&["certify", &corpus("k4.g6")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stage"], "coloring");
    assert_eq!(v["flow"]["k"], 4);
}

#[test]
fn certify_rejects_non_cubic() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.edges", "0 1\n1 2\n2 0\n");
    assert_eq!(nzflow(&["certify", tri.to_str().unwrap()]).status.code(), Some(2));
    // two triangles joined by a bridge
    let bridged = write(dir.path(), "b.edges", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n");
    assert_eq!(nzflow(&["certify", bridged.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn certify_unresolved_when_bounds_refuse() {
    let o = nzflow(&[
        "certify",
        &corpus("petersen.g6"),
        "--max-bf-dim",
        "0",
        "--max-oddness-n",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "UNRESOLVED");
    assert!(v["flow"].is_null());
}

#[test]
fn certify_oddness_four() {
    let o = nzflow(&["certify", &corpus("petersen-inflated-k4.g6")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["omega"], 4);
    assert_eq!(v["stage"], "partition");
}

#[test]
fn certify_writes_out_file_with_seeded_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let o = nzflow(&[
        "certify",
        &corpus("blanusa-a.g6"),
        "--samples",
        "20",
        "--seed",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["property_checks"]["counting_violations"].as_array().unwrap().len(), 0);
}

#[test]
fn scan_mixed_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(corpus("k4.g6"), dir.path().join("b.g6")).unwrap();
    std::fs::copy(corpus("petersen.g6"), dir.path().join("a.g6")).unwrap();
    write(dir.path(), "c.edges", "garbage\n");
    let o = nzflow(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let files: Vec<_> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["file"].as_str().unwrap())
        .collect();
    assert_eq!(files, ["a.g6", "b.g6", "c.edges"]);
    assert_eq!(v["counts"]["certified"], 2);
    assert_eq!(v["counts"]["errors"], 1);
    assert!(v["entries"][2]["error"].is_string());
}

#[test]
fn scan_empty_and_missing() {
    let dir = tempfile::tempdir().unwrap();
    let o = nzflow(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"]["files"], 0);
    let o = nzflow(&["scan", dir.path().join("nope").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_is_reproducible_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["k4.g6", "petersen.g6", "prism.g6", "theta.edges", "k33.g6"] {
        std::fs::copy(corpus(f), dir.path().join(f)).unwrap();
    }
    let d = dir.path().to_str().unwrap();
    let serial = nzflow(&["scan", d, "--jobs", "1", "--samples", "5"]);
    let parallel = nzflow(&["scan", d, "--jobs", "4", "--samples", "5"]);
    let strip = |o: &Output| stdout(o).replace("\"jobs\": 1", "").replace("\"jobs\": 4", "");
    assert_eq!(strip(&serial), strip(&parallel));
}
