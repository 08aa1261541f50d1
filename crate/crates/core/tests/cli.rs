use std::path::Path;
use std::process::{Command, Output};

use vanishkit::toolkit::AnalysisBundle;

fn vanishkit(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_vanishkit"));
    cmd.args(args).env_remove("VANISHKIT_CACHE");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sym3_vanishing_json() {
    let o = vanishkit(&["--group", "Sym3", "--format", "json", "vanishing"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"], "Sym3");
    assert_eq!(v["vanishing_class_sizes"], serde_json::json!([3]));
}

#[test]
fn check_reports_complement() {
    let o = vanishkit(&["--group", "Sym3", "--format", "json", "check", "--theorem", "C", "--prime", "2"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hypothesis_holds"], true);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["details"][0], serde_json::json!({"kind": "normal_complement", "order": 3}));

    let o = vanishkit(&["--group", "Sym3", "check", "--theorem", "c", "--prime", "3"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("hypothesis: false"));
}

#[test]
fn exit_codes() {
    assert_eq!(vanishkit(&["--group", "Alt7", "--order-cap", "100", "classes"], None).status.code(), Some(2));
    assert_eq!(vanishkit(&["--group", "NoSuchGroup", "classes"], None).status.code(), Some(1));
    assert_eq!(vanishkit(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(vanishkit(&["--group", "Sym3", "check", "--theorem", "D"], None).status.code(), Some(1));
    assert_eq!(vanishkit(&["verify-alt-table", "--n", "6"], None).status.code(), Some(1));
}

#[test]
fn analyze_round_trips() {
    let o = vanishkit(&["--group", "Frob21", "--format", "json", "analyze"], None);
    let text = stdout(&o);
    let bundle = AnalysisBundle::from_json(&text).unwrap();
    assert_eq!(bundle.order, 21);
    assert_eq!(bundle.to_json().unwrap(), text);
    assert!(bundle.theorems.iter().all(|r| r.consistent));
}

#[test]
fn cached_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--group", "Sym4", "--format", "json", "analyze"];
    let cold = vanishkit(&args, Some(dir.path()));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let warm = vanishkit(&args, Some(dir.path()));
    let uncached = vanishkit(&args, None);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn group_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("groups.txt");
    std::fs::write(&path, "group D12\ndegree 6\ngen (1,2,3,4,5,6)\ngen (2,6)(3,5)\n").unwrap();
    let file = path.to_str().unwrap();
    let o = vanishkit(&["--file", file, "--group", "D12", "classes"], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("group D12 (order 12, 6 classes)"));

    std::fs::write(&path, "group Bad\ndegree 3\ngen (1,4)\n").unwrap();
    let o = vanishkit(&["--file", file, "classes"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn scan_and_verifiers() {
    let o = vanishkit(&["scan"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 inconsistent"));
    let o = vanishkit(&["verify-lemmas"], None);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
    let o = vanishkit(&["verify-alt-table", "--n", "7"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=7"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let o = vanishkit(&["--group", "C6", "--output", path.to_str().unwrap(), "chartable"], None);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("group C6"));
}
