use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn strip_timing(mut v: Value) -> Value {
    v["tool_version"] = Value::Null;
    for c in v["checks"].as_array_mut().unwrap() {
        c["elapsed_ms"] = Value::Null;
    }
    v
}

#[test]
fn twists_and_normal_form() {
    let v = json(&["braid", "twists", "3: 1 1 1 1 2 1 1 2"]);
    assert_eq!(v["k_max"], 1);
    let v = json(&["braid", "normalize", "2: 1 1 1"]);
    assert_eq!(v["normal_form"]["delta_power"], 3);
}

#[test]
fn literal_inputs() {
    let v = json(&["braid", "components", "--tlink", "T((3,1),(7,3))"]);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 3);
    let v = json(&["braid", "linking", "--vlink", "V((2,4),(3,3))"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    let v = json(&["braid", "invariants", "3: 1 2 1 2"]);
    assert_eq!(
        v["alexander"],
        serde_json::json!({"0": "1", "1": "-1", "2": "1"})
    );
}

#[test]
fn satellite_subcommands() {
    let v = json(&["braid", "delete", "--components", "3", "3: 1 2 1 2 1 2"]);
    assert_eq!(v["braid"]["letters"], serde_json::json!([1, 1]));
    let v = json(&["braid", "adjoin-axis", "2: "]);
    assert_eq!(v["letters"], serde_json::json!([2, 1, 1, 2]));
    let v = json(&[
        "braid",
        "match-case2",
        "--twists",
        "3",
        "--vlink",
        "V((2,6),(3,3))",
    ]);
    assert_eq!(v["matched"], true);
    assert_eq!(v["wheel_power"], 4);
    assert_eq!(v["b0"]["letters"], serde_json::json!([1, 1]));
}

#[test]
fn family_commands() {
    let v = json(&[
        "family",
        "make",
        "satellite-t",
        "--a",
        "2",
        "--b",
        "2",
        "--c",
        "2",
        "--k",
        "0",
    ]);
    assert_eq!(v["spec"]["literal"], "T((6,2),(8,6))");
    let v = json(&["family", "vlink", "V((6,~2),(6,8))"]);
    assert_eq!(v["braid"]["strands"], 6);
    let v = json(&["family", "tlink", "T((3,1),(4,3))"]);
    assert_eq!(v["braid"]["letters"].as_array().unwrap().len(), 11);
}

#[test]
fn errors_exit_with_two() {
    for args in [
        &["braid", "twists", "3: 1 x"][..],
        &["braid", "twists", "3: 1 -2"],
        &["braid", "delete", "--components", "1,2", "2: 1 1"],
        &["family", "tlink", "T((3,1),(2,3))"],
        &["paper", "verify-all", "--grid", "a=1,b=1,c=1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
    assert_ne!(run(&["braid", "twists"]).status.code(), Some(0));
}

#[test]
fn verify_all_is_deterministic() {
    let args = [
        "paper",
        "verify-all",
        "--kmax",
        "3",
        "--grid",
        "a=1..2,b=1..2,c=1..2,k=0..1",
    ];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a["summary"]["fail"], 0);
    assert!(a["summary"]["pass"].as_u64().unwrap() > 50);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn verify_all_text_and_file_output() {
    let dir = std::env::temp_dir().join(format!("braidforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = run(&[
        "paper",
        "verify-all",
        "--kmax",
        "1",
        "--grid",
        "a=1,b=1,c=2,k=0",
        "--format",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text
        .lines()
        .all(|l| l.starts_with("PASS") || l.starts_with("summary:")));
    assert!(text.contains("0 fail"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn deletion_chain_command() {
    let v = json(&[
        "paper",
        "deletion-chain",
        "--a",
        "2",
        "--b",
        "1",
        "--c",
        "2",
        "--k",
        "1",
    ]);
    assert_eq!(v["first"]["target"], "T((4,2),(10,4))");
    assert_eq!(v["second"]["bundle_matches"], true);
}
