//! End-to-end tests of the `permlab` binary: output formats, exit codes,
//! and a few spot computations through the real interface.

use std::process::{Command, Output};

fn permlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(args)
        .env("PERMLAB_CACHE", std::env::temp_dir().join("permlab-cli-test-cache"))
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = permlab(args);
    assert!(
        out.status.success(),
        "permlab {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn contains_example() {
    let v = stdout_json(&["contains", "--pattern", "32514", "--host", "362957184"]);
    assert_eq!(v["contains"], serde_json::json!(true));
    let v = stdout_json(&["contains", "--pattern", "4321", "--host", "362957184"]);
    assert_eq!(v["contains"], serde_json::json!(false));
}

#[test]
fn derange_prints_fine_numbers() {
    let v = stdout_json(&["derange", "--class", "132", "--n", "7", "--no-cache"]);
    let got: Vec<String> = v["derangements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap().to_string())
        .collect();
    assert_eq!(got, vec!["1", "0", "1", "2", "6", "18", "57", "186"]);
}

#[test]
fn sort_series_tarjan() {
    let v = stdout_json(&["sort", "series", "--t", "2", "--perm", "2435761"]);
    assert_eq!(v["result"], serde_json::json!(false));
    let v = stdout_json(&[
        "sort", "series", "--t", "2", "--perm", "35241", "--witness",
    ]);
    assert_eq!(v["result"], serde_json::json!(true));
    assert!(v["witness"].as_str().unwrap().contains("push 1"));
}

#[test]
fn sort_west_passes() {
    let v = stdout_json(&["sort", "west", "--perm", "35241", "--t", "2"]);
    assert_eq!(v["west_sortable"], serde_json::json!(true));
    assert_eq!(v["passes"][0], serde_json::json!("32145"));
    assert_eq!(v["passes"][1], serde_json::json!("12345"));
}

#[test]
fn partition_stanton_display() {
    let v = stdout_json(&["partition", "--shape", "8,8,4,4"]);
    assert_eq!(v["profile"]["unimodal"], serde_json::json!(false));
    assert_eq!(v["ranks"].as_array().unwrap().len(), 25);
}

#[test]
fn csv_format_is_rfc4180ish() {
    let out = permlab(&[
        "--format",
        "csv",
        "gk",
        "--len",
        "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("beta,g1,g2,ray_west_j"));
    assert!(text.contains("12,5,23,1"));
}

#[test]
fn usage_errors_exit_2() {
    let out = permlab(&["contains", "--pattern", "21"]); // missing --host
    assert_eq!(out.status.code(), Some(2));
    let out = permlab(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computation_errors_exit_1() {
    // 1,1 is not a valid shape for full rook placements
    let out = permlab(&["frp", "--shape", "1,1", "--list"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("error"), "{msg}");
    // malformed permutation
    let out = permlab(&["contains", "--pattern", "11", "--host", "123"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn survey_gn_runs() {
    let v = stdout_json(&["survey", "gn-minus-one", "--max-n", "8"]);
    assert_eq!(v["odd_all_zero"], serde_json::json!(true));
    assert_eq!(v["even_signs_alternate"], serde_json::json!(true));
}

#[test]
fn seq_pipeline_on_catalan() {
    let v = stdout_json(&["seq", "cf", "--builtin", "catalan:12"]);
    let alphas = v["alphas"].as_array().unwrap();
    assert!(alphas.len() >= 10);
    assert!(alphas.iter().all(|a| a == "1"));
    let v = stdout_json(&["seq", "hankel", "--builtin", "catalan:12", "--order", "5"]);
    assert_eq!(v["all_nonnegative"], serde_json::json!(true));
    let v = stdout_json(&[
        "seq",
        "residual",
        "--terms",
        "1,1,1,1,1,1,1,1",
        "--poly",
        "1,0,1;-1,1,1;-1,0,0",
    ]);
    assert_eq!(v["vanishes"], serde_json::json!(true));
}

#[test]
fn comp_layered_bridge_via_cli() {
    let v = stdout_json(&["comp", "--comp", "3,1,4", "--layered"]);
    assert_eq!(v["layered"], serde_json::json!("32148765"));
    let v = stdout_json(&["comp", "--from-perm", "32148765"]);
    assert_eq!(v["comp"], serde_json::json!("3,1,4"));
}

#[test]
fn interval_and_symclasses() {
    let v = stdout_json(&["interval", "--lower", "1", "--upper", "231"]);
    let ranks: Vec<&str> = v["ranks"].as_array().unwrap().iter().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(ranks, vec!["1", "2", "1"]);
    let v = stdout_json(&["symclasses", "--n", "4"]);
    assert_eq!(v["class_count"], serde_json::json!(7));
    // asking for an empty interval is a computation error
    let out = permlab(&["interval", "--lower", "21", "--upper", "123"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn swe_probe_reports_separating_shape() {
    let v = stdout_json(&[
        "swe", "--beta", "132", "--gamma", "231", "--max-cols", "4", "--no-cache",
    ]);
    assert_eq!(v["equivalent_so_far"], serde_json::json!(false));
    assert_eq!(
        v["separating_shape"]["shape"],
        serde_json::json!("4,4,4,3")
    );
    let v = stdout_json(&[
        "swe", "--beta", "231", "--gamma", "312", "--max-cols", "4", "--no-cache",
    ]);
    assert_eq!(v["equivalent_so_far"], serde_json::json!(true));
}

#[test]
fn rs_count_and_cmachine_class() {
    let v = stdout_json(&["sort", "rs", "--r", "2", "--s", "2", "--count-to", "5", "--no-cache"]);
    let counts: Vec<&str> = v["sortable_counts"].as_array().unwrap().iter().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(counts, vec!["1", "1", "2", "6", "24", "116"]);
    let v = stdout_json(&["sort", "cmachine", "--basis", "213", "--s", "1", "--class-to", "5", "--no-cache"]);
    let counts: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|t| t.as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 23, 103]);
}

#[test]
fn cache_roundtrip_on_separable() {
    let dir = std::env::temp_dir().join(format!("permlab-cache-{}", std::process::id()));
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_permlab"))
            .args(["separable", "--n", "6"])
            .env("PERMLAB_CACHE", &dir)
            .output()
            .expect("binary runs")
    };
    let first = run();
    assert!(first.status.success());
    let second = run();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(dir.read_dir().map(|d| d.count() > 0).unwrap_or(false));
    let _ = std::fs::remove_dir_all(dir);
}
