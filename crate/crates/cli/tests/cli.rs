use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kfcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfcrit")).args(args).output().expect("binary runs")
}

fn kfcrit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kfcrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn assert_usage_error(o: &Output) {
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "diagnostic: {err}");
    assert!(err.starts_with("error"));
}

#[test]
fn k4_is_zero_factor_critical() {
    let o = kfcrit(&["critical", "--k", "0", "--graph6", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&kfcrit(&["critical", "--k", "0", "--graph6", "C~", "--format", "json"]));
    assert_eq!(v["by_definition"]["is_critical"], true);
    assert_eq!(v["by_favaron"]["is_critical"], true);
    assert!(stdout(&o).contains("favaron     critical"));
}

#[test]
fn threshold_json_for_order_six() {
    let o = kfcrit(&["threshold", "--n", "6", "--k", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["regime"], "n_eq_k_plus_6");
    let value = v["value"].as_f64().unwrap();
    assert!((value - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-12);
}

#[test]
fn threshold_text_uses_ten_significant_digits() {
    let o = kfcrit(&["threshold", "--n", "6", "--k", "0"]);
    assert!(stdout(&o).contains("3.372281323"));
}

#[test]
fn sweep_order_six_holds() {
    let o = kfcrit(&["sweep", "--n", "6", "--k", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["totals"]["scanned"], 112);
    assert_eq!(v["config"]["source"], "builtin_enumeration");
}

#[test]
fn graphs_on_the_threshold_are_logged_not_counted() {
    // E?~w is K2 v 4K1, which attains the order-6 threshold exactly
    let o = kfcrit_stdin(&["sweep", "--n", "6", "--k", "0", "--graph6-file", "-", "--format", "json"], "E?~w\n");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["totals"]["at_threshold"], 1);
    assert_eq!(v["totals"]["above_threshold"], 0);
    assert_eq!(v["at_threshold"][0]["critical"], false);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_csv_and_output_file() {
    let dir = std::env::temp_dir().join(format!("kfcrit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let o = kfcrit(&["sweep", "--n", "4", "--k", "0", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("graph6,n,kappa,rho,threshold,verdict\n"));
    assert_eq!(csv.lines().count(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn stream_sweep_reports_bad_lines() {
    let o = kfcrit_stdin(&["sweep", "--n", "4", "--k", "0", "--graph6-file", "-"], "C~\nC^\n!!\nA_\n");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("scanned          2"));
    assert!(out.contains("line 3:"));
    assert!(out.contains("line 4:"));
}

#[test]
fn extremal_prints_graph6() {
    let o = kfcrit(&["extremal", "--n", "6", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let g6 = stdout(&o).trim().to_string();
    let r = json(&kfcrit(&["radius", "--graph6", &g6, "--format", "json"]));
    assert!((r["rho"].as_f64().unwrap() - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn sharpness_confirms_and_reports_companion() {
    let o = kfcrit(&["sharpness", "--n", "8", "--k", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["findings"].as_array().unwrap().len(), 0);
    assert!((v["companion"]["rho"].as_f64().unwrap() - 5.0).abs() < 1e-9);
}

#[test]
fn edge_list_input() {
    let o = kfcrit_stdin(&["radius", "--edges-file", "-"], "# triangle\nn 3\n0 1\n1 2\n0 2\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2.000000000"));
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    assert_usage_error(&kfcrit(&[]));
    assert_usage_error(&kfcrit(&["frobnicate"]));
    assert_usage_error(&kfcrit(&["radius"]));
    assert_usage_error(&kfcrit(&["radius", "--graph6", "C~", "--edges-file", "x"]));
    assert_usage_error(&kfcrit(&["threshold", "--n", "7", "--k", "0"]));
    assert_usage_error(&kfcrit(&["threshold", "--n", "six", "--k", "0"]));
    assert_usage_error(&kfcrit(&["critical", "--k", "1", "--graph6", "C~"]));
    assert_usage_error(&kfcrit(&["radius", "--graph6", "D? "]));
    assert_usage_error(&kfcrit(&["radius", "--graph6", "D?"]));
    assert_usage_error(&kfcrit(&["sweep", "--n", "9", "--k", "1"]));
    assert_usage_error(&kfcrit(&["sweep", "--n", "6", "--k", "0", "--format", "csvx"]));
}

#[test]
fn order_zero_is_rejected() {
    assert_usage_error(&kfcrit(&["radius", "--graph6", "?"]));
    assert_usage_error(&kfcrit_stdin(&["radius", "--edges-file", "-"], "n 0\n"));
}
