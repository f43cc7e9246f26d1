use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grigorchuk")).args(args).output().expect("run grigorchuk")
}

fn stdout_records(output: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn stab_suite_passes_and_recognises_groups() {
    let out = run(&["check", "--suite", "stab", "--omega", ":012", "--max-len", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let records = stdout_records(&out);
    let types: Vec<&str> = records.iter().filter_map(|r| r["parameters"]["type"].as_str()).collect();
    assert_eq!(types, ["D8", "Z2xZ2"]);
}

#[test]
fn prefix_suite_reports_zero_violations() {
    let out = run(&["check", "--suite", "prefix", "--depth", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let records = stdout_records(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["parameters"]["violations"], 0);
}

#[test]
fn sequence_with_repetition_is_unsupported() {
    let out = run(&["check", "--suite", "stab", "--omega", ":000", "--max-len", "6"]);
    assert_eq!(out.status.code(), Some(3));
    let records = stdout_records(&out);
    assert_eq!(records[0]["status"], "unsupported");
    assert!(records[0]["parameters"]["reason"].as_str().unwrap().contains("repetition"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["check", "--omega", "0123:"][..],
        &["act", "--omega", ":012", "--word", "abx"],
        &["schreier", "--format", "png"],
        &["check", "--suite", "nope"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_suite_exits_with_one_and_carries_counterexample() {
    let out = run(&["check", "--suite", "projections", "--omega", ":012", "--max-len", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let records = stdout_records(&out);
    assert!(records.iter().all(|r| r["status"] != "fail" || !r["counterexample"].is_null()));
}

#[test]
fn reports_round_trip_through_json() {
    let out = run(&["check", "--suite", "faithful", "--omega", ":01", "--max-len", "6"]);
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
        for key in ["check", "omega", "max_len", "status"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
    }
}

#[test]
fn dot_output_is_deterministic() {
    let args = ["schreier", "--omega", ":012", "--radius", "5", "--format", "dot"];
    let first = run(&args).stdout;
    assert_eq!(first, run(&args).stdout);
    let text = String::from_utf8(first).unwrap();
    assert!(text.contains(r#""0inf" -- "0inf" [label="d""#));
    assert!(text.contains(r#""1" -- "1" [label="c""#));
    assert!(text.contains(r#""01" -- "0inf" [label="b""#));
    assert!(text.contains(r#""01" -- "0inf" [label="c""#));
}

#[test]
fn jsonl_has_one_line_per_edge() {
    let out = run(&["schreier", "--omega", ":01", "--radius", "4", "--format", "jsonl"]);
    let records = stdout_records(&out);
    let omega: grigorchuk::OmegaSequence = ":01".parse().unwrap();
    let (_, edges) = grigorchuk::gamma::ball_edges(&omega, 4);
    assert_eq!(records.len(), edges.len());
    let radius0 = run(&["schreier", "--radius", "0", "--format", "dot"]);
    let text = String::from_utf8(radius0.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("pos=")).count(), 1);
}

#[test]
fn act_examples() {
    let rec = |word: &str, v: &str| stdout_records(&run(&["act", "--omega", ":012", "--word", word, "--vertex", v]))[0].clone();
    let r = rec("a", "∅");
    assert_eq!((r["image"].as_str(), r["distance"].as_u64()), (Some("∅"), Some(0)));
    let r = rec("b", "∅");
    assert_eq!((r["image"].as_str(), r["distance"].as_u64()), (Some("0inf,01"), Some(2)));
    let r = rec("", "0inf,1");
    assert_eq!(r["image"].as_str(), Some("0inf,1"));
}

#[test]
fn orbit_tables() {
    let rows = stdout_records(&run(&["orbit", "--omega", ":012", "--max-len", "6"]));
    let d: Vec<u64> = rows.iter().map(|r| r["max_distance"].as_u64().unwrap()).collect();
    assert_eq!(d, [0, 2, 2, 4, 4, 4, 4]);
    let rows = stdout_records(&run(&["orbit", "--omega", ":01", "--max-len", "6", "--vertex", "0inf"]));
    let d: Vec<u64> = rows.iter().map(|r| r["max_distance"].as_u64().unwrap()).collect();
    assert_eq!(d, [0, 2, 2, 4, 4, 6, 6]);
    let rows = stdout_records(&run(&["orbit", "--max-len", "0"]));
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0]["length"].as_u64(), rows[0]["max_distance"].as_u64()), (Some(0), Some(0)));
}
