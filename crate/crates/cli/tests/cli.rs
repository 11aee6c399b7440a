use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coronadim"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn keys(v: &Value) -> BTreeSet<&str> {
    v.as_object().unwrap().keys().map(String::as_str).collect()
}

#[test]
fn dim_of_a_wheel() {
    let o = run(&["dim", "wheel(7)"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["solver"]["status"], "EXACT");
    assert_eq!(rec["solver"]["lower"], 3);
    assert_eq!(rec["verdict"], "AGREE");
    assert!(rec["oracle"]
        .as_array()
        .unwrap()
        .iter()
        .any(|b| b["source"] == "rem:wheel"));
}

#[test]
fn dim_rejects_disconnected_and_malformed_input() {
    let o = run(&["dim", "empty(3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
    assert_eq!(run(&["dim", "corona(path(2),"]).status.code(), Some(1));
}

#[test]
fn check_reports_representations_and_collisions() {
    let out = stdout(&run(&["check", "cycle(6)", "--landmarks", "0,1"]));
    assert!(out.starts_with("{0,1} resolving\n"));
    assert_eq!(out.lines().count(), 7);
    let out = stdout(&run(&["check", "cycle(6)", "--landmarks", "0,3"]));
    assert!(out.starts_with("{0,3} not resolving\n"));
    assert!(out.lines().any(|l| l == "collision 1 5"));
    assert!(stdout(&run(&["check", "complete(3)", "--landmarks", "0,1"])).starts_with("{0,1} resolving"));
    assert_eq!(run(&["check", "cycle(6)", "--landmarks", "0,9"]).status.code(), Some(1));
}

#[test]
fn edge_list_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = run(&["edges", "corona(path(2), complete(3))"]);
    std::fs::write(&path, &o.stdout).unwrap();
    let rec: Value =
        serde_json::from_str(stdout(&run(&["dim", "--from-file", path.to_str().unwrap()])).trim()).unwrap();
    assert_eq!(rec["order"], 8);
    assert_eq!(rec["solver"]["lower"], 4);
}

#[test]
fn wheel_suite_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.jsonl");
    let o = run(&["crossvalidate", "--suite", "wheels", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let verdicts: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["verdict"]
                .as_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert_eq!(verdicts, vec!["AGREE"; 10]);
}

#[test]
fn csv_has_fixed_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    run(&[
        "crossvalidate",
        "--suite",
        "fans",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,suite,expr,order,status,lower,upper,witness,subsets_checked,oracle,\
         reconciled_lower,reconciled_upper,verdict,property_violations,duration_ms"
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn full_suite_records_follow_the_schema_and_cover_every_rule() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.jsonl");
    let o = run(&["crossvalidate", "--suite", "all", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let top: BTreeSet<&str> = [
        "id",
        "suite",
        "expr",
        "order",
        "solver",
        "oracle",
        "reconciled",
        "verdict",
        "properties",
    ]
    .into();
    let solver: BTreeSet<&str> = ["status", "lower", "upper", "witness", "subsets_checked"].into();
    let bound: BTreeSet<&str> = ["kind", "value", "source", "conditions_checked"].into();
    let mut tags = BTreeSet::new();
    let text = std::fs::read_to_string(&path).unwrap();
    for line in text.lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        assert_eq!(keys(&rec), top, "{line}");
        assert_eq!(keys(&rec["solver"]), solver);
        assert!(["AGREE", "ORACLE_SILENT"].contains(&rec["verdict"].as_str().unwrap()));
        for b in rec["oracle"].as_array().unwrap() {
            assert_eq!(keys(b), bound);
            assert!(["LOWER", "UPPER", "EXACT", "INAPPLICABLE"].contains(&b["kind"].as_str().unwrap()));
            tags.insert(b["source"].as_str().unwrap().to_owned());
        }
        for p in rec["properties"].as_array().unwrap() {
            assert_eq!(p["holds"], true, "{line}");
        }
    }
    let expected = [
        "thm:lower",
        "thm:diam2",
        "thm:alphabeta",
        "cor:emptyH",
        "thm:completeH",
        "thm:k1join-upper",
        "thm:diam6-or-cycle",
        "thm:k1-corona",
        "lem:n-2",
        "rem:wheel",
        "rem:fan",
        "lem:tree",
        "thm:tree-corona",
        "fact:base",
    ];
    for tag in expected {
        assert!(tags.contains(tag), "{tag} never reported");
    }
    assert_eq!(tags.len(), expected.len(), "{tags:?}");
}

#[test]
fn timings_are_opt_in() {
    let plain = stdout(&run(&["dim", "cycle(5)"]));
    assert!(!plain.contains("duration_ms"));
    let timed = stdout(&run(&["dim", "cycle(5)", "--timings"]));
    assert!(timed.contains("\"duration_ms\""));
}
