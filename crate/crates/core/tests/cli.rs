use std::process::{Command, Output};

use serde_json::Value;

fn octolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octolab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_json() {
    let o = octolab(&["verify", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["config_echo"]["selection"], "all");
    let checks = v["checks"].as_array().unwrap();
    let total: u64 =
        ["pass", "fail", "discrepancy", "indeterminate"].iter().map(|k| v["summary"][k].as_u64().unwrap()).sum();
    assert_eq!(total as usize, checks.len());
}

#[test]
fn torsion_selection_only() {
    let o = octolab(&["verify", "eq10.*"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.starts_with("pass eq10.torsion.") && l.ends_with(" Eq. 10")));
}

#[test]
fn unknown_selection_is_a_usage_error() {
    let o = octolab(&["verify", "no.such.check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(octolab(&["verify", "all", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(octolab(&["torsion", "--x", "e8"]).status.code(), Some(2));
    assert_eq!(octolab(&["torsion", "--x", "1+e1"]).status.code(), Some(2));
    assert_eq!(octolab(&["calib", "--hull", "e1"]).status.code(), Some(2));
    assert_eq!(octolab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = std::env::temp_dir().join(format!("octolab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    for p in [&a, &b] {
        let o = octolab(&["verify", "all", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn torsion_at_identity() {
    let o = octolab(&["torsion", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 42);
    assert!(out.lines().any(|l| l == "(1,2,4): 1"));
    let j = octolab(&["torsion", "--x", "3/5+4/5e1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["x"], "3/5+4/5e1");
}

#[test]
fn liegen_prints_dimension_and_fingerprint() {
    let out = stdout(&octolab(&["liegen", "--closure", "left-mult"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("dim 28"));
    let fp = lines.next().unwrap().strip_prefix("fingerprint ").unwrap();
    assert_eq!(fp.len(), 64);
    assert!(stdout(&octolab(&["liegen", "--closure", "derivations"])).starts_with("dim 14\n"));
    assert!(stdout(&octolab(&["liegen", "--closure", "stabilizer"])).starts_with("dim 21\n"));
}

#[test]
fn calib_hull() {
    let o = octolab(&["calib", "--hull", "e1,e2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("hull: 1, e1, e2, e4\n"));
    let comp = out.lines().nth(1).unwrap().strip_prefix("complement: ").unwrap();
    let mut idx: Vec<String> = comp.split(", ").map(|s| s.trim_start_matches('-').to_owned()).collect();
    idx.sort();
    assert_eq!(idx, ["e3", "e5", "e6", "e7"]);
}

#[test]
fn roots_and_dims() {
    let r = stdout(&octolab(&["roots", "--identify"]));
    assert!(r.starts_with("type D4 rank 4 roots 24\n"));
    let d = stdout(&octolab(&["dims", "--table"]));
    assert_eq!(d.lines().filter(|l| l.ends_with("discrepancy")).count(), 2);
    assert_eq!(d.lines().filter(|l| l.ends_with("match")).count(), 3);
    let j: Value = serde_json::from_str(&stdout(&octolab(&["dims", "--format", "json"]))).unwrap();
    assert_eq!(j["symmetric_spaces"].as_array().unwrap().len(), 4);
}
