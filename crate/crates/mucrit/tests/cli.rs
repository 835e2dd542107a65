use std::process::{Command, Output};

use mucrit::dto::{Report, WitnessDto};

fn mucrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mucrit")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = mucrit(&all);
    let rep = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), rep)
}

#[test]
fn f41_bundle_passes() {
    let out = mucrit(&["verify-f41"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("mucrit verify-f41: PASS"));
}

#[test]
fn levson_json() {
    let (code, rep) = json(&["search", "levson", "--alpha-max", "3000"]);
    assert_eq!(code, 0);
    assert_eq!(rep.schema, "mucrit/1");
    let s = rep.search.unwrap();
    assert!(s.params.contains(&("primes_scanned".to_string(), "586".to_string())));
    assert_eq!(s.witnesses.len(), 2);
    assert!(matches!(&s.witnesses[1], WitnessDto::Levson { p, alpha: 5, .. } if p == "41"));
}

#[test]
fn p19_residues_have_no_decomposition() {
    let (code, rep) = json(&["search", "sumset", "--p", "19", "--d", "9"]);
    assert_eq!(code, 0);
    assert_eq!(rep.search.unwrap().verdict, "none");
}

#[test]
fn sumset_witness_at_d4() {
    let (code, rep) = json(&["search", "sumset", "--p", "13", "--d", "4"]);
    assert_eq!(code, 0);
    let s = rep.search.unwrap();
    assert_eq!(s.modulus.as_deref(), Some("13"));
    assert_eq!(s.verdict, "found");
}

#[test]
fn usage_errors_exit_2() {
    let out = mucrit(&["search", "sumset", "--p", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(mucrit(&["check", "lemma99"]).status.code(), Some(2));
    assert_eq!(mucrit(&["search", "diffset", "--p", "15", "--d", "2"]).status.code(), Some(2));
    assert_eq!(mucrit(&["search", "sumset", "--p", "131", "--d", "5"]).status.code(), Some(2));
    assert_eq!(mucrit(&["verify-f41", "--threads", "0"]).status.code(), Some(2));
    assert_eq!(mucrit(&["--help"]).status.code(), Some(0));
}

#[test]
fn failing_checks_exit_1() {
    let (code, rep) = json(&["verify-identities"]);
    assert_eq!(code, 1);
    assert!(!rep.ok);
    let op = rep.suites.iter().find(|s| s.name == "operator").unwrap();
    assert!(op.checks.iter().any(|c| c.name == "x11-annihilated" && !c.ok));
}

#[test]
fn threads_do_not_change_output() {
    let a = mucrit(&["search", "diffset", "--p", "41", "--d", "20", "--format", "json", "--threads", "1"]);
    let b = mucrit(&["search", "diffset", "--p", "41", "--d", "20", "--format", "json", "--threads", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let a = mucrit(&["verify-residues", "--format", "json", "--threads", "1", "--seed", "3"]);
    let b = mucrit(&["verify-residues", "--format", "json", "--threads", "5", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = mucrit(&["check", "lemma4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("section,name,ok,detail\nlemma4,f41-factorization,true"));
}

#[test]
fn problem2_mentions_printed_set() {
    let (_, rep) = json(&["search", "problem2", "--p", "41", "--alpha", "5"]);
    let s = rep.search.unwrap();
    assert!(s.notes.iter().any(|n| n.contains("class present: true")));
}
