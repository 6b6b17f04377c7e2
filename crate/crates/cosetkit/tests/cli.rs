//! End-to-end checks of the command-line binary: exit codes, JSON shape,
//! determinism, and the budget environment variable.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cosetkit"));
    c.env_remove("COSETKIT_BUDGET");
    c
}

fn emit_group(dir: &tempfile::TempDir, family: &str, p: &str) -> PathBuf {
    let path = dir.path().join(format!("{family}_{p}.json"));
    let out = bin()
        .args(["catalog", "emit", family, p, "-o"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    path
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let v4 = emit_group(&dir, "elementary_abelian", "2");
    let s3 = emit_group(&dir, "symmetric_transpositions", "3");

    let ok = bin().arg("--json").arg("analyze").arg(&v4).output().unwrap();
    assert_eq!(code(&ok), 0);
    let r = json(&ok);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["status"], "verified");
    assert_eq!(r["results"]["two_acyclic"], true);
    assert!(r["input_digest"].is_string());

    // a group with a coset 2-cycle still analyzes fine, with the cycle shown
    let bad = bin().arg("--json").arg("analyze").arg(&s3).output().unwrap();
    assert_eq!(code(&bad), 0);
    let r = json(&bad);
    assert_eq!(r["results"]["two_acyclic"], false);
    assert_eq!(r["results"]["girth"], 4);
    assert!(r["results"]["coset_cycle"].is_array());
    assert_eq!(r["results"]["acyclicity_level"], 1);

    // ...but distance computations on it are rejected
    let rejected = bin()
        .arg("distance")
        .arg(&s3)
        .args(["--from", "", "--to", "t12", "--gamma", "t13"])
        .output()
        .unwrap();
    assert_eq!(code(&rejected), 2);
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let v4 = emit_group(&dir, "elementary_abelian", "2");
    let strip = |out: &Output| -> String {
        String::from_utf8(out.stdout.clone())
            .unwrap()
            .lines()
            .filter(|l| !l.contains("timing_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let run = || {
        bin()
            .args(["--json", "distance"])
            .arg(&v4)
            .args(["--from", "", "--to", "ab", "--gamma", "a"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(code(&a), 0);
    assert_eq!(strip(&a), strip(&b));
    let r = json(&a);
    assert_eq!(r["results"]["distance"], 2);
    assert_eq!(r["results"]["crosscheck"]["dual_distance"], 1);
    assert_eq!(r["results"]["crosscheck"]["consistent"], true);
}

#[test]
fn parse_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = bin().arg("analyze").arg(dir.path().join("nope.json")).output().unwrap();
    assert_eq!(code(&missing), 1);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    let bad = bin().arg("analyze").arg(&garbage).output().unwrap();
    assert_eq!(code(&bad), 1);

    let unknown = bin().args(["verify", "no-such-suite"]).output().unwrap();
    assert_eq!(code(&unknown), 1);
}

#[test]
fn budget_env_and_flag() {
    let exhausted = bin()
        .env("COSETKIT_BUDGET", "100")
        .args(["--json", "verify", "twodistances"])
        .output()
        .unwrap();
    assert_eq!(code(&exhausted), 3);
    assert_eq!(json(&exhausted)["status"], "budget-exceeded");

    // the flag overrides the environment
    let fine = bin()
        .env("COSETKIT_BUDGET", "100")
        .args(["--budget", "200000000", "verify", "twodistances"])
        .output()
        .unwrap();
    assert_eq!(code(&fine), 0);
}

#[test]
fn covering_runs_both_directions() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = emit_group(&dir, "dihedral_reflections", "4");
    let v4 = emit_group(&dir, "elementary_abelian", "2");

    let fwd = bin()
        .arg("--json")
        .arg("cover")
        .arg(&d4)
        .arg(&v4)
        .arg("--verify")
        .output()
        .unwrap();
    assert_eq!(code(&fwd), 0);
    let r = json(&fwd);
    assert_eq!(r["results"]["compatible"], true);
    assert_eq!(r["results"]["fiber_size"], 2);
    assert_eq!(r["results"]["covering"], true);

    let rev = bin().arg("--json").arg("cover").arg(&v4).arg(&d4).output().unwrap();
    assert_eq!(code(&rev), 2);
    let r = json(&rev);
    assert_eq!(r["results"]["compatible"], false);
    assert_eq!(r["results"]["witness_word"], "abab");
}

#[test]
fn dual_and_closure_commands() {
    let dir = tempfile::tempdir().unwrap();
    let v4 = emit_group(&dir, "elementary_abelian", "2");

    let hg = dir.path().join("dual.json");
    let dual = bin()
        .arg("--json")
        .arg("dual")
        .arg(&v4)
        .args(["--check-acyclic", "3", "--emit-hypergraph"])
        .arg(&hg)
        .output()
        .unwrap();
    assert_eq!(code(&dual), 0);
    let r = json(&dual);
    assert_eq!(r["results"]["vertices"], 9);
    assert_eq!(r["results"]["hyperedges"], 4);
    assert_eq!(r["results"]["acyclic_check"]["agree"], true);
    let emitted: Value = serde_json::from_str(&std::fs::read_to_string(&hg).unwrap()).unwrap();
    assert_eq!(emitted["colors"].as_array().unwrap().len(), 9);

    let cl = bin()
        .arg("--json")
        .arg("closure")
        .arg(&v4)
        .args(["--coset", ":a", "--coset", "ab:a", "--bound", "3"])
        .output()
        .unwrap();
    assert_eq!(code(&cl), 0);
    let r = json(&cl);
    assert_eq!(r["results"]["closure_size"], 4);
    assert_eq!(r["results"]["contained_in_dual"], true);
}
