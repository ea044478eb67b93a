use std::process::{Command, Output};

use serde_json::Value;

fn heckerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckerep")).args(args).output().expect("run heckerep")
}

fn json(args: &[&str]) -> Value {
    let out = heckerep(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn hecke_prints_so5_constants() {
    let v = json(&["hecke", "--type", "C2", "--mu", "1,1", "--mu", "1,1", "--mu", "1,1"]);
    assert_eq!(v["[0,0]"], serde_json::json!({ "1": -1, "5": 1 }));
    assert_eq!(v["[3,3]"], serde_json::json!({ "0": 1 }));
}

#[test]
fn hecke_iwahori_path_agrees() {
    let args = ["--type", "GL2", "--mu", "1,0", "--mu", "1,0"];
    let fast = json(&[&["hecke"], &args[..]].concat());
    let slow = json(&[&["hecke", "--iwahori"], &args[..]].concat());
    assert_eq!(fast, slow);
    assert_eq!(fast["[1,1]"], serde_json::json!({ "0": 1, "1": 1 }));
}

#[test]
fn rep_spin12_invariants() {
    assert_eq!(json(&["rep", "--type", "D6", "--mu", "w6", "--mu", "w6", "--lambda", "0"]), Value::from(1));
}

#[test]
fn fiber_count_and_audit() {
    let base = ["--type", "GL3", "--mu", "1,0,0", "--mu", "1,0,0", "--mu", "1,1,0", "--lambda", "2,1,1"];
    let count = json(&[&["fiber", "count"], &base[..]].concat());
    assert_eq!(count, serde_json::json!({ "0": 1, "1": 2, "2": 2 }));
    let audit = json(&[&["fiber", "audit"], &base[..]].concat());
    assert_eq!(audit["status"], "PASS");
}

#[test]
fn oracle_counts_lines() {
    let v = json(&["oracle", "--n", "2", "--q", "2", "--mu", "1,0", "--mu", "1,0", "--lambda", "1,1"]);
    assert_eq!(v, serde_json::json!({ "count": 3 }));
    let w = json(&["oracle", "--n", "2", "--q", "3", "--mu", "1,0", "--mu", "0,-1", "--lambda", "0,0", "--witnesses"]);
    assert_eq!(w["count"], 4);
    assert_eq!(w["witnesses"].as_array().unwrap().len(), 4);
}

#[test]
fn rgon_tree_and_errors() {
    let v = json(&["rgon", "--u", "2,2,2"]);
    assert_eq!(v["legs"], serde_json::json!([1, 1, 1]));
    let bad = heckerep(&["rgon", "--u", "5,1,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("exceeds"));
}

#[test]
fn rgon_special_cross_checks_hecke() {
    let v = json(&["rgon", "special", "--type", "C2", "--a", "2,2,2"]);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["witness"]["factors"][0]["tree"]["legs"], serde_json::json!([1, 1, 1]));
}

#[test]
fn verify_writes_versioned_report() {
    let dir = std::env::temp_dir().join(format!("heckerep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let grid = dir.join("grid.toml");
    std::fs::write(
        &grid,
        "[[family]]\nlabel = \"GL3\"\ngenerators = [\"1,0,0\", \"1,1,0\"]\nmax_r = 3\nkind = \"minuscule\"\n\n\
         [[family]]\nlabel = \"C2\"\ngenerators = [\"1,0\", \"1,1\"]\nmax_r = 3\nkind = \"control\"\n",
    )
    .unwrap();
    let out = dir.join("report.json");
    let run = heckerep(&["verify", "equivalence", "--grid", grid.to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stdout));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["summary"]["fail"], 0);
    let reports = doc["reports"].as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] == "PASS"));
    let so5 = reports.iter().find(|r| r["instance"]["group"] == "C2" && r["instance"]["mus"] == serde_json::json!([[1, 1], [1, 1], [1, 1]]));
    let so5 = so5.expect("quasi-minuscule control present");
    assert_eq!(so5["evidence"]["equivalence_asserted"], false);
    assert!(so5["evidence"]["hecke_without_rep"].as_array().unwrap().contains(&serde_json::json!([0, 0])));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_fails_on_bad_grid() {
    let dir = std::env::temp_dir().join(format!("heckerep-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let grid = dir.join("grid.toml");
    std::fs::write(&grid, "[[family]]\nlabel = \"C2\"\ngenerators = [\"0,1\"]\nmax_r = 2\nkind = \"control\"\n").unwrap();
    let run = heckerep(&["verify", "audit", "--grid", grid.to_str().unwrap()]);
    assert!(!run.status.success());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_examples_and_table_pass() {
    for suite in ["examples", "table"] {
        let run = heckerep(&["verify", suite]);
        assert!(run.status.success(), "{suite}: {}", String::from_utf8_lossy(&run.stdout));
    }
}
