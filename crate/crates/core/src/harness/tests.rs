use super::*;

#[test]
fn default_grid_expands() {
    let grid = Grid::default_grid();
    let inst = grid.instances().unwrap();
    assert!(inst.len() > 100);
    assert!(inst.iter().any(|i| !i.sums_of_minuscules));
    assert!(inst.iter().filter(|i| i.datum.label() == "D4sc").all(|i| i.all_minuscule));
    // the C2 control family repeats the minuscule instances only once
    let c2: Vec<_> = inst.iter().filter(|i| i.datum.label() == "C2").collect();
    let keys: BTreeSet<_> = c2.iter().map(|i| i.to_json().to_string()).collect();
    assert_eq!(keys.len(), c2.len());
}

#[test]
fn grid_parse_errors() {
    assert!(matches!(Grid::parse("family = 3"), Err(Error::Parse(_))));
    let g = Grid::parse("[[family]]\nlabel = \"A1\"\ngenerators = [\"0,1\"]\nmax_r = 2\nkind = \"minuscule\"\n").unwrap();
    assert!(matches!(g.instances(), Err(Error::Precondition(_))));
}

#[test]
fn multiset_counts() {
    assert_eq!(multisets(3, 2).len(), 6);
    assert_eq!(multisets(2, 4).len(), 5);
    assert_eq!(multisets(1, 3), vec![vec![0, 0, 0]]);
}

fn small_grid() -> Vec<Instance> {
    Grid::parse(
        r#"
[[family]]
label = "GL3"
generators = ["1,0,0", "1,1,0"]
max_r = 3
kind = "minuscule"

[[family]]
label = "C2"
generators = ["1,0", "1,1"]
max_r = 3
kind = "control"
"#,
    )
    .unwrap()
    .instances()
    .unwrap()
}

#[test]
fn grid_checks_pass_on_a_small_grid() {
    let inst = small_grid();
    for reports in [
        check_engines(&inst),
        check_weak_satake(&inst),
        check_equivalence(&inst),
        check_audit(&inst),
        check_saturation(&inst, &[2, 3]),
    ] {
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.passed(), "{}", serde_json::to_string(r).unwrap());
        }
    }
}

#[test]
fn so5_control_breaks_only_the_converse() {
    let inst = small_grid();
    let reports = check_equivalence(&inst);
    let so5 = reports
        .iter()
        .find(|r| r.instance["group"] == "C2" && r.instance["mus"] == json!([[1, 1], [1, 1], [1, 1]]))
        .unwrap();
    assert!(so5.passed());
    assert_eq!(so5.evidence["equivalence_asserted"], json!(false));
    assert!(so5.evidence["hecke_without_rep"].as_array().unwrap().contains(&json!([0, 0])));
}

#[test]
fn prv_reports_are_reproducible() {
    let inst = small_grid();
    let a = random_prv_instances(&inst, 20, 11).unwrap();
    let b = random_prv_instances(&inst, 20, 11).unwrap();
    let ra = prv_suite(&a);
    let rb = prv_suite(&b);
    for (x, y) in ra.iter().zip(&rb) {
        assert!(x.passed());
        assert_eq!(x.instance, y.instance);
        assert_eq!(x.evidence, y.evidence);
    }
}

#[test]
fn named_checks() {
    assert!(normalization_gate().passed());
    let so5 = reproduce_so5();
    assert!(so5.passed(), "{:?}", so5.evidence);
    assert_eq!(so5.evidence["c_at_2"], json!("30"));
    let spin = reproduce_spin12();
    assert!(spin.passed(), "{:?}", spin.evidence);
    assert_eq!(spin.evidence["pairing_even"], json!(false));
    let (rows, report) = emit_allowed_table();
    assert!(report.passed(), "{:?}", report.evidence);
    let d5 = rows.iter().find(|r| r.group == "D5").unwrap();
    assert_eq!(d5.allowed, vec![1, 3]);
    let f4 = rows.iter().find(|r| r.group == "F4").unwrap();
    assert!(f4.allowed.is_empty() && f4.minuscule.is_empty());
}

#[test]
fn rgon_suite_passes() {
    for r in rgon_suite(200, 5) {
        assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
    }
}

#[test]
fn capability_errors_are_skips() {
    let r = timed("x", json!(null), || Err(Error::Capability("too big".into())));
    assert_eq!(r.status, Status::Skipped);
    let r = timed("x", json!(null), || Err(Error::Inconsistency("bug".into())));
    assert_eq!(r.status, Status::Fail);
    assert_eq!(summarize(&[r]), Summary { pass: 0, fail: 1, skipped: 0 });
}
