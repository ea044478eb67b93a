use super::*;
use crate::hecke;

fn gl(n: usize) -> std::sync::Arc<RootDatum> {
    RootDatum::get(&format!("GL{n}")).unwrap()
}

fn ws(d: &RootDatum, list: &[&str]) -> Vec<WeightVec> {
    list.iter().map(|s| d.parse_weight(s).unwrap()).collect()
}

#[test]
fn gl2_counts() {
    let d = gl(2);
    let mus = ws(&d, &["1,0", "1,0"]);
    let l11 = d.parse_weight("1,1").unwrap();
    let l20 = d.parse_weight("2,0").unwrap();
    for (q, expected) in [(2u8, 3u64), (3, 4), (4, 5), (5, 6)] {
        assert_eq!(enumerate_fiber(&d, &mus, &l11, q, false).unwrap().count, expected);
        assert_eq!(enumerate_fiber(&d, &mus, &l20, q, false).unwrap().count, 1);
    }
    // forced middle lattice span(t e_1, e_2)
    let w = enumerate_fiber(&d, &mus, &l20, 2, true).unwrap().witnesses.unwrap();
    assert_eq!(w.len(), 1);
    let f = Field::new(2).unwrap();
    assert_eq!(witness_steps(&f, 2, &w[0]).unwrap(), vec![vec![1, 0], vec![1, 0]]);
    // above the Cartan bound
    assert_eq!(enumerate_fiber(&d, &mus, &d.parse_weight("3,-1").unwrap(), 2, false).unwrap().count, 0);
}

#[test]
fn central_twists_are_normalized() {
    let d = gl(2);
    let mus = ws(&d, &["2,1", "0,-1"]);
    assert_eq!(enumerate_fiber(&d, &mus, &d.parse_weight("2,0").unwrap(), 3, false).unwrap().count, 1);
    assert_eq!(enumerate_fiber(&d, &mus, &d.parse_weight("1,1").unwrap(), 3, false).unwrap().count, 4);
    assert_eq!(enumerate_fiber(&d, &mus, &d.parse_weight("1,0").unwrap(), 3, false).unwrap().count, 0);
}

#[test]
fn rejects_bad_inputs() {
    let d = gl(2);
    let lam = d.parse_weight("2,0").unwrap();
    let r = enumerate_fiber(&d, &ws(&d, &["2,0"]), &lam, 2, false);
    assert!(matches!(r, Err(Error::Precondition(_))));
    let r = enumerate_fiber(&d, &ws(&d, &["1,0", "1,0"]), &lam, 7, false);
    assert!(matches!(r, Err(Error::Capability(_))));
    let d5 = gl(5);
    let r = enumerate_fiber(&d5, &ws(&d5, &["1,0,0,0,0"]), &d5.parse_weight("1,0,0,0,0").unwrap(), 2, false);
    assert!(matches!(r, Err(Error::Capability(_))));
    let c2 = RootDatum::get("C2").unwrap();
    let r = enumerate_fiber(&c2, &ws(&c2, &["1,0"]), &c2.parse_weight("1,0").unwrap(), 2, false);
    assert!(matches!(r, Err(Error::Precondition(_))));
}

#[test]
fn interpolation() {
    let p = interpolate_polynomial(&[(2, BigInt::from(3)), (3, BigInt::from(4))], 1).unwrap();
    assert_eq!(p, QPoly::from_terms([(1, 1), (0, 1)]));
    let c = interpolate_polynomial(&[(2, BigInt::from(5)), (3, BigInt::from(5)), (4, BigInt::from(5))], 0).unwrap();
    assert_eq!(c, QPoly::constant(5));
    let bad = interpolate_polynomial(&[(2, BigInt::from(0)), (4, BigInt::from(1))], 1);
    assert!(matches!(bad, Err(Error::Inconsistency(_))));
    let short = interpolate_polynomial(&[(2, BigInt::from(1))], 1);
    assert!(matches!(short, Err(Error::Precondition(_))));
    let missed = interpolate_polynomial(&[(2, BigInt::from(3)), (3, BigInt::from(4)), (4, BigInt::from(6))], 1);
    assert!(matches!(missed, Err(Error::Inconsistency(_))));
}

#[test]
fn gl2_pipeline_matches_hecke() {
    let d = gl(2);
    let mus = ws(&d, &["1,0", "1,0"]);
    let lam = d.parse_weight("1,1").unwrap();
    let p = oracle_polynomial(&d, &mus, &lam, &[2, 3]).unwrap();
    assert_eq!(p, hecke::structure_constant(&d, &mus, &lam).unwrap());
}

#[test]
fn counts_match_hecke_on_gl3_and_gl4() {
    let cases: &[(usize, &[&str])] = &[
        (3, &["1,0,0", "1,0,0", "1,0,0"]),
        (3, &["1,1,0", "1,0,0", "1,1,0"]),
        (4, &["1,1,0,0", "1,1,0,0"]),
        (4, &["1,0,0,0", "1,1,1,0", "1,0,0,0"]),
    ];
    for &(n, list) in cases {
        let d = gl(n);
        let mus = ws(&d, list);
        let consts = hecke::structure_constants(&d, &mus).unwrap();
        for q in [2u8, 3] {
            let mut total = 0;
            for (lam, c) in consts.iter() {
                let lam = d.weight(lam.clone()).unwrap();
                let count = enumerate_fiber(&d, &mus, &lam, q, false).unwrap().count;
                assert_eq!(BigInt::from(count), c.eval_i64(i64::from(q)), "GL{n} {list:?} {lam} q={q}");
                total += 1;
            }
            assert!(total > 1);
        }
    }
}

#[test]
fn top_target_has_one_point_and_witnesses_have_the_right_steps() {
    let d = gl(3);
    let mus = ws(&d, &["1,1,0", "1,0,0", "1,0,0"]);
    let top = WeightVec::sum(&mus).unwrap();
    for q in [2u8, 3, 4, 5] {
        assert_eq!(enumerate_fiber(&d, &mus, &top, q, false).unwrap().count, 1);
    }
    let f = Field::new(3).unwrap();
    let lam = d.parse_weight("2,1,1").unwrap();
    let res = enumerate_fiber(&d, &mus, &lam, 3, true).unwrap();
    let w = res.witnesses.unwrap();
    assert_eq!(w.len() as u64, res.count);
    let expected: Vec<Vec<i64>> = mus.iter().map(|m| m.coords().to_vec()).collect();
    for chain in &w {
        assert_eq!(witness_steps(&f, 3, chain).unwrap(), expected);
    }
}

#[test]
fn witness_list_is_capped() {
    let d = gl(4);
    let mus = ws(&d, &["1,1,0,0", "1,1,0,0", "1,1,0,0", "1,1,0,0"]);
    let lam = d.parse_weight("2,2,2,2").unwrap();
    let res = enumerate_fiber(&d, &mus, &lam, 2, true).unwrap();
    assert!(res.count > WITNESS_CAP as u64);
    assert_eq!(res.witnesses.unwrap().len(), WITNESS_CAP);
}
