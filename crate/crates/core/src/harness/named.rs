//! Named examples, the allowed/minuscule table and the r-gon suite.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{timed, CheckReport};
use crate::error::{Error, Result};
use crate::hecke::{self, QPoly};
use crate::rootdata::{is_allowed_fundamental, is_minuscule_fundamental, CartanType, RootDatum, WeightVec};
use crate::{latoracle, repring, rgon};

fn weights(d: &RootDatum, list: &[&str]) -> Result<Vec<WeightVec>> {
    list.iter().map(|s| d.parse_weight(s)).collect()
}

/// `GL_2`, `μ• = ((1,0),(1,0))`: the Hecke constants must be `{(2,0): 1, (1,1): q + 1}`
/// and agree with lattice-chain counts at `q = 2, 3`.
pub fn normalization_gate() -> CheckReport {
    timed("normalization_gate", json!({ "group": "GL2", "mus": [[1, 0], [1, 0]] }), || {
        let d = RootDatum::get("GL2")?;
        let mus = weights(&d, &["1,0", "1,0"])?;
        let consts = hecke::structure_constants(&d, &mus)?;
        let expected = BTreeMap::from([(vec![2, 0], QPoly::one()), (vec![1, 1], QPoly::from_terms([(1, 1), (0, 1)]))]);
        let mut ok = *consts == expected;
        let mut oracle = Vec::new();
        for lam in [vec![2, 0], vec![1, 1]] {
            let l = d.weight(lam.clone())?;
            let counts: Vec<u64> =
                [2u8, 3].iter().map(|&q| latoracle::enumerate_fiber(&d, &mus, &l, q, false).map(|c| c.count)).collect::<Result<_>>()?;
            let poly = latoracle::oracle_polynomial(&d, &mus, &l, &[2, 3])?;
            ok &= consts.get(&lam) == Some(&poly);
            oracle.push(json!({ "lambda": lam, "counts": { "2": counts[0], "3": counts[1] }, "interpolated": poly }));
        }
        let hecke: BTreeMap<String, &QPoly> = consts.iter().map(|(k, v)| (format!("{k:?}"), v)).collect();
        Ok((ok, json!({ "hecke": hecke, "oracle": oracle })))
    })
}

/// `SO_5` with `μ_1 = μ_2 = μ_3 = (1,1)` and `λ = 0`: `c = q^5 − q` although the
/// invariant space is zero.
pub fn reproduce_so5() -> CheckReport {
    timed("reproduce_so5", json!({ "group": "C2", "mus": [[1, 1], [1, 1], [1, 1]], "lambda": [0, 0] }), || {
        let d = RootDatum::get("C2")?;
        let mus = weights(&d, &["1,1", "1,1", "1,1"])?;
        let report = hecke::leading_term_check(&d, &mus, &d.zero())?;
        let expected = QPoly::from_terms([(5, 1), (1, -1)]);
        let variant = hecke::structure_constant(&d, &mus, &d.parse_weight("1,1")?)?;
        let ok = report.constant == expected
            && report.rep_multiplicity == 0
            && report.degree == Some(5)
            && report.bound == 6
            && variant != expected;
        Ok((
            ok,
            json!({
                "c": report.constant,
                "dim": report.rep_multiplicity,
                "degree": report.degree,
                "bound": report.bound,
                "c_at_2": report.constant.eval_i64(2).to_string(),
                "variant_lambda_11": variant,
            }),
        ))
    })
}

/// `Spin(12)`: `⟨2ϖ_6, ϖ^∨_3⟩ = 3` is odd, yet `(V_{ϖ_6} ⊗ V_{ϖ_6})^{Spin12}` is a line.
pub fn reproduce_spin12() -> CheckReport {
    timed("reproduce_spin12", json!({ "group": "D6", "mus": ["w6", "w6"], "lambda": "0" }), || {
        let d = RootDatum::get("D6")?;
        let w6 = d.parse_weight("w6")?;
        let two = w6.scale(2);
        let pairing = d.dual_fundamental_pairing(3, &two)?;
        let in_root_lattice = d.in_coroot_lattice(&two)?;
        let invariants = repring::tensor_decompose(&d, &[w6.clone(), w6])?.multiplicity(&vec![0; d.rank()]);
        let ok = pairing == Ratio::from_integer(3) && in_root_lattice && invariants == 1;
        Ok((
            ok,
            json!({
                "pairing": pairing.to_string(),
                "pairing_even": pairing.is_integer() && pairing.to_integer() % 2 == 0,
                "sum_in_root_lattice": in_root_lattice,
                "invariants": invariants,
            }),
        ))
    })
}

/// One row of the allowed/minuscule table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllowedRow {
    pub group: String,
    pub allowed: Vec<usize>,
    pub minuscule: Vec<usize>,
}

const SHIPPED_TABLE: &str = include_str!("../../data/allowed_table.txt");

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split_whitespace().map(|t| t.parse().map_err(|_| Error::Parse(format!("bad index {t}")))).collect()
}

/// The table as shipped.
pub fn shipped_allowed_table() -> Result<Vec<AllowedRow>> {
    SHIPPED_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let cols: Vec<&str> = l.split('|').collect();
            if cols.len() != 3 {
                return Err(Error::Parse(format!("table row {l}")));
            }
            Ok(AllowedRow { group: cols[0].trim().to_string(), allowed: parse_indices(cols[1])?, minuscule: parse_indices(cols[2])? })
        })
        .collect()
}

/// Recompute every row from the root data predicates and diff against the shipped table.
pub fn emit_allowed_table() -> (Vec<AllowedRow>, CheckReport) {
    let mut computed = Vec::new();
    let report = timed("allowed_table", json!({ "types": "B2-B6, C2-C6, D4-D6, E6-E8, F4, G2" }), || {
        let shipped = shipped_allowed_table()?;
        let mut diffs = Vec::new();
        for row in &shipped {
            let h: CartanType = row.group.parse()?;
            let mut allowed = Vec::new();
            let mut minuscule = Vec::new();
            for i in 1..=h.rank {
                if is_allowed_fundamental(h, i)? {
                    allowed.push(i);
                }
                if is_minuscule_fundamental(h, i)? {
                    minuscule.push(i);
                }
            }
            let c = AllowedRow { group: row.group.clone(), allowed, minuscule };
            if &c != row {
                diffs.push(json!({ "shipped": row, "computed": c }));
            }
            computed.push(c);
        }
        let ok = diffs.is_empty();
        Ok((ok, json!({ "rows": computed, "diffs": diffs })))
    });
    (computed, report)
}

/// Random side lengths: admissible tuples must give valid witnesses and the
/// rest the right error; small allowed-multiple instances must have
/// nonvanishing Hecke constants at `λ = 0` whenever a special polygon exists.
pub fn rgon_suite(count: usize, seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(timed("rgon_trees", json!({ "count": count, "seed": seed, "r": "1..=8", "u": "0..=20" }), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut admissible, mut parity, mut triangle) = (0usize, 0usize, 0usize);
        let mut bad = Vec::new();
        while admissible < count {
            let r = rng.gen_range(1..=8);
            let u: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=20)).collect();
            let total: i64 = u.iter().sum();
            let breaks = u.iter().position(|&x| 2 * x > total);
            match (rgon::tree_rgon(&u), breaks) {
                (Ok(w), None) if total % 2 == 0 && w.verify() => admissible += 1,
                (Err(Error::Triangle { index, .. }), Some(i)) if index == i + 1 => triangle += 1,
                (Err(Error::Parity(s)), None) if s % 2 != 0 => parity += 1,
                (res, _) => bad.push(json!({ "u": u, "result": format!("{res:?}") })),
            }
        }
        let ok = bad.is_empty();
        Ok((ok, json!({ "admissible": admissible, "parity_errors": parity, "triangle_errors": triangle, "bad": bad })))
    }));
    let families: [(&str, &str, usize); 5] = [("C2", "1,0", 4), ("B3sc", "w3", 4), ("A1sc", "w1", 4), ("adj(A3)", "w2", 3), ("C3", "1,0,0", 3)];
    for (label, gen, max_r) in families {
        out.push(timed("rgon_special", json!({ "group": label, "generator": gen, "max_r": max_r, "a": "0..=2" }), || {
            let d = RootDatum::get(label)?;
            let g = d.parse_weight(gen)?;
            let mut built = 0;
            let mut refused = 0;
            let mut bad = Vec::new();
            for r in 2..=max_r {
                for a in tuples(r, 2) {
                    let mus: Vec<WeightVec> = a.iter().map(|&k| g.scale(k)).collect();
                    let choice = rgon::allowed_choice(&d, &mus)?;
                    match rgon::special_rgon(&d, &mus, &choice) {
                        Ok(w) => {
                            built += 1;
                            let nonzero = hecke::hecke_nonvanishing(&d, &mus, &d.zero())?;
                            if !nonzero || !w.factors.iter().all(|f| f.tree.verify()) {
                                bad.push(json!({ "a": a, "witness": w, "hecke": nonzero }));
                            }
                        }
                        Err(Error::Precondition(_) | Error::Parity(_) | Error::Triangle { .. }) => refused += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
            let ok = bad.is_empty() && built > 0;
            Ok((ok, json!({ "built": built, "refused": refused, "bad": bad })))
        }));
    }
    out
}

/// All tuples in `0..=max` of length `r`.
fn tuples(r: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|t| (0..=max).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}
