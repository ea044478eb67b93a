//! Checks over a grid of instances.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{timed, CheckReport, Instance, Kind};
use crate::error::Result;
use crate::rgon::{self, Coverage};
use crate::rootdata::WeightVec;
use crate::weyl::orbit;
use crate::{fiber, hecke, latoracle, repring};

fn coords(list: &[WeightVec]) -> Vec<Vec<i64>> {
    list.iter().map(|m| m.coords().to_vec()).collect()
}

/// Hecke constants against the fiber recursion (and, for `GL_n`, the lattice
/// oracle at `q = 2, 3`) on all-minuscule instances; sums-of-minuscules
/// instances are compared through the open-stratum subtraction instead.
pub fn check_engines(instances: &[Instance]) -> Vec<CheckReport> {
    instances
        .par_iter()
        .filter(|i| i.sums_of_minuscules && i.kind != Kind::Control)
        .map(|inst| {
            timed("engines", inst.to_json(), || {
                let d = &inst.datum;
                let consts = hecke::structure_constants(d, &inst.mus)?;
                let mut mismatches = Vec::new();
                let mut oracle_points = 0u64;
                for lam in inst.targets()? {
                    let h = consts.get(lam.coords()).cloned().unwrap_or_default();
                    let f = if inst.all_minuscule {
                        fiber::point_count_recursion(d, &inst.mus, &lam)?
                    } else {
                        fiber::open_stratum_constant(d, &inst.mus, &lam)?
                    };
                    if f != h {
                        mismatches.push(json!({ "lambda": lam.coords(), "hecke": h, "fiber": f }));
                        continue;
                    }
                    if inst.all_minuscule && latoracle::supports(d) {
                        for q in [2u8, 3] {
                            let count = latoracle::enumerate_fiber(d, &inst.mus, &lam, q, false)?.count;
                            oracle_points += 1;
                            if BigInt::from(count) != h.eval_i64(i64::from(q)) {
                                mismatches.push(json!({ "lambda": lam.coords(), "q": q, "hecke": h, "oracle": count }));
                            }
                        }
                    }
                }
                let ok = mismatches.is_empty();
                Ok((ok, json!({ "constants": consts.len(), "oracle_points": oracle_points, "mismatches": mismatches })))
            })
        })
        .collect()
}

/// Top components of the fiber, tensor multiplicities and the coefficient of
/// `c^λ` at degree `⟨ρ, |μ•| − λ⟩` all agree.
pub fn check_weak_satake(instances: &[Instance]) -> Vec<CheckReport> {
    instances
        .par_iter()
        .map(|inst| {
            timed("weak_satake", inst.to_json(), || {
                let d = &inst.datum;
                let tensor = repring::tensor_decompose(d, &inst.mus)?;
                let mut mismatches = Vec::new();
                let mut compared = 0;
                for lam in inst.targets()? {
                    let m = tensor.multiplicity(lam.coords());
                    let lead = hecke::leading_term_check(d, &inst.mus, &lam)?;
                    let comps = if inst.all_minuscule { Some(fiber::component_count_recursion(d, &inst.mus, &lam)?) } else { None };
                    compared += 1;
                    if !lead.pass || comps.is_some_and(|c| c != m) {
                        mismatches.push(json!({ "lambda": lam.coords(), "tensor": m, "components": comps, "leading": lead }));
                    }
                }
                let ok = mismatches.is_empty();
                Ok((ok, json!({ "targets": compared, "mismatches": mismatches })))
            })
        })
        .collect()
}

/// `Rep ⟺ Hecke` under the sums-of-minuscules hypothesis, `Rep ⟹ Hecke` always.
pub fn check_equivalence(instances: &[Instance]) -> Vec<CheckReport> {
    instances
        .par_iter()
        .map(|inst| {
            timed("equivalence", inst.to_json(), || {
                let d = &inst.datum;
                let rep: BTreeSet<Vec<i64>> = repring::tensor_decompose(d, &inst.mus)?.constituents.keys().cloned().collect();
                let hecke: BTreeSet<Vec<i64>> = hecke::structure_constants(d, &inst.mus)?.keys().cloned().collect();
                let rep_only: Vec<&Vec<i64>> = rep.difference(&hecke).collect();
                let hecke_only: Vec<&Vec<i64>> = hecke.difference(&rep).collect();
                let one_way = rep_only.is_empty();
                let asserted = inst.sums_of_minuscules;
                let ok = one_way && (!asserted || hecke_only.is_empty());
                Ok((
                    ok,
                    json!({
                        "equivalence_asserted": asserted,
                        "rep_support": rep.len(),
                        "hecke_support": hecke.len(),
                        "rep_without_hecke": rep_only,
                        "hecke_without_rep": hecke_only,
                    }),
                ))
            })
        })
        .collect()
}

/// The equidimensionality audit over every target of every all-minuscule instance.
pub fn check_audit(instances: &[Instance]) -> Vec<CheckReport> {
    instances
        .par_iter()
        .filter(|i| i.all_minuscule)
        .map(|inst| {
            timed("audit", inst.to_json(), || {
                let mut failing = Vec::new();
                let mut nodes = 0;
                let targets = inst.targets()?;
                for lam in &targets {
                    let rep = fiber::equidimensionality_audit(&inst.datum, &inst.mus, lam)?;
                    nodes += rep.nodes.len();
                    if !rep.pass {
                        failing.push(json!({ "lambda": lam.coords(), "report": rep }));
                    }
                }
                let ok = failing.is_empty();
                Ok((ok, json!({ "targets": targets.len(), "nodes": nodes, "failing": failing })))
            })
        })
        .collect()
}

fn coverage_label(c: Coverage) -> &'static str {
    match c {
        Coverage::TypeA => "type_a_k1",
        Coverage::AllowedNoD => "allowed_without_d",
        Coverage::AllowedWithD => "allowed_with_d",
        Coverage::ConjectureOnly => "conjecture_only",
    }
}

/// `Rep(Nμ•, 0) ⟹ Rep(μ•, 0)` for sums of minuscules with `Σμ` in the coroot lattice.
pub fn check_saturation(instances: &[Instance], scales: &[i64]) -> Vec<CheckReport> {
    instances
        .par_iter()
        .filter(|i| i.sums_of_minuscules && i.total().and_then(|t| i.datum.in_coroot_lattice(&t)).unwrap_or(false))
        .map(|inst| {
            timed("saturation", inst.to_json(), || {
                let d = &inst.datum;
                let base = repring::rep_nonvanishing(d, &inst.mus, &d.zero())?;
                let coverage = coverage_label(rgon::coverage(d, &inst.mus)?);
                let mut scaled = Vec::new();
                let mut ok = true;
                for &n in scales {
                    let mus: Vec<WeightVec> = inst.mus.iter().map(|m| m.scale(n)).collect();
                    let rep_n = repring::rep_nonvanishing(d, &mus, &d.zero())?;
                    ok &= !rep_n || base;
                    scaled.push(json!({ "n": n, "rep": rep_n }));
                }
                Ok((ok, json!({ "coverage": coverage, "rep": base, "scaled": scaled })))
            })
        })
        .collect()
}

/// A PRV instance: coweights and a target.
pub type PrvInstance = (Instance, WeightVec);

/// Random instances `λ = (Σ w_i μ_i)_dom` drawn from the grid, reproducible from `seed`.
pub fn random_prv_instances(instances: &[Instance], count: usize, seed: u64) -> Result<Vec<PrvInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if instances.is_empty() {
        return Ok(out);
    }
    while out.len() < count {
        let inst = &instances[rng.gen_range(0..instances.len())];
        let d = &inst.datum;
        let mut sum = d.zero();
        for m in &inst.mus {
            let orb = orbit(d, m)?;
            sum = sum.add(orb.choose(&mut rng).expect("nonempty orbit"))?;
        }
        let lam = d.dominant_representative(&sum);
        out.push((inst.clone(), lam));
    }
    Ok(out)
}

/// Where a PRV witness exists: `Hecke` always, `Rep` under the sums-of-minuscules hypothesis.
pub fn prv_suite(cases: &[PrvInstance]) -> Vec<CheckReport> {
    cases
        .par_iter()
        .map(|(inst, lam)| {
            timed("prv", inst.to_json_with(lam), || {
                let d = &inst.datum;
                let witness = repring::prv_witness_search(d, &inst.mus, lam, 1)?;
                let Some(w) = witness else {
                    return Ok((true, json!({ "witness": null })));
                };
                let hecke = hecke::hecke_nonvanishing(d, &inst.mus, lam)?;
                let rep = if inst.sums_of_minuscules { Some(repring::rep_nonvanishing(d, &inst.mus, lam)?) } else { None };
                let ok = hecke && rep.unwrap_or(true);
                let w: Vec<Value> = w.iter().map(|t| json!(coords(t))).collect();
                Ok((ok, json!({ "witness": w, "hecke": hecke, "rep": rep })))
            })
        })
        .collect()
}
