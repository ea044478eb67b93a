//! Stratifications of minuscule convolution fibers: the strata `Z_w`, the
//! point-count and top-component recursions, the equidimensionality audit and
//! the reduction of sums of minuscules to minuscule steps.
//!
//! Peeling the last step `μ_r` of a fiber over `t_λ` leaves strata indexed by
//! `ν = wμ ∈ Wμ` with `μ = μ_r^*`. The stratum is nonempty iff
//! `(λ+ν)_d ⪯ μ_1 + ⋯ + μ_{r−1}`, good iff `λ+ν` is dominant, and has dimension
//! `⟨ρ, μ + ν⟩`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{self, QPoly};
use crate::rootdata::{RootDatum, WeightVec};
use crate::weyl::{orbit_raw, ORBIT_BUDGET};

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sum_raw(rank: usize, list: &[Vec<i64>]) -> Vec<i64> {
    list.iter().fold(vec![0; rank], |acc, m| add(&acc, m))
}

/// One stratum of the last convolution step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumDescriptor {
    pub lambda: Vec<i64>,
    pub mu_tail: Vec<Vec<i64>>,
    /// `ν = wμ`, standing for the coset `wW_μ`.
    pub nu: Vec<i64>,
    pub nonempty: bool,
    pub good: bool,
    pub dimension: Option<i64>,
}

fn check_minuscule(d: &RootDatum, mus: &[WeightVec]) -> Result<Vec<Vec<i64>>> {
    for m in mus {
        d.owns(m)?;
        if !d.is_dominant(m) || !d.is_minuscule_raw(m.coords()) {
            return Err(Error::Precondition(format!("{m} is not a dominant minuscule coweight")));
        }
    }
    Ok(mus.iter().map(|m| m.coords().to_vec()).collect())
}

fn check_lambda(d: &RootDatum, lambda: &WeightVec) -> Result<()> {
    d.owns(lambda)?;
    if !d.is_dominant(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant")));
    }
    Ok(())
}

fn analyze_raw(d: &RootDatum, lambda: &[i64], mus: &[Vec<i64>], nu: &[i64]) -> Result<StratumDescriptor> {
    let (last, tail) = mus.split_last().ok_or_else(|| Error::Precondition("empty coweight list".into()))?;
    let mu = d.dual_raw(last);
    let x = add(lambda, nu);
    let nonempty = d.dominance_leq_raw(&d.dominant_raw(&x).0, &sum_raw(d.rank(), tail));
    let good = nonempty && d.is_dominant_raw(&x);
    let dimension = if nonempty { Some(d.rho_pairing(&add(&mu, nu))?) } else { None };
    Ok(StratumDescriptor { lambda: lambda.to_vec(), mu_tail: tail.to_vec(), nu: nu.to_vec(), nonempty, good, dimension })
}

/// Describe the stratum `ν = wμ` for the last step of `μ•` over `t_λ`.
pub fn stratum_analyze(d: &RootDatum, lambda: &WeightVec, mus: &[WeightVec], nu: &WeightVec) -> Result<StratumDescriptor> {
    check_lambda(d, lambda)?;
    let raw = check_minuscule(d, mus)?;
    d.owns(nu)?;
    let mu = d.dual_raw(raw.last().ok_or_else(|| Error::Precondition("empty coweight list".into()))?);
    if d.dominant_raw(nu.coords()).0 != mu {
        return Err(Error::Precondition(format!("{nu} is not in the orbit of {mu:?}")));
    }
    analyze_raw(d, lambda.coords(), &raw, nu.coords())
}

/// Strata of the last step, one per `ν ∈ Wμ`.
pub fn strata(d: &RootDatum, lambda: &WeightVec, mus: &[WeightVec]) -> Result<Vec<StratumDescriptor>> {
    check_lambda(d, lambda)?;
    let raw = check_minuscule(d, mus)?;
    strata_raw(d, lambda.coords(), &raw)
}

fn strata_raw(d: &RootDatum, lambda: &[i64], mus: &[Vec<i64>]) -> Result<Vec<StratumDescriptor>> {
    let mu = d.dual_raw(mus.last().expect("nonempty"));
    orbit_raw(d, &mu, ORBIT_BUDGET)?.iter().map(|nu| analyze_raw(d, lambda, mus, nu)).collect()
}

/// Whether `Z_{ν'}` lies in the closure of `Z_ν`: `w ≤ w'` for the minimal coset representatives.
pub fn closure_order(d: &RootDatum, a: &StratumDescriptor, b: &StratumDescriptor) -> Result<bool> {
    if !a.nonempty || !b.nonempty {
        return Err(Error::Precondition("closure order needs nonempty strata".into()));
    }
    if a.lambda != b.lambda || a.mu_tail != b.mu_tail {
        return Err(Error::Precondition("strata belong to different fibers".into()));
    }
    let g = d.weyl()?;
    let mu = d.dominant_raw(&a.nu).0;
    let w = g.minimal_transporter(&mu, &a.nu).expect("orbit element");
    let w2 = g.minimal_transporter(&mu, &b.nu).expect("orbit element");
    Ok(g.bruhat_leq(w, w2))
}

struct Recursion<'a> {
    d: &'a RootDatum,
    duals_orbits: Vec<Vec<Vec<i64>>>,
    duals: Vec<Vec<i64>>,
    partial: Vec<Vec<i64>>,
}

impl<'a> Recursion<'a> {
    fn new(d: &'a RootDatum, mus: Vec<Vec<i64>>) -> Result<Self> {
        let duals: Vec<Vec<i64>> = mus.iter().map(|m| d.dual_raw(m)).collect();
        let duals_orbits = duals.iter().map(|m| orbit_raw(d, m, ORBIT_BUDGET)).collect::<Result<_>>()?;
        let mut partial = vec![vec![0; d.rank()]];
        for m in &mus {
            let next = add(partial.last().unwrap(), m);
            partial.push(next);
        }
        Ok(Recursion { d, duals_orbits, duals, partial })
    }

    /// Nonempty strata `(ν, (λ+ν)_d, λ+ν dominant)` when peeling step `k` (1-based) over `λ`.
    fn children(&self, k: usize, lambda: &[i64]) -> Vec<(Vec<i64>, Vec<i64>, bool)> {
        self.duals_orbits[k - 1]
            .iter()
            .filter_map(|nu| {
                let x = add(lambda, nu);
                let dom = self.d.dominant_raw(&x).0;
                self.d.dominance_leq_raw(&dom, &self.partial[k - 1]).then(|| (nu.clone(), dom, x == self.d.dominant_raw(&x).0))
            })
            .collect()
    }

    fn points(&self, k: usize, lambda: &[i64], memo: &mut HashMap<(usize, Vec<i64>), QPoly>) -> Result<QPoly> {
        if k == 0 {
            return Ok(if lambda.iter().all(|&x| x == 0) { QPoly::one() } else { QPoly::zero() });
        }
        if let Some(p) = memo.get(&(k, lambda.to_vec())) {
            return Ok(p.clone());
        }
        let mut total = QPoly::zero();
        for (nu, dom, _) in self.children(k, lambda) {
            let e = self.d.rho_pairing(&add(&self.duals[k - 1], &nu))?;
            if e < 0 {
                return Err(Error::Inconsistency(format!("negative stratum dimension {e}")));
            }
            total += &self.points(k - 1, &dom, memo)?.shift(e as u32);
        }
        memo.insert((k, lambda.to_vec()), total.clone());
        Ok(total)
    }

    fn components(&self, k: usize, lambda: &[i64], memo: &mut HashMap<(usize, Vec<i64>), u64>) -> u64 {
        if k == 0 {
            return u64::from(lambda.iter().all(|&x| x == 0));
        }
        if let Some(&n) = memo.get(&(k, lambda.to_vec())) {
            return n;
        }
        let n = self
            .children(k, lambda)
            .into_iter()
            .filter(|c| c.2)
            .map(|(_, dom, _)| self.components(k - 1, &dom, memo))
            .sum();
        memo.insert((k, lambda.to_vec()), n);
        n
    }
}

/// Point count of the fiber over `t_λ` as a polynomial in `q`.
pub fn point_count_recursion(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec) -> Result<QPoly> {
    check_lambda(d, lambda)?;
    let raw = check_minuscule(d, mus)?;
    let r = raw.len();
    Recursion::new(d, raw)?.points(r, lambda.coords(), &mut HashMap::new())
}

/// Number of top-dimensional components of the fiber over `t_λ`.
pub fn component_count_recursion(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec) -> Result<u64> {
    check_lambda(d, lambda)?;
    let raw = check_minuscule(d, mus)?;
    let r = raw.len();
    Ok(Recursion::new(d, raw)?.components(r, lambda.coords(), &mut HashMap::new()))
}

/// Result of checking one bad stratum.
#[derive(Clone, Debug, Serialize)]
pub struct AuditStratum {
    pub nu: Vec<i64>,
    pub good: bool,
    pub dimension: i64,
    /// For a bad stratum: the minimal double coset representative applied to `μ`.
    pub dominated_by: Option<Vec<i64>>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditNode {
    /// Number of steps still to peel.
    pub steps: usize,
    pub lambda: Vec<i64>,
    pub strata: Vec<AuditStratum>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub pass: bool,
    pub nodes: Vec<AuditNode>,
}

/// Walk the recursion tree and check that each nonempty bad stratum `w` has a
/// good stratum `w* ≤ w` in its `W_λ w W_μ` double coset.
pub fn equidimensionality_audit(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec) -> Result<AuditReport> {
    check_lambda(d, lambda)?;
    let raw = check_minuscule(d, mus)?;
    let g = d.weyl()?;
    let rec = Recursion::new(d, raw.clone())?;
    let mut nodes = Vec::new();
    let mut pass = true;
    let mut seen = std::collections::HashSet::new();
    let total = sum_raw(d.rank(), &raw);
    let mut stack = Vec::new();
    if d.dominance_leq_raw(lambda.coords(), &total) {
        stack.push((raw.len(), lambda.coords().to_vec()));
    }
    while let Some((k, lam)) = stack.pop() {
        if k == 0 || !seen.insert((k, lam.clone())) {
            continue;
        }
        let mu = &rec.duals[k - 1];
        let children = rec.children(k, &lam);
        let good_set: std::collections::HashSet<&Vec<i64>> = children.iter().filter(|c| c.2).map(|c| &c.0).collect();
        let mut strata = Vec::new();
        for (nu, dom, good) in &children {
            let dimension = d.rho_pairing(&add(mu, nu))?;
            let (dominated_by, ok) = if *good {
                (None, true)
            } else {
                let w = g.minimal_transporter(mu, nu).expect("orbit element");
                let star = g.minimal_double_coset_rep(w, &lam, mu);
                let nu_star = g.act_raw(star, mu);
                let ok = g.bruhat_leq(star, w) && good_set.contains(&nu_star);
                (Some(nu_star), ok)
            };
            pass &= ok;
            strata.push(AuditStratum { nu: nu.clone(), good: *good, dimension, dominated_by, pass: ok });
            stack.push((k - 1, dom.clone()));
        }
        nodes.push(AuditNode { steps: k, lambda: lam, strata });
    }
    nodes.sort_by(|a, b| b.steps.cmp(&a.steps).then(a.lambda.cmp(&b.lambda)));
    Ok(AuditReport { pass, nodes })
}

/// Refinement of a list of sums of minuscules into minuscule steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PulledApart {
    pub refined: Vec<WeightVec>,
    /// `groups[i]` lists the refined steps coming from `μ_i`.
    pub groups: Vec<Vec<WeightVec>>,
}

/// Replace each `μ_i` by the minuscule pieces of its decomposition.
pub fn pulling_apart(d: &RootDatum, mus: &[WeightVec]) -> Result<PulledApart> {
    let mut groups = Vec::new();
    for m in mus {
        let dec = d
            .sum_of_minuscules_decomposition(m)?
            .ok_or_else(|| Error::NoDecomposition(m.to_string()))?;
        let mut group = Vec::new();
        for (v, k) in dec {
            for _ in 0..k {
                group.push(v.clone());
            }
        }
        if group.is_empty() {
            group.push(d.zero());
        }
        groups.push(group);
    }
    Ok(PulledApart { refined: groups.concat(), groups })
}

/// `c^λ_{μ•}` recovered from the minuscule refinement: the refined point count
/// minus the contributions of the smaller strata `μ'• ≠ μ•`.
pub fn open_stratum_constant(d: &Arc<RootDatum>, mus: &[WeightVec], lambda: &WeightVec) -> Result<QPoly> {
    let pa = pulling_apart(d, mus)?;
    let mut total = point_count_recursion(d, &pa.refined, lambda)?;
    // c^{μ'_i}_{ν_{i•}} for each group
    let pieces: Vec<Arc<BTreeMap<Vec<i64>, QPoly>>> =
        pa.groups.iter().map(|g| hecke::structure_constants(d, g)).collect::<Result<_>>()?;
    let target: Vec<Vec<i64>> = mus.iter().map(|m| m.coords().to_vec()).collect();
    let mut choice: Vec<(Vec<i64>, QPoly)> = Vec::new();
    subtract_lower(d, &pieces, &target, lambda, &mut choice, &mut total)?;
    Ok(total)
}

fn subtract_lower(
    d: &Arc<RootDatum>,
    pieces: &[Arc<BTreeMap<Vec<i64>, QPoly>>],
    target: &[Vec<i64>],
    lambda: &WeightVec,
    choice: &mut Vec<(Vec<i64>, QPoly)>,
    total: &mut QPoly,
) -> Result<()> {
    let i = choice.len();
    if i == pieces.len() {
        let lower: Vec<Vec<i64>> = choice.iter().map(|c| c.0.clone()).collect();
        if lower == target {
            return Ok(());
        }
        let weights = lower.iter().map(|c| d.weight(c.clone())).collect::<Result<Vec<_>>>()?;
        let c = hecke::structure_constant(d, &weights, lambda)?;
        let coeff = choice.iter().fold(QPoly::one(), |acc, x| &acc * &x.1);
        *total = &*total - &(&coeff * &c);
        return Ok(());
    }
    for (mu, c) in pieces[i].iter() {
        choice.push((mu.clone(), c.clone()));
        subtract_lower(d, pieces, target, lambda, choice, total)?;
        choice.pop();
    }
    Ok(())
}
