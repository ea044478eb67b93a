//! Spherical Hecke algebra structure constants `c^λ_{μ•}(q)`.
//!
//! Two independent computations are provided. [`IwahoriHecke`] multiplies
//! the expansions `1_{KμK} = Σ_{x ∈ W t_μ W} T_x` in the Iwahori–Hecke algebra
//! and divides the coefficient of `T_{t_λ}` by `P_W(q)^{r−1}`. [`SphericalModule`]
//! lets each spherical function act on `1_K` inside the module of `I`-invariant
//! functions on `G/K`, which is far cheaper. The default entry points use the
//! latter; tests check that both agree.

mod iwahori;
mod module;
pub mod qpoly;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

pub use iwahori::{HeckeElement, IwahoriHecke};
pub use module::SphericalModule;
pub use qpoly::QPoly;

use crate::error::{Error, Result};
use crate::repring;
use crate::rootdata::{RootDatum, WeightVec};

type Constants = Arc<BTreeMap<Vec<i64>, QPoly>>;

type Cache = Mutex<HashMap<(u64, Vec<Vec<i64>>), Constants>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_inputs(d: &RootDatum, mus: &[WeightVec]) -> Result<Vec<Vec<i64>>> {
    if mus.is_empty() {
        return Err(Error::Precondition("need at least one coweight".into()));
    }
    for m in mus {
        d.owns(m)?;
        if !d.is_dominant(m) {
            return Err(Error::Precondition(format!("{m} is not dominant")));
        }
    }
    Ok(mus.iter().map(|m| m.coords().to_vec()).collect())
}

/// All nonzero `c^λ_{μ•}(q)`, keyed by dominant `λ`. Results are memoized.
pub fn structure_constants(d: &Arc<RootDatum>, mus: &[WeightVec]) -> Result<Constants> {
    let raw = check_inputs(d, mus)?;
    let key = (d.id(), raw.clone());
    if let Some(c) = cache().lock().expect("hecke cache poisoned").get(&key) {
        return Ok(c.clone());
    }
    let mut module = SphericalModule::new(d.clone())?;
    let out = module.structure_constants(&raw)?;
    let total = raw.iter().fold(vec![0; d.rank()], |acc, m| acc.iter().zip(m).map(|(a, b)| a + b).collect());
    for lam in out.keys() {
        if !d.dominance_leq_raw(lam, &total) {
            return Err(Error::Inconsistency(format!("c^{lam:?} is nonzero but {lam:?} is not below {total:?}")));
        }
    }
    let out = Arc::new(out);
    cache().lock().expect("hecke cache poisoned").insert(key, out.clone());
    Ok(out)
}

/// The same constants from the Iwahori-level reference computation.
pub fn structure_constants_iwahori(d: &Arc<RootDatum>, mus: &[WeightVec]) -> Result<BTreeMap<Vec<i64>, QPoly>> {
    check_inputs(d, mus)?;
    IwahoriHecke::new(d.clone())?.structure_constants(mus)
}

/// `c^λ_{μ•}(q)`, zero when absent.
pub fn structure_constant(d: &Arc<RootDatum>, mus: &[WeightVec], lambda: &WeightVec) -> Result<QPoly> {
    d.owns(lambda)?;
    Ok(structure_constants(d, mus)?.get(lambda.coords()).cloned().unwrap_or_default())
}

fn check_class(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec) -> Result<()> {
    let raw: Vec<Vec<i64>> = mus.iter().map(|m| m.coords().to_vec()).collect();
    if !repring::same_class(d, &raw, lambda.coords()) {
        return Err(Error::Precondition(format!("|μ•| − {lambda} is not in the coroot lattice")));
    }
    Ok(())
}

/// `c^λ_{μ•}(q) ≠ 0`.
pub fn hecke_nonvanishing(d: &Arc<RootDatum>, mus: &[WeightVec], lambda: &WeightVec) -> Result<bool> {
    d.owns(lambda)?;
    check_class(d, mus, lambda)?;
    Ok(!structure_constant(d, mus, lambda)?.is_zero())
}

/// Comparison of `c^λ_{μ•}` with `dim V^λ_{μ•} q^{⟨ρ, |μ•| − λ⟩}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTermReport {
    pub constant: QPoly,
    pub degree: Option<u32>,
    pub bound: i64,
    pub coefficient_at_bound: String,
    pub rep_multiplicity: u64,
    pub pass: bool,
}

pub fn leading_term_check(d: &Arc<RootDatum>, mus: &[WeightVec], lambda: &WeightVec) -> Result<LeadingTermReport> {
    d.owns(lambda)?;
    check_class(d, mus, lambda)?;
    let c = structure_constant(d, mus, lambda)?;
    let total = WeightVec::sum(mus)?;
    let bound = d.rho_pairing(total.sub(lambda)?.coords())?;
    let dim = repring::tensor_decompose(d, mus)?.multiplicity(lambda.coords());
    let at_bound = if bound >= 0 { c.coeff(bound as u32) } else { BigInt::from(0) };
    let degree_ok = c.degree().is_none_or(|deg| i64::from(deg) <= bound);
    let pass = degree_ok && at_bound == BigInt::from(dim);
    Ok(LeadingTermReport {
        degree: c.degree(),
        constant: c,
        bound,
        coefficient_at_bound: at_bound.to_string(),
        rep_multiplicity: dim,
        pass,
    })
}

#[cfg(test)]
mod tests;
