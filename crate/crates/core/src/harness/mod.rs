//! Batch verification: grids of instances, the checks run over them, and
//! machine-readable reports.

mod checks;
mod named;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use checks::{
    check_audit, check_engines, check_equivalence, check_saturation, check_weak_satake, prv_suite, random_prv_instances,
};
pub use named::{
    emit_allowed_table, normalization_gate, reproduce_so5, reproduce_spin12, rgon_suite, shipped_allowed_table, AllowedRow,
};

use crate::error::{Error, Result};
use crate::repring;
use crate::rootdata::{RootDatum, WeightVec};

/// Bumped whenever the JSON layout of [`CheckReport`] changes.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub instance: Value,
    pub status: Status,
    pub evidence: Value,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Run `body`, turning capability errors into SKIPPED and other errors into FAIL.
pub(crate) fn timed<F>(check_id: &str, instance: Value, body: F) -> CheckReport
where
    F: FnOnce() -> Result<(bool, Value)>,
{
    let start = Instant::now();
    let (status, evidence) = match body() {
        Ok((true, ev)) => (Status::Pass, ev),
        Ok((false, ev)) => (Status::Fail, ev),
        Err(Error::Capability(msg)) => (Status::Skipped, json!({ "reason": msg })),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    CheckReport { check_id: check_id.to_string(), instance, status, evidence, runtime_ms: start.elapsed().as_millis() as u64 }
}

/// Tally of a report list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize(reports: &[CheckReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Every generator is minuscule.
    Minuscule,
    /// Generators are sums of minuscules.
    Sums,
    /// Anything else; only one-way statements are asserted.
    Control,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Family {
    pub label: String,
    pub generators: Vec<String>,
    #[serde(default = "one")]
    pub min_r: usize,
    pub max_r: usize,
    pub kind: Kind,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Grid {
    pub family: Vec<Family>,
}

const DEFAULT_GRID: &str = include_str!("../../data/default_grid.toml");

impl Grid {
    pub fn parse(text: &str) -> Result<Grid> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The shipped grid: minuscule families of GL2..GL4, SO5/Sp4, rank 3
    /// types B/C and D4, plus sums-of-minuscules and control families.
    pub fn default_grid() -> Grid {
        Grid::parse(DEFAULT_GRID).expect("shipped grid parses")
    }

    /// Every instance, family by family, multisets in lexicographic order.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for fam in &self.family {
            let d = RootDatum::get(&fam.label)?;
            let gens: Vec<WeightVec> = fam.generators.iter().map(|g| d.parse_weight(g)).collect::<Result<_>>()?;
            for g in &gens {
                if !d.is_dominant(g) {
                    return Err(Error::Precondition(format!("generator {g} of {} is not dominant", fam.label)));
                }
            }
            for r in fam.min_r.max(1)..=fam.max_r {
                for combo in multisets(gens.len(), r) {
                    let mus: Vec<WeightVec> = combo.iter().map(|&i| gens[i].clone()).collect();
                    let key = (d.label().to_string(), mus.iter().map(|m| m.coords().to_vec()).collect::<Vec<_>>());
                    if seen.insert(key) {
                        out.push(Instance::new(d.clone(), mus, fam.kind)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Nondecreasing index tuples of length `r` over `0..n`.
fn multisets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, r, i, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

/// A list of dominant coweights of one datum.
#[derive(Clone, Debug)]
pub struct Instance {
    pub datum: Arc<RootDatum>,
    pub mus: Vec<WeightVec>,
    pub kind: Kind,
    /// Every `μ_i` is minuscule.
    pub all_minuscule: bool,
    /// Every `μ_i` is a sum of minuscules.
    pub sums_of_minuscules: bool,
}

impl Instance {
    pub fn new(datum: Arc<RootDatum>, mus: Vec<WeightVec>, kind: Kind) -> Result<Instance> {
        let mut all_minuscule = true;
        let mut sums = true;
        for m in &mus {
            all_minuscule &= datum.is_minuscule(m)?;
            sums &= datum.sum_of_minuscules_decomposition(m)?.is_some();
        }
        Ok(Instance { datum, mus, kind, all_minuscule, sums_of_minuscules: sums })
    }

    pub fn total(&self) -> Result<WeightVec> {
        WeightVec::sum(&self.mus)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.datum.label(),
            "mus": self.mus.iter().map(|m| m.coords().to_vec()).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_with(&self, lambda: &WeightVec) -> Value {
        let mut v = self.to_json();
        v["lambda"] = json!(lambda.coords());
        v
    }

    /// Dominant `λ ⪯ |μ•|` in the class of `|μ•|`: the dominant weights of `V_{|μ•|}`.
    pub fn targets(&self) -> Result<Vec<WeightVec>> {
        let ws = repring::weight_system(&self.datum, &self.total()?)?;
        ws.entries
            .keys()
            .filter(|k| self.datum.is_dominant_raw(k))
            .map(|k| self.datum.weight(k.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests;
