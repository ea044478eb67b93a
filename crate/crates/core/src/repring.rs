//! Representation ring of the dual group: weight multiplicities (Freudenthal),
//! tensor products (Brauer–Klimyk), Weyl dimensions and PRV witnesses.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootdata::{dot, RootDatum, WeightVec};
use crate::weyl::orbit_raw;

/// Cap on the number of distinct weights of one representation.
pub const WEIGHT_BUDGET: usize = 400_000;

/// Weights of an irreducible representation with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiset {
    pub fn mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, v: &[i64]) -> u64 {
        self.entries.get(v).copied().unwrap_or(0)
    }
}

/// Multiplicities `dim V^λ_{μ•}` keyed by dominant `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorDecomposition {
    pub constituents: BTreeMap<Vec<i64>, u64>,
}

impl TensorDecomposition {
    pub fn multiplicity(&self, lambda: &[i64]) -> u64 {
        self.constituents.get(lambda).copied().unwrap_or(0)
    }
}

impl Serialize for TensorDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.constituents.len()))?;
        for (k, v) in &self.constituents {
            m.serialize_entry(&serde_json::to_string(k).expect("integer list"), v)?;
        }
        m.end()
    }
}

fn check_dominant(d: &RootDatum, v: &WeightVec) -> Result<()> {
    d.owns(v)?;
    if !d.is_dominant(v) {
        return Err(Error::Precondition(format!("{v} is not dominant")));
    }
    Ok(())
}

/// `∏_{α>0} ⟨α, μ+ρ⟩ / ⟨α, ρ⟩`.
pub fn weyl_dimension(d: &RootDatum, mu: &WeightVec) -> Result<u128> {
    check_dominant(d, mu)?;
    Ok(weyl_dimension_raw(d, mu.coords()))
}

pub(crate) fn weyl_dimension_raw(d: &RootDatum, mu: &[i64]) -> u128 {
    let shifted: Vec<i64> = mu.iter().zip(d.two_rho_vee()).map(|(m, r)| 2 * m + r).collect();
    let mut acc = BigRational::one();
    for a in d.roots() {
        acc *= BigRational::new(BigInt::from(dot(a, &shifted)), BigInt::from(dot(a, d.two_rho_vee())));
    }
    assert!(acc.is_integer(), "Weyl dimension is not integral");
    acc.to_integer().to_u128().expect("dimension fits in u128")
}

/// Form `B(x, y) = Σ_{α ∈ R} ⟨α, x⟩⟨α, y⟩`, invariant under `W`.
fn form(d: &RootDatum, x: &[i64], y: &[i64]) -> i128 {
    d.roots().iter().map(|a| 2 * dot(a, x) as i128 * dot(a, y) as i128).sum()
}

/// Multiplicities of the dominant weights of `V_μ`.
pub(crate) fn dominant_multiplicities(d: &RootDatum, mu: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    // dominant weights below μ: subtract positive coroots while staying dominant
    let mut dominant: HashSet<Vec<i64>> = HashSet::from([mu.to_vec()]);
    let mut stack = vec![mu.to_vec()];
    while let Some(x) = stack.pop() {
        for c in d.coroots() {
            let y: Vec<i64> = x.iter().zip(c).map(|(a, b)| a - b).collect();
            if d.is_dominant_raw(&y) && !dominant.contains(&y) {
                dominant.insert(y.clone());
                if dominant.len() > WEIGHT_BUDGET {
                    return Err(Error::Capability(format!("weight system of {mu:?} is too large")));
                }
                stack.push(y);
            }
        }
    }
    let mut order: Vec<Vec<i64>> = dominant.into_iter().collect();
    order.sort_by_key(|v| (-dot(d.two_rho(), v), v.clone()));
    let rho2 = d.two_rho_vee();
    let norm = |v: &[i64]| {
        let s: Vec<i64> = v.iter().zip(rho2).map(|(a, r)| 2 * a + r).collect();
        form(d, &s, &s)
    };
    let top = norm(mu);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::from([(mu.to_vec(), 1)]);
    for nu in order.iter().skip(1) {
        let mut num: i128 = 0;
        for c in d.coroots() {
            let mut k = 1;
            loop {
                let x: Vec<i64> = nu.iter().zip(c).map(|(a, b)| a + k * b).collect();
                let dom = d.dominant_raw(&x).0;
                match mult.get(&dom) {
                    Some(&m) => num += m as i128 * form(d, &x, c),
                    None => break,
                }
                k += 1;
            }
        }
        let den = top - norm(nu);
        let num = 8 * num;
        if den <= 0 || num % den != 0 {
            return Err(Error::Inconsistency(format!("Freudenthal step at {nu:?} is not integral")));
        }
        let m = num / den;
        if m > 0 {
            mult.insert(nu.clone(), m as u64);
        }
    }
    Ok(mult.into_iter().collect())
}

/// All weights of `V_μ` with multiplicities.
pub fn weight_system(d: &RootDatum, mu: &WeightVec) -> Result<WeightMultiset> {
    check_dominant(d, mu)?;
    weight_system_raw(d, mu.coords())
}

pub(crate) fn weight_system_raw(d: &RootDatum, mu: &[i64]) -> Result<WeightMultiset> {
    let mut entries = BTreeMap::new();
    for (nu, m) in dominant_multiplicities(d, mu)? {
        for x in orbit_raw(d, &nu, WEIGHT_BUDGET)? {
            entries.insert(x, m);
        }
        if entries.len() > WEIGHT_BUDGET {
            return Err(Error::Capability(format!("weight system of {mu:?} is too large")));
        }
    }
    Ok(WeightMultiset { entries })
}

/// `V_λ ⊗ V_μ` by the ρ-shifted reflection rule; terms on a wall vanish.
fn klimyk_step(
    d: &RootDatum,
    current: &BTreeMap<Vec<i64>, i64>,
    weights: &WeightMultiset,
) -> BTreeMap<Vec<i64>, i64> {
    let rho2 = d.two_rho_vee();
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (lam, &c) in current {
        for (nu, &m) in &weights.entries {
            let x: Vec<i64> = lam.iter().zip(nu).zip(rho2).map(|((a, b), r)| 2 * (a + b) + r).collect();
            let (dom, word) = d.dominant_raw(&x);
            if d.labels(&dom).contains(&0) {
                continue;
            }
            let sign = if word.len() % 2 == 0 { 1 } else { -1 };
            let key: Vec<i64> = dom
                .iter()
                .zip(rho2)
                .map(|(a, r)| {
                    debug_assert_eq!((a - r) % 2, 0);
                    (a - r) / 2
                })
                .collect();
            *out.entry(key).or_insert(0) += sign * c * m as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `V_{μ_1} ⊗ ⋯ ⊗ V_{μ_r}`, folded from the left.
pub fn tensor_decompose(d: &RootDatum, mus: &[WeightVec]) -> Result<TensorDecomposition> {
    for m in mus {
        check_dominant(d, m)?;
    }
    let raw: Vec<Vec<i64>> = mus.iter().map(|m| m.coords().to_vec()).collect();
    tensor_decompose_raw(d, &raw)
}

pub(crate) fn tensor_decompose_raw(d: &RootDatum, mus: &[Vec<i64>]) -> Result<TensorDecomposition> {
    let Some((first, rest)) = mus.split_first() else {
        return Ok(TensorDecomposition { constituents: BTreeMap::from([(vec![0; d.rank()], 1)]) });
    };
    let mut cache: HashMap<&Vec<i64>, WeightMultiset> = HashMap::new();
    let mut current: BTreeMap<Vec<i64>, i64> = BTreeMap::from([(first.clone(), 1)]);
    for mu in rest {
        if !cache.contains_key(mu) {
            cache.insert(mu, weight_system_raw(d, mu)?);
        }
        current = klimyk_step(d, &current, &cache[mu]);
    }
    let mut constituents = BTreeMap::new();
    for (k, v) in current {
        if v < 0 {
            return Err(Error::Inconsistency(format!("negative multiplicity {v} at {k:?}")));
        }
        constituents.insert(k, v as u64);
    }
    Ok(TensorDecomposition { constituents })
}

/// Whether `|μ•| − λ` lies in the coroot lattice.
pub(crate) fn same_class(d: &RootDatum, mus: &[Vec<i64>], lambda: &[i64]) -> bool {
    let mut diff = lambda.iter().map(|x| -x).collect::<Vec<i64>>();
    for m in mus {
        for (a, b) in diff.iter_mut().zip(m) {
            *a += b;
        }
    }
    d.in_coroot_lattice_raw(&diff)
}

/// `dim V^λ_{μ•} > 0`.
pub fn rep_nonvanishing(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec) -> Result<bool> {
    check_dominant(d, lambda)?;
    let raw: Vec<Vec<i64>> = mus.iter().map(|m| m.coords().to_vec()).collect();
    if !same_class(d, &raw, lambda.coords()) {
        return Ok(false);
    }
    Ok(tensor_decompose(d, mus)?.multiplicity(lambda.coords()) > 0)
}

/// Tuples `(ν_1, …, ν_r)` with `ν_i ∈ Wμ_i` and `Σ ν_i = λ`, at most `cap` of them.
pub fn prv_witness_search(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec, cap: usize) -> Result<Option<Vec<Vec<WeightVec>>>> {
    check_dominant(d, lambda)?;
    for m in mus {
        d.owns(m)?;
    }
    if mus.is_empty() {
        return Ok(lambda.is_zero().then(Vec::new));
    }
    let orbits: Vec<Vec<Vec<i64>>> =
        mus.iter().map(|m| orbit_raw(d, m.coords(), crate::weyl::ORBIT_BUDGET)).collect::<Result<_>>()?;
    let last: HashSet<&Vec<i64>> = orbits.last().unwrap().iter().collect();
    let mut found = Vec::new();
    let mut partial = Vec::new();
    search(&orbits, &last, lambda.coords().to_vec(), &mut partial, &mut found, cap);
    if found.is_empty() {
        return Ok(None);
    }
    Ok(Some(found.into_iter().map(|t| t.into_iter().map(|c| d.wrap(c)).collect()).collect()))
}

fn search(
    orbits: &[Vec<Vec<i64>>],
    last: &HashSet<&Vec<i64>>,
    rest: Vec<i64>,
    partial: &mut Vec<Vec<i64>>,
    found: &mut Vec<Vec<Vec<i64>>>,
    cap: usize,
) {
    if found.len() >= cap {
        return;
    }
    let i = partial.len();
    if i + 1 == orbits.len() {
        if last.contains(&rest) {
            let mut t = partial.clone();
            t.push(rest);
            found.push(t);
        }
        return;
    }
    for nu in &orbits[i] {
        let r: Vec<i64> = rest.iter().zip(nu).map(|(a, b)| a - b).collect();
        partial.push(nu.clone());
        search(orbits, last, r, partial, found, cap);
        partial.pop();
    }
}

/// Transport an instance to the simply connected form of the dual group.
pub fn rep_to_simply_connected(
    d: &RootDatum,
    mus: &[WeightVec],
    lambda: &WeightVec,
) -> Result<(Arc<RootDatum>, Vec<WeightVec>, WeightVec)> {
    let sc = d.simply_connected()?;
    let m = mus.iter().map(|m| d.to_simply_connected(m)).collect::<Result<Vec<_>>>()?;
    Ok((sc, m, d.to_simply_connected(lambda)?))
}
