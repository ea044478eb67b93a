//! Closed polygons with special vertices, built by reduction to the tree of
//! `PGL_2`, and the adjoint-reduction and saturation predicates around them.
//!
//! Witnesses are integer certificates only. The tree is never built.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke;
use crate::rootdata::{is_allowed_fundamental, is_minuscule_fundamental, CartanType, Family, RootDatum, WeightVec};

/// A closed polygon in the tree with sides `u`, split into three runs
/// `A = u_1 + ⋯ + u_l`, `B = u_{l+1} + ⋯ + u_m`, `C = u_{m+1} + ⋯ + u_r` and
/// realized on a tripod with legs `legs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeWitness {
    pub sides: Vec<i64>,
    pub l: usize,
    pub m: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub legs: [i64; 3],
}

impl TreeWitness {
    /// Recheck every invariant of the certificate.
    pub fn verify(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        let r = self.sides.len();
        let runs_ok = self.l <= self.m
            && self.m <= r
            && self.sides[..self.l].iter().sum::<i64>() == a
            && self.sides[self.l..self.m].iter().sum::<i64>() == b
            && self.sides[self.m..].iter().sum::<i64>() == c;
        let [l1, l2, l3] = self.legs;
        runs_ok
            && (a + b + c) % 2 == 0
            && a <= b + c
            && b <= a + c
            && c <= a + b
            && 2 * l1 == a + b - c
            && 2 * l2 == b + c - a
            && 2 * l3 == a + c - b
            && self.legs.iter().all(|&x| x >= 0)
            && l1 + l2 == b
            && l1 + l3 == a
            && l2 + l3 == c
    }
}

/// A special polygon in the tree with the given side lengths.
pub fn tree_rgon(u: &[i64]) -> Result<TreeWitness> {
    if let Some(&x) = u.iter().find(|&&x| x < 0) {
        return Err(Error::Precondition(format!("negative side length {x}")));
    }
    let total: i64 = u.iter().sum();
    for (i, &x) in u.iter().enumerate() {
        if x > total - x {
            return Err(Error::Triangle { index: i + 1, side: x, rest: total - x });
        }
    }
    if total % 2 != 0 {
        return Err(Error::Parity(total));
    }
    let r = u.len();
    // the largest l with u_1 + ⋯ + u_l ≤ Σ/2
    let mut prefix = 0;
    let mut l = 0;
    for (i, &x) in u.iter().enumerate() {
        prefix += x;
        if 2 * prefix <= total {
            l = i + 1;
        }
    }
    if l == r {
        // only when every side is zero
        l = r.saturating_sub(1);
    }
    let m = (l + 1).min(r);
    let a: i64 = u[..l].iter().sum();
    let b: i64 = u[l..m].iter().sum();
    let c: i64 = u[m..].iter().sum();
    let w = TreeWitness { sides: u.to_vec(), l, m, a, b, c, legs: [(a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2] };
    if !w.verify() {
        return Err(Error::Inconsistency(format!("tree polygon for {u:?} fails its invariants")));
    }
    Ok(w)
}

/// `μ_i* ⪯ Σ_{j≠i} μ_j` for every `i`, compared in the adjoint quotient so
/// central parts do not matter.
pub fn weak_triangle_check(d: &RootDatum, mus: &[WeightVec]) -> Result<bool> {
    for m in mus {
        d.owns(m)?;
        if !d.is_dominant(m) {
            return Err(Error::Precondition(format!("{m} is not dominant")));
        }
    }
    let ad = d.simply_connected()?;
    let bars: Vec<WeightVec> = mus.iter().map(|m| d.to_simply_connected(m)).collect::<Result<_>>()?;
    for i in 0..bars.len() {
        let rest: Vec<WeightVec> = bars.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, w)| w.clone()).collect();
        let rest = if rest.is_empty() { ad.zero() } else { WeightVec::sum(&rest)? };
        if !ad.dominance_leq(&ad.dual_coweight(&bars[i])?, &rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-factor data of a special polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRGon {
    /// Type of the adjoint simple factor `H`.
    pub factor: String,
    /// The allowed `ϖ^∨_i` used (1-based), absent when every projection vanishes
    /// and the factor has none.
    pub allowed: Option<usize>,
    pub tree: TreeWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RGonWitness {
    pub factors: Vec<FactorRGon>,
}

/// Adjoint simple factors `H` of `G`, in the datum's order.
fn adjoint_types(d: &RootDatum) -> Vec<CartanType> {
    d.factors().iter().map(|f| f.ctype().dual()).collect()
}

/// Coefficients `a_i` with `μ̄_{i,H} = a_i ϖ^∨_k`, or `None` if some projection
/// is not a multiple of `ϖ^∨_k`.
fn multiples(projections: &[Vec<i64>], k: usize) -> Option<Vec<i64>> {
    projections
        .iter()
        .map(|p| {
            let others_zero = p.iter().enumerate().all(|(j, &x)| j + 1 == k || x == 0);
            (others_zero && p[k - 1] >= 0).then(|| p[k - 1])
        })
        .collect()
}

/// Per-factor projections `μ̄_{i,H}` in fundamental-coweight coordinates.
fn factor_projections(d: &RootDatum, mus: &[WeightVec]) -> Result<Vec<Vec<Vec<i64>>>> {
    let per_mu: Vec<Vec<WeightVec>> = mus.iter().map(|m| d.project_to_adjoint(m)).collect::<Result<_>>()?;
    Ok((0..d.factors().len()).map(|f| per_mu.iter().map(|p| p[f].coords().to_vec()).collect()).collect())
}

/// For each factor, an allowed coweight of which every projection is a multiple.
pub fn allowed_choice(d: &RootDatum, mus: &[WeightVec]) -> Result<Vec<Option<usize>>> {
    let projs = factor_projections(d, mus)?;
    let mut out = Vec::new();
    for (h, p) in adjoint_types(d).into_iter().zip(&projs) {
        let mut pick = None;
        let mut first_allowed = None;
        for k in 1..=h.rank {
            if !is_allowed_fundamental(h, k)? {
                continue;
            }
            first_allowed.get_or_insert(k);
            if multiples(p, k).is_some_and(|a| a.iter().any(|&x| x > 0)) {
                pick = Some(k);
                break;
            }
        }
        let all_zero = p.iter().all(|v| v.iter().all(|&x| x == 0));
        match (pick, all_zero) {
            (Some(k), _) => out.push(Some(k)),
            (None, true) => out.push(first_allowed),
            (None, false) => {
                return Err(Error::NoDecomposition(format!("projections {p:?} to the {h} factor are not multiples of one allowed coweight")))
            }
        }
    }
    Ok(out)
}

/// A special polygon with sides `μ•`, factor by factor.
pub fn special_rgon(d: &RootDatum, mus: &[WeightVec], allowed: &[Option<usize>]) -> Result<RGonWitness> {
    let types = adjoint_types(d);
    if allowed.len() != types.len() {
        return Err(Error::Precondition(format!("need one allowed coweight per factor ({})", types.len())));
    }
    let total = WeightVec::sum(mus)?;
    if !d.in_coroot_lattice(&total)? {
        return Err(Error::Precondition(format!("Σμ = {total} is not in the coroot lattice")));
    }
    if !weak_triangle_check(d, mus)? {
        return Err(Error::Precondition("weak triangle inequalities fail".into()));
    }
    let projs = factor_projections(d, mus)?;
    let mut factors = Vec::new();
    for ((h, p), &choice) in types.into_iter().zip(&projs).zip(allowed) {
        let sides = match choice {
            Some(k) => {
                if k == 0 || k > h.rank || !is_allowed_fundamental(h, k)? {
                    return Err(Error::Precondition(format!("ϖ^∨_{k} is not an allowed coweight of {h}")));
                }
                multiples(p, k).ok_or_else(|| Error::NoDecomposition(format!("{p:?} are not multiples of ϖ^∨_{k} in {h}")))?
            }
            None if p.iter().all(|v| v.iter().all(|&x| x == 0)) => vec![0; mus.len()],
            None => return Err(Error::NoDecomposition(format!("no allowed coweight given for the {h} factor"))),
        };
        factors.push(FactorRGon { factor: h.to_string(), allowed: choice, tree: tree_rgon(&sides)? });
    }
    Ok(RGonWitness { factors })
}

/// Outcome of one side of a comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Computed(bool),
    Skipped(String),
}

impl Side {
    fn of(r: Result<bool>) -> Result<Side> {
        match r {
            Ok(b) => Ok(Side::Computed(b)),
            Err(Error::Capability(msg)) => Ok(Side::Skipped(msg)),
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointReduction {
    pub group: Side,
    pub adjoint: Side,
    /// `None` unless both sides were computed.
    pub equal: Option<bool>,
}

/// `Hecke^G(μ•, λ)` against `Hecke^{G_ad}(μ̄•, λ̄)`.
pub fn hecke_adjoint_reduction(d: &Arc<RootDatum>, mus: &[WeightVec], lambda: &WeightVec) -> Result<AdjointReduction> {
    let total = WeightVec::sum(mus)?;
    if !d.in_coroot_lattice(&total.sub(lambda)?)? {
        return Err(Error::Precondition(format!("Σμ − {lambda} is not in the coroot lattice")));
    }
    let group = Side::of(hecke::hecke_nonvanishing(d, mus, lambda))?;
    let ad = d.simply_connected()?;
    let bars: Vec<WeightVec> = mus.iter().map(|m| d.to_simply_connected(m)).collect::<Result<_>>()?;
    let adjoint = Side::of(hecke::hecke_nonvanishing(&ad, &bars, &d.to_simply_connected(lambda)?))?;
    let equal = match (&group, &adjoint) {
        (Side::Computed(a), Side::Computed(b)) => Some(a == b),
        _ => None,
    };
    Ok(AdjointReduction { group, adjoint, equal })
}

/// Hecke saturation factor `k_G`, known only for a few groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SaturationFactor {
    Known(u32),
    Unknown,
}

impl fmt::Display for SaturationFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationFactor::Known(k) => write!(f, "{k}"),
            SaturationFactor::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// `k_G` for a group named `GLn`, `GSp2n` or `E7`; everything else is unknown.
pub fn saturation_factor(group: &str) -> SaturationFactor {
    let g = group.trim();
    let index = |prefix: &str| g.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    if index("GL").is_some_and(|n| n >= 1) {
        SaturationFactor::Known(1)
    } else if index("GSp").is_some_and(|n| n >= 2 && n % 2 == 0) {
        SaturationFactor::Known(2)
    } else if g == "E7" {
        SaturationFactor::Known(12)
    } else {
        SaturationFactor::Unknown
    }
}

/// Which part of the saturation theorem covers an instance with `Σμ ∈ Q^∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    /// Every adjoint factor has type A.
    TypeA,
    /// Factors of type A, B, C, E7, each non-A projection a multiple of one allowed coweight.
    AllowedNoD,
    /// As above but with D factors, whose projections are multiples of a
    /// suitable minuscule coweight.
    AllowedWithD,
    /// Only the conjecture predicts saturation.
    ConjectureOnly,
}

pub fn coverage(d: &RootDatum, mus: &[WeightVec]) -> Result<Coverage> {
    let projs = factor_projections(d, mus)?;
    let types = adjoint_types(d);
    if types.iter().all(|h| h.family == Family::A) {
        return Ok(Coverage::TypeA);
    }
    let mut saw_d = false;
    for (h, p) in types.iter().zip(&projs) {
        let allowed_multiple = |pred: &dyn Fn(usize) -> Result<bool>| -> Result<bool> {
            for k in 1..=h.rank {
                if pred(k)? && is_allowed_fundamental(*h, k)? && multiples(p, k).is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        };
        let ok = match h.family {
            Family::A => true,
            Family::B | Family::C => allowed_multiple(&|_| Ok(true))?,
            Family::E if h.rank == 7 => allowed_multiple(&|_| Ok(true))?,
            Family::D => {
                saw_d = true;
                let pred = |k: usize| -> Result<bool> {
                    Ok(is_minuscule_fundamental(*h, k)? && (h.rank % 2 == 0 || k == 1))
                };
                allowed_multiple(&pred)?
            }
            _ => false,
        };
        if !ok {
            return Ok(Coverage::ConjectureOnly);
        }
    }
    Ok(if saw_d { Coverage::AllowedWithD } else { Coverage::AllowedNoD })
}
