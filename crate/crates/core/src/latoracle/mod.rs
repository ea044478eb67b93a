//! Brute-force point counts of `GL_n` convolution fibers over `F_q`, by
//! enumerating chains of lattices.
//!
//! A minuscule step `(1^k, 0^{n−k}) + c` is normalized by removing the
//! central part `c`, so every chain decreases: `O^n = L_0 ⊃ L_1 ⊃ ⋯ ⊃ L_r`
//! with `t L_{i−1} ⊂ L_i` of codimension `k_i`, ending at `t^{λ'} O^n` where
//! `λ' = λ − Σ c_i`. All lattices contain `t^r O^n`, so they are subspaces of
//! `V = (F_q[t]/t^N)^n` with `N = r + 1`.

pub mod field;
pub mod lattice;
pub mod linalg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use field::Field;
pub use lattice::{relative_position, t_shift, Lattice};
pub use linalg::{grassmannian, Subspace};

use crate::error::{Error, Result};
use crate::hecke::QPoly;
use crate::rootdata::{Family, Model, RootDatum, WeightVec};

/// First chains kept when witnesses are requested.
pub const WITNESS_CAP: usize = 1000;
pub const MAX_N: usize = 4;
pub const MAX_STEPS: usize = 4;
pub const FIELD_SIZES: [u8; 4] = [2, 3, 4, 5];

/// A chain as the echelon bases of `L_1, …, L_r` inside `V`.
pub type Witness = Vec<Vec<Vec<u8>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
}

/// `n` when `d` is the `GL_n` datum.
fn gl_rank(d: &RootDatum) -> Option<usize> {
    match d.factors() {
        [f] if f.model == Model::GeneralLinear && f.dim == d.rank() => {
            debug_assert_eq!(f.ctype().family, Family::A);
            Some(d.rank())
        }
        _ => None,
    }
}

/// `(k, c)` with `μ = (1^k, 0^{n−k}) + c`.
fn minuscule_step(mu: &[i64]) -> Option<(usize, i64)> {
    let (hi, lo) = (mu[0], *mu.last()?);
    if mu.windows(2).any(|w| w[0] < w[1]) || hi - lo > 1 {
        return None;
    }
    if hi == lo {
        return Some((0, lo));
    }
    Some((mu.iter().filter(|&&x| x == hi).count(), lo))
}

struct Search<'a> {
    f: &'a Field,
    n: usize,
    big: usize,
    steps: Vec<usize>,
    target: Subspace,
    keep: bool,
}

impl Search<'_> {
    fn shift(&self, v: &[u8]) -> Vec<u8> {
        t_shift(v, self.n, self.big)
    }

    /// Choices of `L_{i+1}` given `L_i`.
    fn children(&self, i: usize, l: &Subspace) -> Vec<Subspace> {
        let f = self.f;
        let mut base = self.target.clone();
        for r in l.rows() {
            base.insert(f, self.shift(r));
        }
        let mut probe = base.clone();
        let comp: Vec<&Vec<u8>> = l.rows().iter().filter(|r| probe.insert(f, (*r).clone())).collect();
        let m = comp.len();
        let k = self.steps[i];
        if k > m {
            return Vec::new();
        }
        let remaining = self.steps.len() - i - 1;
        let mut out = Vec::new();
        for rows in grassmannian(f, m, m - k) {
            let mut next = base.clone();
            for row in &rows {
                let mut v = vec![0u8; self.n * self.big];
                for (&c, u) in row.iter().zip(&comp) {
                    if c != 0 {
                        for (x, &y) in v.iter_mut().zip(u.iter()) {
                            *x = f.add(*x, f.mul(c, y));
                        }
                    }
                }
                next.insert(f, v);
            }
            // the chain can only reach the target if t^{remaining} L_{i+1} lies in it
            let reachable = next.rows().iter().all(|r| {
                let mut v = r.clone();
                for _ in 0..remaining {
                    v = self.shift(&v);
                }
                self.target.contains(f, &v)
            });
            if reachable {
                out.push(next);
            }
        }
        out
    }

    fn walk(&self, i: usize, l: &Subspace, path: &mut Vec<Subspace>, found: &mut (u64, Vec<Witness>)) {
        if i == self.steps.len() {
            debug_assert_eq!(l, &self.target);
            found.0 += 1;
            if self.keep && found.1.len() < WITNESS_CAP {
                found.1.push(path.iter().map(|s| s.rows().to_vec()).collect());
            }
            return;
        }
        for c in self.children(i, l) {
            path.push(c.clone());
            self.walk(i + 1, &c, path, found);
            path.pop();
        }
    }
}

/// Points of the fiber of the convolution map over `t^λ`, for minuscule steps.
pub fn enumerate_fiber(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec, q: u8, witnesses: bool) -> Result<FiberCount> {
    let n = gl_rank(d).ok_or_else(|| Error::Precondition(format!("{} is not a GL_n datum", d.label())))?;
    for m in mus {
        d.owns(m)?;
    }
    d.owns(lambda)?;
    if n > MAX_N || mus.len() > MAX_STEPS || !FIELD_SIZES.contains(&q) {
        return Err(Error::Capability(format!(
            "oracle budget is n <= {MAX_N}, r <= {MAX_STEPS}, q in {FIELD_SIZES:?}; got n={n}, r={}, q={q}",
            mus.len()
        )));
    }
    if mus.is_empty() {
        return Err(Error::Precondition("need at least one step".into()));
    }
    if !d.is_dominant(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant")));
    }
    let mut steps = Vec::new();
    let mut central = 0;
    for m in mus {
        let (k, c) = minuscule_step(m.coords()).ok_or_else(|| Error::Precondition(format!("{m} is not a minuscule step")))?;
        steps.push(k);
        central += c;
    }
    let lam: Vec<i64> = lambda.coords().iter().map(|x| x - central).collect();
    let top: Vec<i64> = (0..n).map(|j| steps.iter().filter(|&&k| j < k).count() as i64).collect();
    if !d.dominance_leq_raw(&lam, &top) || lam[n - 1] < 0 {
        return Ok(FiberCount { count: 0, witnesses: witnesses.then(Vec::new) });
    }
    let f = Field::new(q)?;
    let r = steps.len();
    let big = r + 1;
    let target = Subspace::span(
        &f,
        n * big,
        (0..n).flat_map(|j| {
            (lam[j] as usize..big).map(move |a| {
                let mut v = vec![0u8; n * big];
                v[j * big + a] = 1;
                v
            })
        }),
    );
    let search = Search { f: &f, n, big, steps, target, keep: witnesses };
    let start = Subspace::span(
        &f,
        n * big,
        (0..n * big).map(|i| {
            let mut v = vec![0u8; n * big];
            v[i] = 1;
            v
        }),
    );
    let (count, mut found) = search
        .children(0, &start)
        .into_par_iter()
        .map(|first| {
            let mut acc = (0u64, Vec::new());
            let mut path = vec![first.clone()];
            search.walk(1, &first, &mut path, &mut acc);
            acc
        })
        .reduce(
            || (0, Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1.extend(b.1);
                a.1.truncate(WITNESS_CAP);
                a
            },
        );
    found.truncate(WITNESS_CAP);
    Ok(FiberCount { count, witnesses: witnesses.then_some(found) })
}

/// Relative positions of consecutive lattices of a witness, starting at `O^n`.
/// The steps are the normalized ones, with the central part removed.
pub fn witness_steps(f: &Field, n: usize, witness: &Witness) -> Result<Vec<Vec<i64>>> {
    let big = witness.len() + 1;
    let mut prev = Lattice::standard(n, (n + 1) * big + 1);
    let mut out = Vec::new();
    for rows in witness {
        let s = Subspace::span(f, n * big, rows.iter().cloned());
        let l = Lattice::from_subspace(f, n, big, &s)?;
        out.push(relative_position(f, &prev, &l)?);
        prev = l;
    }
    Ok(out)
}

/// The polynomial of degree at most `degree_bound` through `samples`.
pub fn interpolate_polynomial(samples: &[(i64, BigInt)], degree_bound: usize) -> Result<QPoly> {
    let mut pts: Vec<(i64, BigInt)> = Vec::new();
    for (x, y) in samples {
        match pts.iter().find(|(px, _)| px == x) {
            Some((_, py)) if py != y => return Err(Error::Inconsistency(format!("two counts at q = {x}"))),
            Some(_) => {}
            None => pts.push((*x, y.clone())),
        }
    }
    if pts.len() < degree_bound + 1 {
        return Err(Error::Precondition(format!("{} distinct samples cannot fix degree {degree_bound}", pts.len())));
    }
    let (used, extra) = pts.split_at(degree_bound + 1);
    // Lagrange basis polynomials, coefficients low degree first
    let mut coeffs = vec![BigRational::zero(); used.len()];
    for (i, (xi, yi)) in used.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in used.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(*xj));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    let mut p = QPoly::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Inconsistency(format!("coefficient {c} of q^{k} is not an integer")));
        }
        p.add_term(k as u32, c.to_integer());
    }
    for (x, y) in extra {
        if &p.eval_i64(*x) != y {
            return Err(Error::Inconsistency(format!("interpolant {p} misses the count {y} at q = {x}")));
        }
    }
    Ok(p)
}

/// Counts at each `q` in `qs`, interpolated with the degree bound `⟨ρ, |μ•| − λ⟩`.
pub fn oracle_polynomial(d: &RootDatum, mus: &[WeightVec], lambda: &WeightVec, qs: &[u8]) -> Result<QPoly> {
    let total = WeightVec::sum(mus)?;
    let bound = d.rho_pairing(total.sub(lambda)?.coords())?;
    let mut samples = Vec::new();
    for &q in qs {
        samples.push((i64::from(q), BigInt::from(enumerate_fiber(d, mus, lambda, q, false)?.count)));
    }
    if bound < 0 {
        return if samples.iter().all(|(_, c)| c.is_zero()) {
            Ok(QPoly::zero())
        } else {
            Err(Error::Inconsistency("points over a target above the Cartan bound".into()))
        };
    }
    interpolate_polynomial(&samples, bound as usize)
}

/// Whether `d` is a `GL_n` datum within the oracle's budget.
pub fn supports(d: &RootDatum) -> bool {
    gl_rank(d).is_some_and(|n| n <= MAX_N)
}

#[cfg(test)]
mod tests;
