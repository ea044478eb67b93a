//! Finite Weyl groups (enumerated in full) and the extended affine Weyl group.

mod affine;

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{dot, RootDatum, WeightVec};

pub use affine::{AffineElement, AffineWeyl};

/// Default cap on orbit sizes for [`orbit`].
pub const ORBIT_BUDGET: usize = 200_000;

/// Handle to an element of a [`WeylGroup`]; index 0 is the identity and
/// indices are ordered by length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylElement(pub u32);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Multiplication tables, reduced words and Bruhat intervals of a finite Weyl group.
#[derive(Debug)]
pub struct WeylGroup {
    rank: usize,
    nsimple: usize,
    /// Column-major action matrices on the coweight lattice.
    matrices: Vec<Vec<i64>>,
    words: Vec<Vec<u8>>,
    mul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    /// `root_image[w][a] = (b, sign)` with `w α_a = sign · α_b`.
    root_image: Vec<Vec<(u16, bool)>>,
    /// `below[w]` is the Bruhat interval `[e, w]` as a bitset.
    below: Vec<Vec<u64>>,
    simple: Vec<u32>,
}

fn mat_vec(m: &[i64], n: usize, v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n];
    for (j, &x) in v.iter().enumerate() {
        if x != 0 {
            for i in 0..n {
                out[i] += m[j * n + i] * x;
            }
        }
    }
    out
}

impl WeylGroup {
    pub(crate) fn build(d: &RootDatum) -> WeylGroup {
        let n = d.rank();
        let s = d.semisimple_rank();
        let regular = d.two_rho_vee().to_vec();
        let reflection = |k: usize| {
            let mut m = vec![0i64; n * n];
            for j in 0..n {
                let mut e = vec![0; n];
                e[j] = 1;
                d.reflect_raw(&mut e, d.simple()[k]);
                m[j * n..(j + 1) * n].copy_from_slice(&e);
            }
            m
        };
        let gens: Vec<Vec<i64>> = (0..s).map(reflection).collect();
        let compose = |a: &[i64], b: &[i64]| {
            let mut m = vec![0i64; n * n];
            for j in 0..n {
                let col = mat_vec(a, n, &b[j * n..(j + 1) * n]);
                m[j * n..(j + 1) * n].copy_from_slice(&col);
            }
            m
        };
        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let mut matrices = vec![identity];
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut index = HashMap::new();
        index.insert(regular.clone(), 0u32);
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut parent = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        // breadth first, so words are reduced and indices sorted by length
        while let Some(x) = queue.pop_front() {
            let mut row = vec![0u32; s];
            for (k, g) in gens.iter().enumerate() {
                let m = compose(&matrices[x], g);
                let key = mat_vec(&m, n, &regular);
                let y = *index.entry(key).or_insert_with(|| {
                    matrices.push(m);
                    let mut wd = words[x].clone();
                    wd.push(k as u8);
                    words.push(wd);
                    parent.push(x);
                    queue.push_back(matrices.len() - 1);
                    (matrices.len() - 1) as u32
                });
                row[k] = y;
            }
            right.push(row);
        }
        let order = matrices.len();
        let mut mul = vec![vec![0u32; order]; order];
        for a in 0..order {
            mul[a][0] = a as u32;
            for b in 1..order {
                let last = *words[b].last().unwrap() as usize;
                mul[a][b] = right[mul[a][parent[b]] as usize][last];
            }
        }
        let inverse = (0..order).map(|a| mul[a].iter().position(|&c| c == 0).unwrap() as u32).collect();
        let root_image = matrices
            .iter()
            .map(|m| {
                d.coroots()
                    .iter()
                    .map(|c| {
                        let (b, sign) = d.coroot_position(&mat_vec(m, n, c)).expect("W permutes coroots");
                        (b as u16, sign)
                    })
                    .collect()
            })
            .collect();
        let blocks = order.div_ceil(64);
        let below = (0..order)
            .map(|w| {
                let mut set = vec![0u64; blocks];
                set[0] |= 1;
                for &k in &words[w] {
                    let members: Vec<usize> =
                        (0..order).filter(|&u| set[u / 64] >> (u % 64) & 1 == 1).collect();
                    for u in members {
                        let v = right[u][k as usize] as usize;
                        set[v / 64] |= 1 << (v % 64);
                    }
                }
                set
            })
            .collect();
        let simple = right[0].clone();
        WeylGroup { rank: n, nsimple: s, matrices, words, mul, inverse, root_image, below, simple }
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn simple_reflection(&self, k: usize) -> WeylElement {
        WeylElement(self.simple[k])
    }

    pub fn nsimple(&self) -> usize {
        self.nsimple
    }

    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.words[w.index()].len()
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        WeylElement(self.mul[a.index()][b.index()])
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.order() as u32 - 1)
    }

    /// Element with the given word (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::IDENTITY;
        for &k in word {
            if k >= self.nsimple {
                return Err(Error::Precondition(format!("simple reflection index {k} out of range")));
            }
            w = self.mul(w, self.simple_reflection(k));
        }
        Ok(w)
    }

    /// `w · v` on the coweight lattice.
    pub fn act_raw(&self, w: WeylElement, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrices[w.index()], self.rank, v)
    }

    pub fn act(&self, d: &RootDatum, w: WeylElement, v: &WeightVec) -> Result<WeightVec> {
        d.weight(self.act_raw(w, v.coords()))
    }

    /// `w α_a` as `(b, positive?)`.
    pub fn root_image(&self, w: WeylElement, a: usize) -> (usize, bool) {
        let (b, s) = self.root_image[w.index()][a];
        (b as usize, s)
    }

    /// Whether `w^{-1} α_a` is positive.
    pub fn inverse_keeps_positive(&self, w: WeylElement, a: usize) -> bool {
        self.root_image[self.inverse[w.index()] as usize][a].1
    }

    /// Bruhat order by the subword property.
    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> bool {
        let i = u.index();
        self.below[w.index()][i / 64] >> (i % 64) & 1 == 1
    }

    /// Elements fixing `v`.
    pub fn stabilizer(&self, v: &[i64]) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.act_raw(w, v) == v).collect()
    }

    /// The minimal-length element of `W_λ w W_μ`.
    pub fn minimal_double_coset_rep(&self, w: WeylElement, lambda: &[i64], mu: &[i64]) -> WeylElement {
        let left = self.stabilizer(lambda);
        let right = self.stabilizer(mu);
        let mut best = w;
        for &a in &left {
            let aw = self.mul(a, w);
            for &b in &right {
                let x = self.mul(aw, b);
                if self.length(x) < self.length(best) {
                    best = x;
                }
            }
        }
        best
    }

    /// The minimal-length `w` with `w μ = ν`.
    pub fn minimal_transporter(&self, mu: &[i64], nu: &[i64]) -> Option<WeylElement> {
        // indices are sorted by length
        self.elements().find(|&w| self.act_raw(w, mu) == nu)
    }

    pub fn to_json(&self, w: WeylElement) -> serde_json::Value {
        serde_json::json!(self.word(w).iter().map(|&k| k as usize + 1).collect::<Vec<_>>())
    }
}

/// The full `W`-orbit of `v`, sorted, generated by simple reflections.
pub fn orbit(d: &RootDatum, v: &WeightVec) -> Result<Vec<WeightVec>> {
    Ok(orbit_raw(d, v.coords(), ORBIT_BUDGET)?.into_iter().map(|c| d.wrap(c)).collect())
}

pub(crate) fn orbit_raw(d: &RootDatum, v: &[i64], budget: usize) -> Result<Vec<Vec<i64>>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for &k in d.simple() {
            if dot(&d.roots()[k], &x) == 0 {
                continue;
            }
            let mut y = x.clone();
            d.reflect_raw(&mut y, k);
            if seen.insert(y.clone()) {
                if seen.len() > budget {
                    return Err(Error::Capability(format!("orbit of {v:?} exceeds {budget} elements")));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `|W_v| = |W| / |Wv|`.
pub fn stabilizer_order(d: &RootDatum, v: &WeightVec) -> Result<u128> {
    let n = orbit(d, v)?.len() as u128;
    Ok(d.weyl_order() / n)
}

/// Elements of `W t_μ W`, i.e. `t_ν w` for `ν ∈ Wμ`, `w ∈ W`.
pub fn double_coset_elements(d: &RootDatum, mu: &WeightVec) -> Result<Vec<AffineElement>> {
    d.owns(mu)?;
    if !d.is_dominant(mu) {
        return Err(Error::Precondition(format!("double coset needs a dominant coweight, got {mu}")));
    }
    let g = d.weyl()?;
    let mut out = Vec::new();
    for nu in orbit_raw(d, mu.coords(), ORBIT_BUDGET)? {
        for w in g.elements() {
            out.push(AffineElement::new(nu.clone(), w));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
