//! Spherical functions acting on the module of left `I`-invariant functions
//! on `G/K`.
//!
//! The basis `v_λ` (λ ∈ X_*) is the indicator of `I t_λ K`, i.e. `T_{m(λ)} 1_K`
//! where `m(λ)` is the shortest element of `t_λ W`. Its length is
//! `d(λ) = Σ_{α>0} (k − 1 if k > 0 else −k)` with `k = ⟨α, λ⟩`, and `T_w 1_K = q^{ℓ(w)} 1_K`
//! for finite `w`. A spherical function `1_{KνK}`, normalized so that `1_K` is
//! the unit, acts as `Σ_{λ' ∈ Wν} T_{m(λ')}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::qpoly::QPoly;
use crate::error::{Error, Result};
use crate::rootdata::{dot, RootDatum};
use crate::weyl::{orbit_raw, AffineElement, AffineWeyl, ORBIT_BUDGET};

type Vector = HashMap<Vec<i64>, QPoly>;

fn add_into(v: &mut Vector, key: Vec<i64>, c: QPoly) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&key) {
        Some(e) => {
            *e += &c;
            if e.is_zero() {
                v.remove(&key);
            }
        }
        None => {
            v.insert(key, c);
        }
    }
}

pub struct SphericalModule {
    aw: AffineWeyl,
    /// Reduced factorizations `m(λ) = s_{i_1} ⋯ s_{i_k} ω`.
    factorizations: HashMap<Vec<i64>, (Vec<usize>, AffineElement)>,
}

impl SphericalModule {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        Ok(SphericalModule { aw: AffineWeyl::new(datum)?, factorizations: HashMap::new() })
    }

    fn datum(&self) -> &RootDatum {
        self.aw.datum()
    }

    /// `ℓ(m(λ))`.
    pub fn min_length(&self, lambda: &[i64]) -> i64 {
        self.datum()
            .roots()
            .iter()
            .map(|a| {
                let k = dot(a, lambda);
                if k > 0 {
                    k - 1
                } else {
                    -k
                }
            })
            .sum()
    }

    fn factorize(&mut self, lambda: &[i64]) -> Result<(Vec<usize>, AffineElement)> {
        if let Some(f) = self.factorizations.get(lambda) {
            return Ok(f.clone());
        }
        let mut word = Vec::new();
        let mut cur = lambda.to_vec();
        let mut len = self.min_length(&cur);
        'descend: while len > 0 {
            for i in 0..self.aw.num_simple() {
                let next = self.aw.act_raw(self.aw.simple(i), &cur);
                let l = self.min_length(&next);
                if l < len {
                    if l != len - 1 {
                        return Err(Error::Inconsistency(format!("length dropped by {} at {cur:?}", len - l)));
                    }
                    word.push(i);
                    cur = next;
                    len = l;
                    continue 'descend;
                }
            }
            return Err(Error::Inconsistency(format!("no descent from {cur:?}")));
        }
        let g = self.aw.group().clone();
        let omega = g
            .elements()
            .map(|w| AffineElement::new(cur.clone(), w))
            .find(|x| self.aw.length(x) == 0)
            .ok_or_else(|| Error::Inconsistency(format!("no length-zero element over {cur:?}")))?;
        self.factorizations.insert(lambda.to_vec(), (word.clone(), omega.clone()));
        Ok((word, omega))
    }

    /// `T_s` for the affine simple reflection `s`.
    fn apply_simple(&self, i: usize, v: &Vector) -> Result<Vector> {
        let s = self.aw.simple(i);
        let qm1 = QPoly::from_terms([(1, 1), (0, -1)]);
        let mut out = Vector::new();
        for (lam, c) in v {
            let slam = self.aw.act_raw(s, lam);
            if &slam == lam {
                add_into(&mut out, slam, c.shift(1));
                continue;
            }
            let (a, b) = (self.min_length(lam), self.min_length(&slam));
            if b == a + 1 {
                add_into(&mut out, slam, c.clone());
            } else if b + 1 == a {
                add_into(&mut out, slam, c.shift(1));
                add_into(&mut out, lam.clone(), c * &qm1);
            } else {
                return Err(Error::Inconsistency(format!("simple reflection moved {lam:?} without changing length by one")));
            }
        }
        Ok(out)
    }

    /// `T_{m(λ)} v`.
    fn apply_min(&mut self, lambda: &[i64], v: &Vector) -> Result<Vector> {
        let (word, omega) = self.factorize(lambda)?;
        let mut cur = Vector::new();
        for (mu, c) in v {
            cur.insert(self.aw.act_raw(&omega, mu), c.clone());
        }
        for &i in word.iter().rev() {
            cur = self.apply_simple(i, &cur)?;
        }
        Ok(cur)
    }

    /// `1_{KνK} ⋆ v`.
    pub fn apply_spherical(&mut self, nu: &[i64], v: &Vector) -> Result<Vector> {
        let mut out = Vector::new();
        for lam in orbit_raw(self.aw.datum(), nu, ORBIT_BUDGET)? {
            for (k, c) in self.apply_min(&lam, v)? {
                add_into(&mut out, k, c);
            }
        }
        Ok(out)
    }

    /// `c^λ_{μ•}` for all dominant `λ`, from `f_{μ_1} ⋆ ⋯ ⋆ f_{μ_r} ⋆ 1_K`.
    pub fn structure_constants(&mut self, mus: &[Vec<i64>]) -> Result<BTreeMap<Vec<i64>, QPoly>> {
        let d = self.aw.datum().clone();
        let mut v = Vector::from([(vec![0; d.rank()], QPoly::one())]);
        for mu in mus.iter().rev() {
            v = self.apply_spherical(mu, &v)?;
        }
        let mut out = BTreeMap::new();
        for (lam, c) in &v {
            if d.is_dominant_raw(lam) {
                out.insert(lam.clone(), c.clone());
            }
        }
        // the result is a sum of spherical functions, so constant on W-orbits
        for (lam, c) in &v {
            let dom = d.dominant_raw(lam).0;
            if out.get(&dom) != Some(c) {
                return Err(Error::Inconsistency(format!("product is not W-invariant at {lam:?}")));
            }
        }
        Ok(out)
    }
}
