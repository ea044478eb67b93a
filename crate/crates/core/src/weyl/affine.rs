//! Extended affine Weyl group `X_* ⋊ W` in `(translation, finite part)` normal form.

use std::sync::Arc;

use serde_json::json;

use super::{WeylElement, WeylGroup};
use crate::error::Result;
use crate::rootdata::{dot, RootDatum, WeightVec};

/// `t_λ w`, acting on coweights by `x ↦ λ + w x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub translation: Vec<i64>,
    pub finite: WeylElement,
}

impl AffineElement {
    pub fn new(translation: Vec<i64>, finite: WeylElement) -> Self {
        AffineElement { translation, finite }
    }

    pub fn identity(rank: usize) -> Self {
        AffineElement { translation: vec![0; rank], finite: WeylElement::IDENTITY }
    }

    pub fn translation_by(v: &WeightVec) -> Self {
        AffineElement { translation: v.coords().to_vec(), finite: WeylElement::IDENTITY }
    }

    pub fn is_translation(&self) -> bool {
        self.finite == WeylElement::IDENTITY
    }
}

/// Group operations for the extended affine Weyl group of one datum.
///
/// Affine simple reflections are numbered `0..s` for the finite ones and
/// `s..s+f` for the affine reflection `s_0` of each simple factor.
#[derive(Debug)]
pub struct AffineWeyl {
    datum: Arc<RootDatum>,
    group: Arc<WeylGroup>,
    simples: Vec<AffineElement>,
    /// For each factor, its highest root and the coroot of it.
    highest: Vec<(Vec<i64>, Vec<i64>)>,
}

impl AffineWeyl {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        let group = datum.weyl()?;
        let n = datum.rank();
        let mut simples: Vec<AffineElement> = (0..group.nsimple())
            .map(|k| AffineElement::new(vec![0; n], group.simple_reflection(k)))
            .collect();
        let mut highest = Vec::new();
        for f in datum.factors() {
            let theta = datum.roots()[f.highest].clone();
            let theta_vee = datum.coroots()[f.highest].clone();
            // s_θ is the w with w(θ^∨) = -θ^∨ fixing the hyperplane ⟨θ, ·⟩ = 0
            let s_theta = group
                .elements()
                .find(|&w| {
                    (0..n).all(|j| {
                        let mut e = vec![0; n];
                        e[j] = 1;
                        let p = dot(&theta, &e);
                        let img = group.act_raw(w, &e);
                        img.iter().zip(&e).zip(&theta_vee).all(|((y, x), c)| *y == x - p * c)
                    })
                })
                .expect("reflection in the highest root");
            simples.push(AffineElement::new(theta_vee.clone(), s_theta));
            highest.push((theta, theta_vee));
        }
        Ok(AffineWeyl { datum, group, simples, highest })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn num_simple(&self) -> usize {
        self.simples.len()
    }

    pub fn simple(&self, i: usize) -> &AffineElement {
        &self.simples[i]
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::identity(self.datum.rank())
    }

    pub fn finite(&self, w: WeylElement) -> AffineElement {
        AffineElement::new(vec![0; self.datum.rank()], w)
    }

    /// `(t_a u)(t_b v) = t_{a + u b} uv`.
    pub fn mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        let ub = self.group.act_raw(x.finite, &y.translation);
        let t = x.translation.iter().zip(&ub).map(|(a, b)| a + b).collect();
        AffineElement::new(t, self.group.mul(x.finite, y.finite))
    }

    pub fn inverse(&self, x: &AffineElement) -> AffineElement {
        let ui = self.group.inverse(x.finite);
        let t = self.group.act_raw(ui, &x.translation).into_iter().map(|c| -c).collect();
        AffineElement::new(t, ui)
    }

    /// Action on the coweight lattice.
    pub fn act_raw(&self, x: &AffineElement, v: &[i64]) -> Vec<i64> {
        let wv = self.group.act_raw(x.finite, v);
        x.translation.iter().zip(wv).map(|(a, b)| a + b).collect()
    }

    /// Length relative to the dominant base alcove.
    pub fn length(&self, x: &AffineElement) -> usize {
        let mut l = 0i64;
        for (a, alpha) in self.datum.roots().iter().enumerate() {
            let p = dot(alpha, &x.translation);
            l += if self.group.inverse_keeps_positive(x.finite, a) { p.abs() } else { (p - 1).abs() };
        }
        l as usize
    }

    /// `x = s_{i_1} ⋯ s_{i_k} ω` with `k = ℓ(x)` and `ℓ(ω) = 0`.
    pub fn reduced_decomposition(&self, x: &AffineElement) -> (Vec<usize>, AffineElement) {
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        'outer: while len > 0 {
            for i in 0..self.simples.len() {
                let y = self.mul(&self.simples[i], &cur);
                let ly = self.length(&y);
                if ly < len {
                    word.push(i);
                    cur = y;
                    len = ly;
                    continue 'outer;
                }
            }
            unreachable!("positive length element without a left descent");
        }
        (word, cur)
    }

    /// Highest root and its coroot for each factor.
    pub fn highest(&self) -> &[(Vec<i64>, Vec<i64>)] {
        &self.highest
    }

    pub fn to_json(&self, x: &AffineElement) -> serde_json::Value {
        json!({ "translation": x.translation, "word": self.group.to_json(x.finite) })
    }
}
