//! Iwahori–Hecke algebra of the extended affine Weyl group in the `T`-basis.
//!
//! This is the literal reference computation: every spherical function is
//! expanded over its double coset and multiplied term by term. It is only
//! practical for small groups and weights.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::qpoly::QPoly;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, WeightVec};
use crate::weyl::{double_coset_elements, AffineElement, AffineWeyl};

/// Finitely supported `Σ c_x T_x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    pub terms: HashMap<AffineElement, QPoly>,
}

impl HeckeElement {
    pub fn basis(x: AffineElement) -> Self {
        HeckeElement { terms: HashMap::from([(x, QPoly::one())]) }
    }

    pub fn add_term(&mut self, x: AffineElement, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(x.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn coeff(&self, x: &AffineElement) -> QPoly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in a canonical order, for comparisons and output.
    pub fn sorted(&self) -> BTreeMap<AffineElement, QPoly> {
        self.terms.iter().map(|(x, c)| (x.clone(), c.clone())).collect()
    }
}

/// Multiplication in the Iwahori–Matsumoto presentation.
pub struct IwahoriHecke {
    aw: AffineWeyl,
}

impl IwahoriHecke {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        Ok(IwahoriHecke { aw: AffineWeyl::new(datum)? })
    }

    pub fn affine(&self) -> &AffineWeyl {
        &self.aw
    }

    /// `T_s · h` for the affine simple reflection `s`.
    fn left_simple(&self, i: usize, h: &HeckeElement) -> HeckeElement {
        let s = self.aw.simple(i);
        let qm1 = QPoly::from_terms([(1, 1), (0, -1)]);
        let mut out = HeckeElement::default();
        for (y, c) in &h.terms {
            let sy = self.aw.mul(s, y);
            if self.aw.length(&sy) > self.aw.length(y) {
                out.add_term(sy, c);
            } else {
                out.add_term(sy, &c.shift(1));
                out.add_term(y.clone(), &(c * &qm1));
            }
        }
        out
    }

    /// `T_x · h`, peeling a reduced word of `x`.
    pub fn left_mul(&self, x: &AffineElement, h: &HeckeElement) -> HeckeElement {
        let (word, omega) = self.aw.reduced_decomposition(x);
        let mut cur = HeckeElement::default();
        for (y, c) in &h.terms {
            cur.add_term(self.aw.mul(&omega, y), c);
        }
        for &i in word.iter().rev() {
            cur = self.left_simple(i, &cur);
        }
        cur
    }

    /// `T_x · T_y`.
    pub fn t_basis_product(&self, x: &AffineElement, y: &AffineElement) -> HeckeElement {
        self.left_mul(x, &HeckeElement::basis(y.clone()))
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::default();
        for (x, c) in &a.terms {
            for (z, d) in self.left_mul(x, b).terms {
                out.add_term(z, &(c * &d));
            }
        }
        out
    }

    /// `1_{KμK} = Σ_{x ∈ W t_μ W} T_x`.
    pub fn spherical_basis_element(&self, mu: &WeightVec) -> Result<HeckeElement> {
        let mut h = HeckeElement::default();
        for x in double_coset_elements(self.aw.datum(), mu)? {
            h.add_term(x, &QPoly::one());
        }
        Ok(h)
    }

    /// `P_W(q) = Σ_{w ∈ W} q^{ℓ(w)}`.
    pub fn poincare(&self) -> QPoly {
        let g = self.aw.group();
        QPoly::poincare(g.elements().map(|w| g.length(w)))
    }

    /// Structure constants read off the `T_{t_λ}` coefficients of the Iwahori-level product.
    pub fn structure_constants(&self, mus: &[WeightVec]) -> Result<BTreeMap<Vec<i64>, QPoly>> {
        let d = self.aw.datum();
        if mus.is_empty() {
            return Err(Error::Precondition("need at least one coweight".into()));
        }
        let mut h = self.spherical_basis_element(&mus[0])?;
        for mu in &mus[1..] {
            let f = self.spherical_basis_element(mu)?;
            h = self.mul(&h, &f);
        }
        let pw = self.poincare().pow(mus.len() as u32 - 1);
        let mut out = BTreeMap::new();
        for (x, c) in &h.terms {
            if x.is_translation() && d.is_dominant_raw(&x.translation) {
                out.insert(x.translation.clone(), c.div_exact(&pw)?);
            }
        }
        Ok(out)
    }
}
