//! Root data: lattices, pairings, dominance, duals and the minuscule and
//! allowed classifications.
//!
//! A datum is named by the type of the dual group `Ĝ`, whose weights are the
//! coweights of `G` that we compute with. So `C2` is the datum of `SO5`, whose
//! coweights are the weights of `Sp4`. Lattice models per factor:
//!
//! * `An`: the `GL_{n+1}` lattice `Z^{n+1}`.
//! * `Bn`, `Cn`, `D3`, `D4`: the Bourbaki epsilon basis `Z^n`.
//! * `Dn` (n >= 5), `E6`..`E8`, `F4`, `G2` and any `Xsc`: weight coordinates
//!   (Dynkin labels), i.e. `Ĝ` simply connected.
//! * `adj(H)`: the coweight lattice of the adjoint group of type `H`, in
//!   fundamental-coweight coordinates with `H`'s numbering.
//!
//! Products are written `A1xC2`.

mod cartan;
mod weight;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;

pub use cartan::{exceptional_table, parse_table, CartanType, ExceptionalTable, Family, RootSystem};
pub use weight::WeightVec;

use crate::error::{Error, Result};
use crate::weyl::WeylGroup;

/// Largest Weyl group we enumerate in full.
pub const MAX_WEYL_ORDER: u128 = 192;

/// Lattice model of one simple factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// `Z^{n+1}` for type `A_n`.
    GeneralLinear,
    /// Bourbaki epsilon basis for `B`, `C`, `D`.
    Epsilon,
    /// Dynkin-label coordinates.
    Weight,
}

/// One simple factor of a datum.
#[derive(Clone, Debug)]
pub struct Factor {
    /// Root system of the dual group's factor (the label type).
    pub system: RootSystem,
    pub model: Model,
    /// Canonical label of this factor.
    pub label: String,
    /// Label of the simply connected form of the dual factor.
    pub sc_label: String,
    /// First lattice coordinate and number of coordinates.
    pub offset: usize,
    pub dim: usize,
    /// First global simple index.
    pub simple_offset: usize,
    /// Global indices of this factor's positive roots.
    pub roots: Vec<usize>,
    /// Global index of the highest root of `G` in this factor.
    pub highest: usize,
}

impl Factor {
    pub fn ctype(&self) -> CartanType {
        self.system.ctype
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }
}

/// An immutable, interned root datum.
#[derive(Debug)]
pub struct RootDatum {
    id: u64,
    label: String,
    rank: usize,
    factors: Vec<Factor>,
    /// Positive roots of `G` (pairing with coweights).
    roots: Vec<Vec<i64>>,
    /// Positive coroots of `G`, parallel to `roots`.
    coroots: Vec<Vec<i64>>,
    simple: Vec<usize>,
    two_rho: Vec<i64>,
    two_rho_vee: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Ratio<i64>>>,
    fundamental: Vec<Option<Vec<i64>>>,
    coroot_index: HashMap<Vec<i64>, (usize, bool)>,
    weyl: OnceLock<std::result::Result<Arc<WeylGroup>, Error>>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn registry() -> &'static Mutex<HashMap<String, Arc<RootDatum>>> {
    static REG: OnceLock<Mutex<HashMap<String, Arc<RootDatum>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

struct FactorSpec {
    system: RootSystem,
    model: Model,
    label: String,
    sc_label: String,
}

fn parse_factor(s: &str) -> Result<FactorSpec> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix("adj(").and_then(|r| r.strip_suffix(')')) {
        let h: CartanType = inner.parse()?;
        let label = format!("adj({h})");
        return Ok(FactorSpec {
            system: RootSystem::of(h).dual(),
            model: Model::Weight,
            label: label.clone(),
            sc_label: label,
        });
    }
    let upper = s.to_ascii_uppercase();
    if let Some(n) = upper.strip_prefix("GL") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad group '{s}'")))?;
        if n < 2 {
            return Err(Error::Parse(format!("GL{n} has no roots")));
        }
        return parse_factor(&format!("A{}", n - 1));
    }
    let (body, sc) = match upper.strip_suffix("SC") {
        Some(b) => (b, true),
        None => (upper.as_str(), false),
    };
    let ctype: CartanType = body.parse()?;
    let default = match ctype.family {
        Family::A => Model::GeneralLinear,
        Family::B | Family::C => Model::Epsilon,
        Family::D if ctype.rank <= 4 => Model::Epsilon,
        _ => Model::Weight,
    };
    let model = if sc { Model::Weight } else { default };
    let sc_label = if default == Model::Weight { ctype.to_string() } else { format!("{ctype}sc") };
    let label = if model == default { ctype.to_string() } else { sc_label.clone() };
    Ok(FactorSpec { system: RootSystem::of(ctype), model, label, sc_label })
}

/// Lattice dimension, simple roots of the dual group (in coweight
/// coordinates) and simple coroots of the dual group (in the dual lattice).
fn factor_lattice(spec: &FactorSpec) -> (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let r = spec.system.rank();
    let unit = |n: usize, i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
    let diff = |n: usize, i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v[i + 1] = -1;
        v
    };
    match spec.model {
        Model::GeneralLinear => {
            let n = r + 1;
            let b: Vec<Vec<i64>> = (0..r).map(|i| diff(n, i)).collect();
            (n, b.clone(), b)
        }
        Model::Epsilon => {
            let n = r;
            let mut b: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
            let mut bv = b.clone();
            match spec.system.ctype.family {
                Family::B => {
                    b.push(unit(n, n - 1));
                    bv.push(unit(n, n - 1).iter().map(|x| 2 * x).collect());
                }
                Family::C => {
                    b.push(unit(n, n - 1).iter().map(|x| 2 * x).collect());
                    bv.push(unit(n, n - 1));
                }
                Family::D => {
                    let mut v = vec![0; n];
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                    b.push(v.clone());
                    bv.push(v);
                }
                _ => unreachable!("epsilon model only for B, C, D"),
            }
            (n, b, bv)
        }
        Model::Weight => {
            let a = &spec.system.cartan;
            let b = (0..r).map(|j| (0..r).map(|i| a[i][j]).collect()).collect();
            let bv = (0..r).map(|i| unit(r, i)).collect();
            (r, b, bv)
        }
    }
}

fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| if j < n { Ratio::from_integer(a[i][j]) } else { Ratio::from_integer(i64::from(j - n == i)) })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Ratio::from_integer(0)).expect("Cartan matrix is invertible");
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c && m[r][c] != Ratio::from_integer(0) {
                let f = m[r][c];
                let row_c = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(row_c) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootDatum {
    /// Fetch (building once) the datum for a label such as `C2`, `A1xB2` or `adj(E7)`.
    pub fn get(label: &str) -> Result<Arc<RootDatum>> {
        let specs = label
            .split('x')
            .map(parse_factor)
            .collect::<Result<Vec<_>>>()?;
        let canonical = specs.iter().map(|s| s.label.as_str()).collect::<Vec<_>>().join("x");
        let mut reg = registry().lock().expect("datum registry poisoned");
        if let Some(d) = reg.get(&canonical) {
            return Ok(d.clone());
        }
        let d = Arc::new(RootDatum::build(canonical.clone(), specs));
        reg.insert(canonical, d.clone());
        Ok(d)
    }

    /// Coweight lattice of the adjoint group of type `h`.
    pub fn adjoint_of(h: CartanType) -> Arc<RootDatum> {
        RootDatum::get(&format!("adj({h})")).expect("adjoint datum")
    }

    fn build(label: String, specs: Vec<FactorSpec>) -> RootDatum {
        let lattices: Vec<_> = specs.iter().map(factor_lattice).collect();
        let rank: usize = lattices.iter().map(|l| l.0).sum();
        let ss_rank: usize = specs.iter().map(|s| s.system.rank()).sum();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut simple = vec![0; ss_rank];
        let mut factors = Vec::new();
        let mut cartan = vec![vec![0i64; ss_rank]; ss_rank];
        let mut inv_cartan = vec![vec![Ratio::from_integer(0i64); ss_rank]; ss_rank];
        let mut fundamental = vec![None; ss_rank];
        let (mut offset, mut soff) = (0, 0);
        for (spec, (dim, b, bv)) in specs.into_iter().zip(lattices) {
            let r = spec.system.rank();
            let embed = |local: Vec<i64>| {
                let mut v = vec![0i64; rank];
                v[offset..offset + dim].copy_from_slice(&local);
                v
            };
            let mut idx = Vec::new();
            let mut best = (i64::MIN, 0);
            for c in &spec.system.positive {
                let d = spec.system.coroot_coords(c);
                // dual-group root sum c_j b_j is a coroot of G; the dual coroot is a root of G
                let coroot: Vec<i64> = (0..dim).map(|k| (0..r).map(|j| c[j] * b[j][k]).sum()).collect();
                let root: Vec<i64> = (0..dim).map(|k| (0..r).map(|j| d[j] * bv[j][k]).sum()).collect();
                let g = roots.len();
                let height: i64 = d.iter().sum();
                if height > best.0 {
                    best = (height, g);
                }
                if height == 1 {
                    let j = d.iter().position(|&x| x == 1).expect("simple root");
                    simple[soff + j] = g;
                }
                roots.push(embed(root));
                coroots.push(embed(coroot));
                idx.push(g);
            }
            let inv = rational_inverse(&spec.system.cartan);
            for i in 0..r {
                for j in 0..r {
                    cartan[soff + i][soff + j] = spec.system.cartan[i][j];
                    inv_cartan[soff + i][soff + j] = inv[i][j];
                }
            }
            for i in 0..r {
                let lift: Option<Vec<i64>> = if spec.model == Model::GeneralLinear {
                    Some((0..dim).map(|k| i64::from(k <= i)).collect())
                } else {
                    // column i of the inverse Cartan matrix, in the basis b
                    let v: Vec<Ratio<i64>> = (0..dim)
                        .map(|k| (0..r).map(|j| inv[j][i] * b[j][k]).sum())
                        .collect();
                    v.iter().all(|x| x.is_integer()).then(|| v.iter().map(|x| x.to_integer()).collect())
                };
                fundamental[soff + i] = lift.map(&embed);
            }
            factors.push(Factor {
                system: spec.system,
                model: spec.model,
                label: spec.label,
                sc_label: spec.sc_label,
                offset,
                dim,
                simple_offset: soff,
                roots: idx,
                highest: best.1,
            });
            offset += dim;
            soff += r;
        }
        let sum = |vs: &[Vec<i64>]| (0..rank).map(|k| vs.iter().map(|v| v[k]).sum()).collect::<Vec<i64>>();
        let two_rho = sum(&roots);
        let two_rho_vee = sum(&coroots);
        let mut coroot_index = HashMap::new();
        for (k, c) in coroots.iter().enumerate() {
            coroot_index.insert(c.clone(), (k, true));
            coroot_index.insert(c.iter().map(|x| -x).collect(), (k, false));
        }
        RootDatum {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            label,
            rank,
            factors,
            roots,
            coroots,
            simple,
            two_rho,
            two_rho_vee,
            cartan,
            inv_cartan,
            fundamental,
            coroot_index,
            weyl: OnceLock::new(),
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Dimension of the coweight lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Positive roots of `G`.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Positive coroots of `G`, parallel to [`RootDatum::roots`].
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Global indices of the simple roots, in Bourbaki order per factor.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Sum of the positive coroots (twice the dual group's rho).
    pub fn two_rho_vee(&self) -> &[i64] {
        &self.two_rho_vee
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Position of a coroot vector: `(index, positive?)`.
    pub fn coroot_position(&self, v: &[i64]) -> Option<(usize, bool)> {
        self.coroot_index.get(v).copied()
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| f.ctype().weyl_order()).product()
    }

    /// The finite Weyl group, enumerated once.
    pub fn weyl(&self) -> Result<Arc<WeylGroup>> {
        self.weyl
            .get_or_init(|| {
                if self.weyl_order() > MAX_WEYL_ORDER {
                    Err(Error::Capability(format!(
                        "Weyl group of {} has order {} > {MAX_WEYL_ORDER}",
                        self.label,
                        self.weyl_order()
                    )))
                } else {
                    Ok(Arc::new(WeylGroup::build(self)))
                }
            })
            .clone()
    }

    pub fn weight(&self, coords: Vec<i64>) -> Result<WeightVec> {
        if coords.len() != self.rank {
            return Err(Error::Precondition(format!(
                "{} needs {} coordinates, got {}",
                self.label,
                self.rank,
                coords.len()
            )));
        }
        Ok(WeightVec::from_parts(coords, self.id))
    }

    pub fn zero(&self) -> WeightVec {
        WeightVec::from_parts(vec![0; self.rank], self.id)
    }

    pub(crate) fn wrap(&self, coords: Vec<i64>) -> WeightVec {
        debug_assert_eq!(coords.len(), self.rank);
        WeightVec::from_parts(coords, self.id)
    }

    pub(crate) fn owns(&self, v: &WeightVec) -> Result<()> {
        if v.datum_id() != self.id {
            return Err(Error::DatumMismatch(self.label.clone(), format!("datum #{}", v.datum_id())));
        }
        Ok(())
    }

    /// Parse `1,0,-1`, `0`, `w3` or sums such as `2w1+w3` (1-based Bourbaki indices).
    pub fn parse_weight(&self, s: &str) -> Result<WeightVec> {
        let s = s.trim();
        if s == "0" {
            return Ok(self.zero());
        }
        if s.contains('w') {
            let mut acc = vec![0i64; self.rank];
            for term in s.split('+') {
                let (k, idx) = term
                    .trim()
                    .split_once('w')
                    .ok_or_else(|| Error::Parse(format!("bad weight term '{term}'")))?;
                let k: i64 = match k.trim() {
                    "" => 1,
                    k => k.parse().map_err(|_| Error::Parse(format!("bad coefficient '{k}'")))?,
                };
                let i: usize = idx.trim().parse().map_err(|_| Error::Parse(format!("bad index '{idx}'")))?;
                let w = self.fundamental_coweight(i)?.ok_or_else(|| {
                    Error::Parse(format!("w{i} is not in the coweight lattice of {}; try a `sc` label", self.label))
                })?;
                for (a, b) in acc.iter_mut().zip(w.coords()) {
                    *a += k * b;
                }
            }
            return self.weight(acc);
        }
        let coords = s
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        self.weight(coords)
    }

    /// Fundamental coweight `ϖ^∨_i` (1-based), or a lift of it for `GL_n`;
    /// `None` when it is not in the lattice.
    pub fn fundamental_coweight(&self, i: usize) -> Result<Option<WeightVec>> {
        if i == 0 || i > self.simple.len() {
            return Err(Error::Precondition(format!("fundamental index {i} out of range for {}", self.label)));
        }
        Ok(self.fundamental[i - 1].clone().map(|c| self.wrap(c)))
    }

    /// `<x, v>` for a vector `x` of the character lattice.
    pub fn pairing(&self, x: &[i64], v: &WeightVec) -> Result<i64> {
        self.owns(v)?;
        if x.len() != self.rank {
            return Err(Error::Precondition("pairing vector has the wrong length".into()));
        }
        Ok(dot(x, v.coords()))
    }

    /// Pairings with the simple roots (Dynkin labels).
    pub fn labels(&self, v: &[i64]) -> Vec<i64> {
        self.simple.iter().map(|&k| dot(&self.roots[k], v)).collect()
    }

    /// `<ρ, v>`, requiring `<2ρ, v>` to be even.
    pub fn rho_pairing(&self, v: &[i64]) -> Result<i64> {
        let t = dot(&self.two_rho, v);
        if t % 2 != 0 {
            return Err(Error::Inconsistency(format!("<2rho, {v:?}> = {t} is odd")));
        }
        Ok(t / 2)
    }

    /// Pairing of `v` with the fundamental coweight `ϖ^∨_i` of the dual group
    /// (1-based), i.e. the coefficient of the `i`-th simple coroot of `G` in `v`.
    pub fn dual_fundamental_pairing(&self, i: usize, v: &WeightVec) -> Result<Ratio<i64>> {
        self.owns(v)?;
        if i == 0 || i > self.simple.len() {
            return Err(Error::Precondition(format!("fundamental index {i} out of range")));
        }
        let m = self.labels(v.coords());
        Ok((0..m.len()).map(|j| self.inv_cartan[i - 1][j] * m[j]).sum())
    }

    pub(crate) fn reflect_raw(&self, v: &mut [i64], k: usize) {
        let p = dot(&self.roots[k], v);
        if p != 0 {
            for (x, c) in v.iter_mut().zip(&self.coroots[k]) {
                *x -= p * c;
            }
        }
    }

    pub(crate) fn is_dominant_raw(&self, v: &[i64]) -> bool {
        self.simple.iter().all(|&k| dot(&self.roots[k], v) >= 0)
    }

    /// Reflect into the dominant chamber; also returns the simple reflections used.
    pub(crate) fn dominant_raw(&self, v: &[i64]) -> (Vec<i64>, Vec<usize>) {
        let mut v = v.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.simple.len()).find(|&i| dot(&self.roots[self.simple[i]], &v) < 0) {
            self.reflect_raw(&mut v, self.simple[i]);
            word.push(i);
        }
        (v, word)
    }

    pub fn is_dominant(&self, v: &WeightVec) -> bool {
        self.is_dominant_raw(v.coords())
    }

    /// The unique dominant element of the Weyl orbit of `v`.
    pub fn dominant_representative(&self, v: &WeightVec) -> WeightVec {
        self.wrap(self.dominant_raw(v.coords()).0)
    }

    /// Coefficients of `v` on the simple coroots and the central remainder.
    pub(crate) fn coroot_coefficients(&self, v: &[i64]) -> (Vec<Ratio<i64>>, bool) {
        let m = self.labels(v);
        let s = m.len();
        let c: Vec<Ratio<i64>> = (0..s).map(|i| (0..s).map(|j| self.inv_cartan[i][j] * m[j]).sum()).collect();
        // the remainder v - sum c_j alpha_j^vee must vanish for v to lie in the coroot span
        let spans = (0..self.rank).all(|k| {
            let part: Ratio<i64> = (0..s).map(|j| c[j] * self.coroots[self.simple[j]][k]).sum();
            part == Ratio::from_integer(v[k])
        });
        (c, spans)
    }

    pub(crate) fn in_coroot_lattice_raw(&self, v: &[i64]) -> bool {
        let (c, spans) = self.coroot_coefficients(v);
        spans && c.iter().all(|x| x.is_integer())
    }

    pub(crate) fn dominance_leq_raw(&self, a: &[i64], b: &[i64]) -> bool {
        let d: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
        let (c, spans) = self.coroot_coefficients(&d);
        spans && c.iter().all(|x| x.is_integer() && *x >= Ratio::from_integer(0))
    }

    /// Whether `v` lies in the coroot lattice.
    pub fn in_coroot_lattice(&self, v: &WeightVec) -> Result<bool> {
        self.owns(v)?;
        Ok(self.in_coroot_lattice_raw(v.coords()))
    }

    /// `a ⪯ b`: `b - a` is a nonnegative integer sum of simple coroots.
    pub fn dominance_leq(&self, a: &WeightVec, b: &WeightVec) -> Result<bool> {
        self.owns(a)?;
        self.owns(b)?;
        if !self.is_dominant(a) || !self.is_dominant(b) {
            return Err(Error::Precondition(format!("dominance order needs dominant inputs, got {a} and {b}")));
        }
        Ok(self.dominance_leq_raw(a.coords(), b.coords()))
    }

    pub(crate) fn dual_raw(&self, v: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.dominant_raw(&neg).0
    }

    /// `v* = -w_0 v`.
    pub fn dual_coweight(&self, v: &WeightVec) -> Result<WeightVec> {
        self.owns(v)?;
        if !self.is_dominant(v) {
            return Err(Error::Precondition(format!("dual coweight needs a dominant input, got {v}")));
        }
        Ok(self.wrap(self.dual_raw(v.coords())))
    }

    pub(crate) fn is_minuscule_raw(&self, v: &[i64]) -> bool {
        self.roots.iter().all(|a| dot(a, v).abs() <= 1)
    }

    /// Every root pairs with `v` in `{-1, 0, 1}`.
    pub fn is_minuscule(&self, v: &WeightVec) -> Result<bool> {
        self.owns(v)?;
        if !self.is_dominant(v) {
            return Err(Error::Precondition(format!("minuscule test needs a dominant input, got {v}")));
        }
        Ok(self.is_minuscule_raw(v.coords()))
    }

    /// The weights of `V_v` are exactly `Wv ∪ {0}`.
    pub fn is_quasi_minuscule(&self, v: &WeightVec) -> Result<bool> {
        self.owns(v)?;
        if !self.is_dominant(v) {
            return Err(Error::Precondition(format!("quasi-minuscule test needs a dominant input, got {v}")));
        }
        if v.is_zero() {
            return Err(Error::Precondition("quasi-minuscule test needs a nonzero input".into()));
        }
        let ws = crate::repring::weight_system(self, v)?;
        let orbit = crate::weyl::orbit(self, v)?;
        let mut expected: std::collections::BTreeSet<Vec<i64>> = orbit.into_iter().map(|w| w.into_coords()).collect();
        expected.insert(vec![0; self.rank]);
        let support: std::collections::BTreeSet<Vec<i64>> = ws.entries.keys().cloned().collect();
        Ok(support == expected)
    }

    /// 1-based indices `i` with `ϖ^∨_i` minuscule.
    pub fn minuscule_fundamentals(&self) -> Vec<usize> {
        let s = self.simple.len();
        (0..s)
            .filter(|&i| {
                // minuscule iff the highest root of its factor has coefficient 1 on alpha_i
                let f = self.factor_of_simple(i);
                let theta = &self.roots[self.factors[f].highest];
                let c = self.root_coefficients(theta);
                c[i] == 1
            })
            .map(|i| i + 1)
            .collect()
    }

    fn factor_of_simple(&self, i: usize) -> usize {
        self.factors
            .iter()
            .position(|f| (f.simple_offset..f.simple_offset + f.rank()).contains(&i))
            .expect("simple index in some factor")
    }

    /// Coefficients of a root of `G` on the simple roots.
    fn root_coefficients(&self, alpha: &[i64]) -> Vec<i64> {
        // pair with the fundamental coweights: <alpha, ϖ^∨_i> as rationals via the inverse Cartan matrix
        let s = self.simple.len();
        let pairs: Vec<i64> = self.simple.iter().map(|&k| dot(alpha, &self.coroots[k])).collect();
        // <alpha, alpha_j^vee> = sum_i c_i cartan[i][j]
        (0..s)
            .map(|i| {
                let x: Ratio<i64> = (0..s).map(|j| self.inv_cartan[j][i] * pairs[j]).sum();
                x.to_integer()
            })
            .collect()
    }

    /// Write `v` as a nonnegative combination of dominant minuscule coweights
    /// (plus a central coweight), or `None` if impossible.
    pub fn sum_of_minuscules_decomposition(&self, v: &WeightVec) -> Result<Option<Vec<(WeightVec, u32)>>> {
        self.owns(v)?;
        if !self.is_dominant(v) {
            return Err(Error::Precondition(format!("decomposition needs a dominant input, got {v}")));
        }
        let labels = self.labels(v.coords());
        let minuscule = self.minuscule_fundamentals();
        let mut rest = v.coords().to_vec();
        let mut out = Vec::new();
        for (i, &m) in labels.iter().enumerate().rev() {
            if m == 0 {
                continue;
            }
            let lift = match (&self.fundamental[i], minuscule.contains(&(i + 1))) {
                (Some(l), true) => l,
                _ => return Ok(None),
            };
            for (r, l) in rest.iter_mut().zip(lift) {
                *r -= m * l;
            }
            out.push((self.wrap(lift.clone()), m as u32));
        }
        if rest.iter().any(|&x| x != 0) {
            out.push((self.wrap(rest), 1));
        }
        Ok(Some(out))
    }

    /// Image of `v` in the coweight lattice of each adjoint simple factor.
    pub fn project_to_adjoint(&self, v: &WeightVec) -> Result<Vec<WeightVec>> {
        self.owns(v)?;
        let labels = self.labels(v.coords());
        self.factors
            .iter()
            .map(|f| {
                let d = RootDatum::get(&f.sc_label)?;
                d.weight(labels[f.simple_offset..f.simple_offset + f.rank()].to_vec())
            })
            .collect()
    }

    /// Datum of the simply connected cover of the dual group (equivalently the
    /// adjoint group of `G`), factor by factor.
    pub fn simply_connected(&self) -> Result<Arc<RootDatum>> {
        let label = self.factors.iter().map(|f| f.sc_label.as_str()).collect::<Vec<_>>().join("x");
        RootDatum::get(&label)
    }

    /// Image of `v` in the simply connected datum.
    pub fn to_simply_connected(&self, v: &WeightVec) -> Result<WeightVec> {
        self.owns(v)?;
        self.simply_connected()?.weight(self.labels(v.coords()))
    }

    /// Order of `v` in the lattice modulo the coroot lattice (`None` if infinite).
    pub fn order_mod_coroots(&self, v: &WeightVec) -> Result<Option<i64>> {
        self.owns(v)?;
        let (c, spans) = self.coroot_coefficients(v.coords());
        if !spans {
            return Ok(None);
        }
        Ok(Some(c.iter().fold(1i64, |acc, x| acc.lcm(x.denom()))))
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Whether `ϖ^∨_i` (1-based) of the adjoint simple group of type `h` is allowed:
/// self-dual and of order exactly 2 modulo the coroot lattice.
pub fn is_allowed_fundamental(h: CartanType, i: usize) -> Result<bool> {
    let d = RootDatum::adjoint_of(h);
    let w = d
        .fundamental_coweight(i)?
        .ok_or_else(|| Error::Inconsistency("adjoint lattice misses a fundamental coweight".into()))?;
    let self_dual = d.dual_coweight(&w)? == w;
    Ok(self_dual && d.order_mod_coroots(&w)? == Some(2))
}

/// Whether `ϖ^∨_i` (1-based) of the adjoint simple group of type `h` is minuscule.
pub fn is_minuscule_fundamental(h: CartanType, i: usize) -> Result<bool> {
    let d = RootDatum::adjoint_of(h);
    let w = d
        .fundamental_coweight(i)?
        .ok_or_else(|| Error::Inconsistency("adjoint lattice misses a fundamental coweight".into()))?;
    d.is_minuscule(&w)
}
