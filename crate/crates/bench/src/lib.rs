//! Inputs shared by the benchmarks in `benches/`.

use std::sync::Arc;

use heckerep::{RootDatum, WeightVec};

/// A labelled instance: datum, coweights, target.
pub struct Case {
    pub name: &'static str,
    pub datum: Arc<RootDatum>,
    pub mus: Vec<WeightVec>,
    pub lambda: WeightVec,
}

fn case(name: &'static str, label: &str, mus: &[&str], lambda: &str) -> Case {
    let datum = RootDatum::get(label).expect("known label");
    let mus = mus.iter().map(|m| datum.parse_weight(m).expect("weight")).collect();
    let lambda = datum.parse_weight(lambda).expect("weight");
    Case { name, datum, mus, lambda }
}

/// Minuscule instances small enough for every engine.
pub fn minuscule_cases() -> Vec<Case> {
    vec![
        case("gl3_r4", "GL3", &["1,0,0", "1,0,0", "1,1,0", "1,1,0"], "2,2,1"),
        case("c2_r4", "C2", &["1,0", "1,0", "1,0", "1,0"], "0"),
        case("d4sc_r3", "D4sc", &["w1", "w3", "w4"], "0"),
    ]
}

/// Lattice oracle instances, `GL_n` only.
pub fn oracle_cases() -> Vec<Case> {
    vec![
        case("gl2_r4", "GL2", &["1,0", "1,0", "1,0", "1,0"], "2,2"),
        case("gl3_r3", "GL3", &["1,0,0", "1,1,0", "1,0,0"], "2,1,1"),
    ]
}

/// Quasi-minuscule and mixed instances for the Hecke engines.
pub fn hecke_cases() -> Vec<Case> {
    vec![
        case("so5_qm_r3", "C2", &["1,1", "1,1", "1,1"], "0"),
        case("c3_r3", "C3", &["1,0,0", "1,1,0", "1,1,1"], "1,1,1"),
        case("g2_r3", "G2", &["w1", "w1", "w2"], "0"),
    ]
}
