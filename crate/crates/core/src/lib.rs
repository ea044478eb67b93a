//! Exact structure constants for spherical Hecke algebras and representation
//! rings of split reductive groups, with brute-force and combinatorial
//! cross-checks.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod fiber;
pub mod harness;
pub mod hecke;
pub mod latoracle;
pub mod rgon;
pub mod rootdata;
pub mod repring;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{CartanType, RootDatum, WeightVec};
pub use weyl::{AffineElement, AffineWeyl, WeylElement, WeylGroup};
pub use harness::{CheckReport, Grid};
pub use hecke::{HeckeElement, QPoly};
pub use repring::{TensorDecomposition, WeightMultiset};
pub use rgon::RGonWitness;
