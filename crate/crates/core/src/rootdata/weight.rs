//! Integer coweight vectors tagged with the datum they belong to.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A coweight of `G` (equivalently a weight of the dual group) in the
/// coordinates of a fixed root datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec {
    coords: Vec<i64>,
    datum: u64,
}

impl WeightVec {
    pub(crate) fn from_parts(coords: Vec<i64>, datum: u64) -> Self {
        WeightVec { coords, datum }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    /// Identity token of the owning datum.
    pub fn datum_id(&self) -> u64 {
        self.datum
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &WeightVec) -> Result<()> {
        if self.datum != other.datum {
            return Err(Error::DatumMismatch(self.datum.to_string(), other.datum.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &WeightVec) -> Result<WeightVec> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(WeightVec { coords, datum: self.datum })
    }

    pub fn sub(&self, other: &WeightVec) -> Result<WeightVec> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(WeightVec { coords, datum: self.datum })
    }

    pub fn neg(&self) -> WeightVec {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> WeightVec {
        WeightVec { coords: self.coords.iter().map(|c| k * c).collect(), datum: self.datum }
    }

    /// Componentwise sum of a nonempty list.
    pub fn sum(list: &[WeightVec]) -> Result<WeightVec> {
        let (first, rest) = list
            .split_first()
            .ok_or_else(|| Error::Precondition("empty coweight list".into()))?;
        rest.iter().try_fold(first.clone(), |acc, v| acc.add(v))
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_componentwise() {
        let a = WeightVec::from_parts(vec![1, 0, -2], 7);
        let b = WeightVec::from_parts(vec![0, 3, 1], 7);
        assert_eq!(a.add(&b).unwrap().coords(), &[1, 3, -1]);
        assert_eq!(a.sub(&b).unwrap().coords(), &[1, -3, -3]);
        assert_eq!(a.scale(3).coords(), &[3, 0, -6]);
        assert_eq!(a.neg().coords(), &[-1, 0, 2]);
    }

    #[test]
    fn mismatched_datum_is_rejected() {
        let a = WeightVec::from_parts(vec![1, 0], 1);
        let b = WeightVec::from_parts(vec![1, 0], 2);
        assert!(matches!(a.add(&b), Err(Error::DatumMismatch(..))));
    }

    #[test]
    fn serializes_as_integer_array() {
        let a = WeightVec::from_parts(vec![1, -1], 3);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,-1]");
    }
}
