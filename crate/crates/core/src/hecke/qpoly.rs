//! Sparse polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial `Σ c_d q^d`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::monomial(0, c)
    }

    pub fn monomial(degree: u32, c: i64) -> Self {
        let mut p = QPoly::zero();
        p.add_term(degree, BigInt::from(c));
        p
    }

    /// Build from `(degree, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = QPoly::zero();
        for (d, c) in terms {
            p.add_term(d, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, degree: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|(d, x)| (*d, x * c)).collect() }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Horner from the top degree down
        let Some(top) = self.degree() else { return BigInt::zero() };
        let mut acc = BigInt::zero();
        for d in (0..=top).rev() {
            acc = acc * q + self.coeff(d);
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// `Σ_{w ∈ W} q^{ℓ(w)}` from a list of lengths.
    pub fn poincare<I: IntoIterator<Item = usize>>(lengths: I) -> QPoly {
        QPoly::from_terms(lengths.into_iter().map(|l| (l as u32, 1)))
    }

    /// Exact quotient by a monic divisor; errors if a remainder is left.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let dd = divisor.degree().ok_or_else(|| Error::Precondition("division by zero polynomial".into()))?;
        if !divisor.coeff(dd).is_one() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return Err(Error::Inconsistency(format!("{self} is not divisible by {divisor}")));
            }
            let c = rem.coeff(rd);
            let shift = rd - dd;
            quot.add_term(shift, c.clone());
            for (d, x) in &divisor.coeffs {
                rem.add_term(d + shift, -(x * &c));
            }
        }
        Ok(quot)
    }

    pub fn pow(&self, k: u32) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, _| &acc * self)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c.clone());
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = a.is_one();
            match (*d, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{a}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// `{"degree": coefficient}`; coefficients beyond 64 bits become strings.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.coeffs.len()))?;
        for (d, c) in &self.coeffs {
            match c.to_i64() {
                Some(x) => m.serialize_entry(&d.to_string(), &x)?,
                None => m.serialize_entry(&d.to_string(), &c.to_string())?,
            }
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(u32, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn arithmetic_and_display() {
        let p = poly(&[(5, 1), (1, -1)]);
        assert_eq!(p.to_string(), "q^5 - q");
        assert_eq!(p.eval_i64(2), BigInt::from(30));
        assert_eq!(p.degree(), Some(5));
        assert_eq!(QPoly::zero().degree(), None);
        let a = poly(&[(1, 1), (0, 1)]);
        assert_eq!((&a * &a).to_string(), "q^2 + 2q + 1");
        assert!((&a - &a).is_zero());
        assert_eq!(poly(&[(0, -3), (2, 2)]).to_string(), "2q^2 - 3");
    }

    #[test]
    fn exact_division() {
        let pw = poly(&[(0, 1), (1, 1)]);
        let p = poly(&[(2, 1), (0, -1)]);
        assert_eq!(p.div_exact(&pw).unwrap(), poly(&[(1, 1), (0, -1)]));
        assert!(matches!(poly(&[(2, 1)]).div_exact(&pw), Err(Error::Inconsistency(_))));
        assert!(QPoly::zero().div_exact(&pw).unwrap().is_zero());
    }

    #[test]
    fn serializes_as_degree_map() {
        let p = poly(&[(5, 1), (1, -1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"1":-1,"5":1}"#);
    }

    fn arb() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((0u32..6, -5i64..6), 0..5).prop_map(QPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb(), b in arb()) {
            let monic = &b.clone() + &QPoly::monomial(b.degree().map_or(0, |d| d + 1), 1);
            prop_assert_eq!((&a * &monic).div_exact(&monic).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb(), b in arb(), q in -4i64..5) {
            prop_assert_eq!((&a * &b).eval_i64(q), a.eval_i64(q) * b.eval_i64(q));
        }
    }
}
