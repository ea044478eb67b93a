//! Small finite fields by lookup tables: prime fields and `F_4 = F_2[x]/(x²+x+1)`.

use crate::error::{Error, Result};

/// `F_q` with elements `0..q`; for `F_4`, `2` is `x` and `3` is `x + 1`.
#[derive(Clone, Debug)]
pub struct Field {
    q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Field {
    pub fn new(q: u8) -> Result<Field> {
        let n = q as usize;
        let (add, mul): (Vec<u8>, Vec<u8>) = match q {
            2 | 3 | 5 | 7 => {
                let add = (0..n * n).map(|k| ((k / n + k % n) % n) as u8).collect();
                let mul = (0..n * n).map(|k| ((k / n) * (k % n) % n) as u8).collect();
                (add, mul)
            }
            4 => {
                // bits (b1, b0) stand for b1 x + b0; reduce x² = x + 1
                let add = (0..16).map(|k| ((k / 4) ^ (k % 4)) as u8).collect();
                let mul = (0..16)
                    .map(|k| {
                        let (a, b) = (k / 4, k % 4);
                        let mut prod = 0u32;
                        for i in 0..2 {
                            if b >> i & 1 == 1 {
                                prod ^= (a as u32) << i;
                            }
                        }
                        if prod & 4 != 0 {
                            prod ^= 0b111;
                        }
                        prod as u8
                    })
                    .collect();
                (add, mul)
            }
            _ => return Err(Error::Capability(format!("field of order {q} is not supported"))),
        };
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u8).collect();
        let inv = (0..n).map(|a| if a == 0 { 0 } else { (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as u8 }).collect();
        Ok(Field { q, add, mul, neg, inv })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert_ne!(a, 0, "inverse of zero");
        self.inv[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2u8, 3, 4, 5, 7] {
            let f = Field::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)), "q={q}");
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
        assert!(Field::new(6).is_err());
    }

    #[test]
    fn f4_generator_has_order_three() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(f.mul(2, 2), 2), 1);
    }
}
