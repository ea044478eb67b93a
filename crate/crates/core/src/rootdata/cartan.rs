//! Cartan types, Cartan matrices and abstract root systems.
//!
//! Conventions: `cartan[i][j] = <alpha_i^vee, alpha_j>`, Bourbaki numbering,
//! positive roots in simple-root coordinates. Exceptional types are read from
//! the shipped tables under `data/`; classical types are generated.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `C2` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::Parse(format!("no Cartan type {family:?}{rank}")))
        }
    }

    /// Type of the dual root system (B and C swap).
    pub fn dual(self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        CartanType { family, rank: self.rank }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
            }
            Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
                // B: alpha_n short, C: alpha_n long
                if self.family == Family::B {
                    a[n - 1][n - 2] = -2;
                } else {
                    a[n - 2][n - 1] = -2;
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(&mut a, i, i + 1);
                }
                link(&mut a, n - 3, n - 1);
            }
            _ => return exceptional_table(self).cartan.clone(),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Parse(format!("bad Cartan type '{s}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type '{s}'")))?;
        CartanType::new(family, rank)
    }
}

/// An irreducible root system with an explicit Cartan matrix.
///
/// Keeping the matrix explicit lets a dual system keep the numbering of the
/// original one (F4 and G2 are self-dual only up to relabelling).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub ctype: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, scaled to coprime integers.
    pub lengths: Vec<i64>,
}

impl RootSystem {
    /// The root system of a Cartan type.
    pub fn of(ctype: CartanType) -> Self {
        match ctype.family {
            Family::E | Family::F | Family::G => exceptional_table(ctype).system(),
            _ => RootSystem::from_cartan(ctype, ctype.cartan_matrix()),
        }
    }

    /// Generate the positive roots from a Cartan matrix by root strings.
    pub fn from_cartan(ctype: CartanType, cartan: Vec<Vec<i64>>) -> Self {
        let positive = generate_positive_roots(&cartan);
        let lengths = simple_lengths(&cartan);
        RootSystem { ctype, cartan, positive, lengths }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// The dual root system, with the same numbering of simple roots.
    pub fn dual(&self) -> Self {
        let n = self.rank();
        let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect();
        let mut positive: Vec<Vec<i64>> = self.positive.iter().map(|c| self.coroot_coords(c)).collect();
        positive.sort_by_key(|c| (c.iter().sum::<i64>(), c.iter().map(|x| -x).collect::<Vec<_>>()));
        let lengths = simple_lengths(&cartan);
        RootSystem { ctype: self.ctype.dual(), cartan, positive, lengths }
    }

    /// `2 (x, y)` for vectors in simple-root coordinates.
    pub fn form2(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * y[j] * self.cartan[i][j] * self.lengths[i];
            }
        }
        s
    }

    /// Coordinates of the coroot of `root` in the basis of simple coroots.
    pub fn coroot_coords(&self, root: &[i64]) -> Vec<i64> {
        let norm2 = self.form2(root, root);
        root.iter()
            .zip(&self.lengths)
            .map(|(c, l)| {
                let num = 2 * c * l;
                assert_eq!(num % norm2, 0, "non-integral coroot coordinate");
                num / norm2
            })
            .collect()
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        (0..self.positive.len())
            .max_by_key(|&k| self.positive[k].iter().sum::<i64>())
            .expect("nonempty root system")
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
    let mut seen: HashSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut out: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut queue: VecDeque<Vec<i64>> = out.iter().cloned().collect();
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let mut p = 0;
            loop {
                let mut c = b.clone();
                c[i] -= p + 1;
                if seen.contains(&c) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pair: i64 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
            if p - pair > 0 {
                let mut c = b.clone();
                c[i] += 1;
                if seen.insert(c.clone()) {
                    out.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
    }
    out.sort_by_key(|c| (c.iter().sum::<i64>(), c.iter().map(|x| -x).collect::<Vec<_>>()));
    out
}

fn simple_lengths(cartan: &[Vec<i64>]) -> Vec<i64> {
    // |a_j|^2 = |a_i|^2 * a_ij / a_ji along each edge; start at 6 to stay integral.
    let n = cartan.len();
    let mut len = vec![0i64; n];
    len[0] = 6;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && len[j] == 0 {
                len[j] = len[i] * cartan[i][j] / cartan[j][i];
                queue.push_back(j);
            }
        }
    }
    let g = len.iter().fold(0, |g, &x| num_integer::gcd(g, x));
    len.iter().map(|x| x / g).collect()
}

/// Parsed form of a shipped exceptional table.
#[derive(Clone, Debug)]
pub struct ExceptionalTable {
    pub ctype: CartanType,
    pub cartan: Vec<Vec<i64>>,
    pub positive: Vec<Vec<i64>>,
    pub coweight_denominator: i64,
    /// Fundamental coweights in simple-coroot coordinates, times the denominator.
    pub coweights: Vec<Vec<i64>>,
}

impl ExceptionalTable {
    fn system(&self) -> RootSystem {
        RootSystem {
            ctype: self.ctype,
            cartan: self.cartan.clone(),
            positive: self.positive.clone(),
            lengths: simple_lengths(&self.cartan),
        }
    }
}

const E6_TABLE: &str = include_str!("../../data/e6.txt");
const E7_TABLE: &str = include_str!("../../data/e7.txt");
const E8_TABLE: &str = include_str!("../../data/e8.txt");
const F4_TABLE: &str = include_str!("../../data/f4.txt");
const G2_TABLE: &str = include_str!("../../data/g2.txt");

/// The shipped table for an exceptional type.
pub fn exceptional_table(ctype: CartanType) -> &'static ExceptionalTable {
    use std::sync::OnceLock;
    static TABLES: OnceLock<Vec<ExceptionalTable>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        [E6_TABLE, E7_TABLE, E8_TABLE, F4_TABLE, G2_TABLE]
            .iter()
            .map(|t| parse_table(t).expect("shipped table parses"))
            .collect()
    });
    tables
        .iter()
        .find(|t| t.ctype == ctype)
        .unwrap_or_else(|| panic!("no shipped table for {ctype}"))
}

/// Parse the plain-text datum schema (see `data/*.txt`).
pub fn parse_table(text: &str) -> Result<ExceptionalTable> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let bad = |what: &str| Error::Parse(format!("datum table: {what}"));
    let ints = |l: &str| -> Result<Vec<i64>> {
        l.split_whitespace()
            .map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("datum table: bad integer '{x}'"))))
            .collect()
    };
    let mut field = |key: &str| -> Result<String> {
        let l = lines.next().ok_or_else(|| bad(key))?;
        l.strip_prefix(key).map(|r| r.trim().to_string()).ok_or_else(|| bad(key))
    };
    let ctype: CartanType = field("type")?.parse()?;
    let rank: usize = field("rank")?.parse().map_err(|_| bad("rank"))?;
    field("cartan")?;
    let mut it = lines;
    let cartan = (0..rank)
        .map(|_| ints(it.next().ok_or_else(|| bad("cartan row"))?))
        .collect::<Result<Vec<_>>>()?;
    let count: usize = it
        .next()
        .and_then(|l| l.strip_prefix("positive_roots"))
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| bad("positive_roots"))?;
    let positive = (0..count)
        .map(|_| ints(it.next().ok_or_else(|| bad("root row"))?))
        .collect::<Result<Vec<_>>>()?;
    let den: i64 = it
        .next()
        .and_then(|l| l.strip_prefix("fundamental_coweights denominator"))
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| bad("fundamental_coweights"))?;
    let coweights = (0..rank)
        .map(|_| ints(it.next().ok_or_else(|| bad("coweight row"))?))
        .collect::<Result<Vec<_>>>()?;
    if cartan.iter().chain(&positive).chain(&coweights).any(|r| r.len() != rank) {
        return Err(bad("row length"));
    }
    Ok(ExceptionalTable { ctype, cartan, positive, coweight_denominator: den, coweights })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=6 {
            v.push(CartanType::new(Family::A, n).unwrap());
        }
        for n in 2..=6 {
            v.push(CartanType::new(Family::B, n).unwrap());
            v.push(CartanType::new(Family::C, n).unwrap());
        }
        for n in 4..=6 {
            v.push(CartanType::new(Family::D, n).unwrap());
        }
        for t in ["E6", "E7", "E8", "F4", "G2"] {
            v.push(t.parse().unwrap());
        }
        v
    }

    #[test]
    fn root_counts_match_known_values() {
        for t in all_types() {
            assert_eq!(RootSystem::of(t).positive.len(), t.positive_root_count(), "{t}");
        }
    }

    #[test]
    fn shipped_tables_agree_with_generation() {
        for t in ["E6", "E7", "E8", "F4", "G2"] {
            let t: CartanType = t.parse().unwrap();
            let table = exceptional_table(t);
            let generated = RootSystem::from_cartan(t, table.cartan.clone());
            assert_eq!(generated.positive, table.positive, "{t}");
            // coweight rows times the Cartan matrix give the scaled identity
            let n = t.rank;
            for i in 0..n {
                for k in 0..n {
                    let s: i64 = (0..n).map(|j| table.coweights[i][j] * table.cartan[j][k]).sum();
                    assert_eq!(s, if i == k { table.coweight_denominator } else { 0 });
                }
            }
        }
    }

    #[test]
    fn dual_swaps_b_and_c() {
        let b3 = RootSystem::of("B3".parse().unwrap());
        let c3 = RootSystem::of("C3".parse().unwrap());
        assert_eq!(b3.dual().cartan, c3.cartan);
        assert_eq!(b3.dual().positive, c3.positive);
        assert_eq!(b3.dual().dual(), b3);
    }

    #[test]
    fn g2_highest_root() {
        let g2 = RootSystem::of("G2".parse().unwrap());
        assert_eq!(g2.positive[g2.highest_root()], vec![3, 2]);
        assert_eq!(g2.lengths, vec![1, 3]);
    }

    #[test]
    fn weyl_orders() {
        let order = |s: &str| s.parse::<CartanType>().unwrap().weyl_order();
        assert_eq!(order("A2"), 6);
        assert_eq!(order("C2"), 8);
        assert_eq!(order("D4"), 192);
        assert_eq!(order("G2"), 12);
        assert_eq!(order("E7"), 2_903_040);
    }
}
