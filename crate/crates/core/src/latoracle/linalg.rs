//! Subspaces of `F_q^m` in reduced row echelon form, and Grassmannian enumeration.

use super::field::Field;

/// A subspace stored by its unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn span<I: IntoIterator<Item = Vec<u8>>>(f: &Field, ambient: usize, vectors: I) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(f, v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn reduce(&self, f: &Field, v: &mut [u8]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for j in p..self.ambient {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
    }

    pub fn contains(&self, f: &Field, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, f: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(f, r))
    }

    /// Adds `v` to the span; false if it was already there.
    pub fn insert(&mut self, f: &Field, mut v: Vec<u8>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(f, &mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, s);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for j in p..self.ambient {
                    row[j] = f.sub(row[j], f.mul(c, v[j]));
                }
            }
        }
        let at = self.pivots.partition_point(|&x| x < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// All `k`-dimensional subspaces of `F_q^m`, each as its echelon basis.
pub fn grassmannian(f: &Field, m: usize, k: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let q = f.order();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let pv = &pivots;
                ((pv[i] + 1)..m).filter(move |c| !pv.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u8; free.len()];
        loop {
            let mut rows = vec![vec![0u8; m]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(i, c), &x) in free.iter().zip(&digits) {
                rows[i][c] = x;
            }
            out.push(rows);
            let mut pos = 0;
            while pos < digits.len() && digits[pos] + 1 == q {
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
            digits[pos] += 1;
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < m - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}
