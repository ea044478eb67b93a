//! Lattices in `F_q((t))^n` as column spans of truncated power series, and
//! their relative position via Smith normal form over `F_q[[t]]`.

use super::field::Field;
use super::linalg::Subspace;
use crate::error::{Error, Result};

/// Power series truncated at `t^prec`, coefficients low degree first.
type Series = Vec<u8>;

fn series_mul(f: &Field, a: &[u8], b: &[u8]) -> Series {
    let prec = a.len();
    let mut out = vec![0u8; prec];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().take(prec - i).enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

fn series_sub(f: &Field, a: &[u8], b: &[u8]) -> Series {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

fn valuation(a: &[u8]) -> Option<usize> {
    a.iter().position(|&x| x != 0)
}

/// Inverse of a series with nonzero constant term.
fn series_inv(f: &Field, a: &[u8]) -> Series {
    let prec = a.len();
    let c0 = f.inv(a[0]);
    let mut out = vec![0u8; prec];
    out[0] = c0;
    for k in 1..prec {
        let mut s = 0u8;
        for j in 1..=k {
            s = f.add(s, f.mul(a[j], out[k - j]));
        }
        out[k] = f.neg(f.mul(s, c0));
    }
    out
}

type Matrix = Vec<Vec<Series>>;

fn det(f: &Field, m: &Matrix, prec: usize) -> Series {
    let n = m.len();
    match n {
        0 => {
            let mut one = vec![0u8; prec];
            if prec > 0 {
                one[0] = 1;
            }
            one
        }
        1 => m[0][0].clone(),
        _ => {
            let mut acc = vec![0u8; prec];
            for j in 0..n {
                let minor: Matrix = (1..n).map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect()).collect();
                let term = series_mul(f, &m[0][j], &det(f, &minor, prec));
                acc = if j % 2 == 0 {
                    acc.iter().zip(&term).map(|(&x, &y)| f.add(x, y)).collect()
                } else {
                    series_sub(f, &acc, &term)
                };
            }
            acc
        }
    }
}

fn adjugate(f: &Field, m: &Matrix, prec: usize) -> Matrix {
    let n = m.len();
    let mut out = vec![vec![vec![0u8; prec]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Matrix = (0..n).filter(|&r| r != j).map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c].clone()).collect()).collect();
            let d = det(f, &minor, prec);
            out[i][j] = if (i + j) % 2 == 0 { d } else { d.iter().map(|&x| f.neg(x)).collect() };
        }
    }
    out
}

fn mat_mul(f: &Field, a: &Matrix, b: &Matrix, prec: usize) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![vec![0u8; prec]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let p = series_mul(f, &a[i][k], &b[k][j]);
                out[i][j] = out[i][j].iter().zip(&p).map(|(&x, &y)| f.add(x, y)).collect();
            }
        }
    }
    out
}

/// `t^shift` times the `F_q[[t]]`-span of the columns of `matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    shift: i64,
    /// `matrix[row][col]`, every entry truncated at `prec`.
    matrix: Matrix,
    prec: usize,
}

impl Lattice {
    pub fn new(matrix: Vec<Vec<Vec<u8>>>, shift: i64, prec: usize) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Precondition("lattice basis must be square".into()));
        }
        let matrix = matrix
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|mut s| {
                        s.resize(prec, 0);
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(Lattice { shift, matrix, prec })
    }

    /// `O^n`.
    pub fn standard(n: usize, prec: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = vec![0u8; prec];
                        if i == j && prec > 0 {
                            s[0] = 1;
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Lattice { shift: 0, matrix, prec }
    }

    /// `t^k L`.
    pub fn scaled(&self, k: i64) -> Self {
        Lattice { shift: self.shift + k, ..self.clone() }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `g L` for a matrix `g` over `F_q[[t]]`.
    pub fn transform(&self, f: &Field, g: &[Vec<Vec<u8>>]) -> Result<Self> {
        let g = Lattice::new(g.to_vec(), 0, self.prec)?;
        Ok(Lattice { shift: self.shift, matrix: mat_mul(f, &g.matrix, &self.matrix, self.prec), prec: self.prec })
    }

    /// The lattice `L` with `t^{big} O^n ⊆ t L` whose image in
    /// `(F_q[t]/t^big)^n` is `s`; coordinate `(j, a)` of `s` is at `j * big + a`.
    pub fn from_subspace(f: &Field, n: usize, big: usize, s: &Subspace) -> Result<Self> {
        let mut tl = Subspace::span(f, n * big, s.rows().iter().map(|r| t_shift(r, n, big)));
        let gens: Vec<&Vec<u8>> = s.rows().iter().filter(|r| tl.insert(f, (*r).clone())).collect();
        if gens.len() != n {
            return Err(Error::Precision(big));
        }
        // lifts are exact polynomials, so a generous precision keeps every
        // elementary divisor visible
        let prec = (n + 1) * big + 1;
        let matrix = (0..n)
            .map(|j| {
                gens.iter()
                    .map(|g| {
                        let mut s = g[j * big..(j + 1) * big].to_vec();
                        s.resize(prec, 0);
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(Lattice { shift: 0, matrix, prec })
    }
}

/// Multiplication by `t` on `(F_q[t]/t^big)^n`.
pub fn t_shift(v: &[u8], n: usize, big: usize) -> Vec<u8> {
    let mut out = vec![0u8; n * big];
    for j in 0..n {
        for a in 0..big - 1 {
            out[j * big + a + 1] = v[j * big + a];
        }
    }
    out
}

/// `inv(L, L')`: exponents `λ` with `L' = g t^λ O^n` whenever `L = g O^n`,
/// sorted decreasingly.
pub fn relative_position(f: &Field, l: &Lattice, lp: &Lattice) -> Result<Vec<i64>> {
    let n = l.rank();
    if lp.rank() != n {
        return Err(Error::Precondition("lattices of different rank".into()));
    }
    let prec = l.prec.min(lp.prec);
    let trunc = |m: &Matrix| -> Matrix { m.iter().map(|r| r.iter().map(|s| s[..prec].to_vec()).collect()).collect() };
    let (g, gp) = (trunc(&l.matrix), trunc(&lp.matrix));
    let v = valuation(&det(f, &g, prec)).ok_or(Error::Precision(prec))? as i64;
    let mut m = mat_mul(f, &adjugate(f, &g, prec), &gp, prec);
    // Smith normal form over the truncated ring
    let mut exps = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if let Some(e) = valuation(&m[i][j]) {
                    if best.is_none_or(|b| e < b.2) {
                        best = Some((i, j, e));
                    }
                }
            }
        }
        let (bi, bj, e) = best.ok_or(Error::Precision(prec))?;
        m.swap(k, bi);
        for row in m.iter_mut() {
            row.swap(k, bj);
        }
        let unit_inv = series_inv(f, &m[k][k][e..]);
        for i in k + 1..n {
            if valuation(&m[i][k]).is_none() {
                continue;
            }
            // m[i][k] = t^e y, so subtract y u^{-1} times row k
            let mut factor = series_mul(f, &m[i][k][e..], &unit_inv);
            factor.resize(prec, 0);
            for j in k..n {
                let p = series_mul(f, &factor, &m[k][j]);
                m[i][j] = series_sub(f, &m[i][j], &p);
            }
        }
        for j in k + 1..n {
            if valuation(&m[k][j]).is_none() {
                continue;
            }
            let mut factor = series_mul(f, &m[k][j][e..], &unit_inv);
            factor.resize(prec, 0);
            for i in k..n {
                let p = series_mul(f, &factor, &m[i][k]);
                m[i][j] = series_sub(f, &m[i][j], &p);
            }
        }
        exps.push(e as i64 - v + lp.shift - l.shift);
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    Ok(exps)
}
