//! Dense matrices over exact rationals.
//!
//! Everything here is exact: rank, kernel, determinant, and inverse decide
//! affine independence and Gale duality with zero tolerance. Sizes are tiny
//! ((n+1) x (n+3) for the lifted support matrix), so plain Gaussian
//! elimination is the right tool.

use crate::rat::Rat;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RatMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>, // row-major
}

impl RatMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMat {
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RatMat {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.nrows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let mut out = Self::zeros(self.nrows, rhs.ncols);
        for r in 0..self.nrows {
            for c in 0..rhs.ncols {
                let mut acc = Rat::zero();
                for k in 0..self.ncols {
                    acc += self.at(r, k) * rhs.at(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.ncols, v.len(), "dimension mismatch");
        (0..self.nrows)
            .map(|r| {
                let mut acc = Rat::zero();
                for k in 0..self.ncols {
                    acc += self.at(r, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.ncols {
            if row == m.nrows {
                break;
            }
            let Some(p) = (row..m.nrows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.ncols {
                    let a = m.at(row, c).clone();
                    let b = m.at(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = Rat::one() / m.at(row, col).clone();
            for c in col..m.ncols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.nrows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.ncols {
                        let v = m.at(r, c) - &f * m.at(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel { v : A v = 0 }, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.ncols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.ncols];
            v[free] = Rat::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.nrows, self.ncols, "det of non-square matrix");
        let mut m = self.clone();
        let n = self.nrows;
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                det = -det;
                for c in 0..n {
                    let a = m.at(col, c).clone();
                    let b = m.at(p, c).clone();
                    m.set(col, c, b);
                    m.set(p, c, a);
                }
            }
            let piv = m.at(col, col).clone();
            det *= &piv;
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col) / &piv;
                for c in col..n {
                    let v = m.at(r, c) - &f * m.at(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.nrows, self.ncols, "inverse of non-square matrix");
        let n = self.nrows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, rr.at(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn m(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        // Lifted support matrix of the running 5-point planar example.
        let a = m(&[&[1, 1, 1, 1, 1], &[0, 1, 0, 1, 4], &[0, 0, 1, 4, 1]]);
        assert_eq!(a.rank(), 3);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), rat(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), RatMat::identity(2));

        let sing = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det(), rat(0));
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn rational_entries() {
        let a = RatMat::from_rows(vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 5), ratio(2, 7)]]);
        let d = a.det();
        assert_eq!(d, ratio(1, 2) * ratio(2, 7) - ratio(1, 3) * ratio(1, 5));
    }
}
