//! Minimal exact linear algebra over the rationals: dense matrices,
//! Gaussian elimination, and span membership tests. Just enough to state
//! moment-map relations and check subspace invariance.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rat;

/// Dense rational matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::from_integer(1.into());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn trace(&self) -> Rat {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= y;
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon basis over the rationals; vectors are rows.
pub struct RowSpace {
    dim: usize,
    // reduced rows with their pivot columns
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis, returning the residue.
    fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// True if `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(v.to_vec()).iter().all(Rat::is_zero)
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v.to_vec());
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let lead = v[pivot].clone();
                for x in v.iter_mut() {
                    *x /= &lead;
                }
                self.rows.push((pivot, v));
                true
            }
        }
    }
}

/// Exact determinant by fraction-full Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let one = Rat::from_integer(1.into());
    let mut det = one.clone();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn product_and_trace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), rat_int(5));
    }

    #[test]
    fn determinant_values() {
        assert_eq!(
            determinant(alloc::vec![
                alloc::vec![rat_int(2), rat_int(1)],
                alloc::vec![rat_int(1), rat_int(2)],
            ]),
            rat_int(3)
        );
        assert_eq!(
            determinant(alloc::vec![
                alloc::vec![rat_int(1), rat_int(2)],
                alloc::vec![rat_int(2), rat_int(4)],
            ]),
            rat_int(0)
        );
    }

    #[test]
    fn row_space_membership() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&[rat_int(1), rat_int(1), rat_int(0)]));
        assert!(s.insert(&[rat_int(0), rat_int(1), rat_int(1)]));
        assert!(!s.insert(&[rat_int(1), rat_int(2), rat_int(1)]));
        assert!(s.contains(&[rat(1, 2), rat_int(1), rat(1, 2)]));
        assert!(!s.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
        assert_eq!(s.rank(), 2);
    }
}
