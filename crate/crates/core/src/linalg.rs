//! Dense exact matrices and Gauss-Jordan elimination.
//!
//! Vectors are columns. A matrix with `rows x cols` entries maps
//! `F^cols -> F^rows`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = *v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(F::zero(), |acc, (a, b)| acc + *a * *b))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn scale(&self, s: F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| *a * s).collect(),
        }
    }

    pub fn hstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)];
            }
            for c in 0..rhs.cols {
                out[(r, self.cols + c)] = rhs[(r, c)];
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Sub-matrix with the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<F> {
        let mut out = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out[(r, j)] = self[(r, c)];
            }
        }
        out
    }

    /// Sub-matrix with the selected rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Matrix<F>]) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = F::one() / self[(row, col)];
            for c in col..self.cols {
                self[(row, c)] = self[(row, c)] * inv;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self[(r, col)];
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = self[(row, c)];
                    if !v.is_zero() {
                        self[(r, c)] = self[(r, c)] - factor * v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref().len()
    }

    /// Basis of the null space, as the columns of a `cols x k` matrix.
    pub fn kernel(&self) -> Matrix<F> {
        let mut m = self.clone();
        let pivots = if self.rows == 0 { Vec::new() } else { m.rref() };
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                basis[(p, k)] = -m[(i, f)];
            }
        }
        basis
    }

    /// Indices of a maximal set of linearly independent columns, chosen greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        if self.rows == 0 {
            return Vec::new();
        }
        self.clone().rref()
    }

    /// Columns spanning the same space as `self`, linearly independent.
    pub fn column_basis(&self) -> Matrix<F> {
        self.select_columns(&self.independent_columns())
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let mut aug = self.hstack(&Self::identity(n));
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_columns(&cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// A subspace `U` of `F^n` together with a complement `C` spanned by unit
/// vectors, and the inverse of `[U | C]`.
///
/// The first `dim U` rows of `inverse` give coordinates with respect to the
/// basis of `U`; the remaining rows project onto the complement.
#[derive(Clone)]
pub struct Splitting<F> {
    pub sub: Matrix<F>,
    pub complement: Matrix<F>,
    inverse: Matrix<F>,
}

impl<F: Field> Splitting<F> {
    /// `spanning` may have dependent columns; they are pruned.
    pub fn new(ambient: usize, spanning: &Matrix<F>) -> Self {
        assert_eq!(spanning.rows(), ambient);
        let sub = spanning.column_basis();
        let k = sub.cols();
        let mut aug = sub.hstack(&Matrix::identity(ambient));
        let pivots = aug.rref();
        debug_assert!(pivots[..k].iter().copied().eq(0..k));
        let complement_units: Vec<usize> = pivots[k..].iter().map(|&p| p - k).collect();
        let mut complement = Matrix::zeros(ambient, complement_units.len());
        for (j, &u) in complement_units.iter().enumerate() {
            complement[(u, j)] = F::one();
        }
        let full = sub.hstack(&complement);
        let inverse = full.inverse().expect("basis extension is invertible");
        Splitting {
            sub,
            complement,
            inverse,
        }
    }

    pub fn ambient(&self) -> usize {
        self.sub.rows()
    }

    pub fn dim(&self) -> usize {
        self.sub.cols()
    }

    pub fn codim(&self) -> usize {
        self.complement.cols()
    }

    /// `dim U x n` matrix sending a vector of `U` to its coordinates.
    pub fn sub_coordinates(&self) -> Matrix<F> {
        let rows: Vec<usize> = (0..self.dim()).collect();
        self.inverse.select_rows(&rows)
    }

    /// `codim x n` matrix of the projection `F^n -> F^n / U`.
    pub fn quotient_projection(&self) -> Matrix<F> {
        let rows: Vec<usize> = (self.dim()..self.ambient()).collect();
        self.inverse.select_rows(&rows)
    }
}

/// Coordinates with respect to a fixed basis (full column rank), read off
/// from an invertible square block of selected rows.
#[derive(Clone)]
pub struct Coordinates<F> {
    rows: Vec<usize>,
    block_inverse: Matrix<F>,
}

impl<F: Field> Coordinates<F> {
    pub fn new(basis: &Matrix<F>) -> Self {
        let rows = basis.transpose().independent_columns();
        assert_eq!(rows.len(), basis.cols(), "basis columns are dependent");
        let block_inverse = basis
            .select_rows(&rows)
            .inverse()
            .expect("independent rows form an invertible block");
        Coordinates { rows, block_inverse }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `v`; `v` must lie in the span of the basis.
    pub fn of(&self, v: &[F]) -> Vec<F> {
        let picked: Vec<F> = self.rows.iter().map(|&r| v[r]).collect();
        self.block_inverse.mul_vec(&picked)
    }
}
