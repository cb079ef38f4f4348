// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::scalar::{Field, Scalar};
use crate::linalg::subspace::Subspace;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `a += c·b`
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(c * y);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: Field) -> Scalar {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| acc + x * y)
}

/// Linear combination `Σ cᵢ·vᵢ` of equal-length vectors.
pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// Dense matrix over one exact field, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    ncols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    /// Builds a matrix, checking row lengths and that every entry lives in `field`.
    pub fn new(field: Field, ncols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, found: row.len() });
            }
            for s in row {
                field.check(s)?;
            }
        }
        Ok(Matrix { field, ncols, rows })
    }

    /// Builds a matrix whose field is read off the entries.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Matrix> {
        let first = rows
            .iter()
            .flat_map(|r| r.iter())
            .next()
            .ok_or(Error::ZeroInput("matrix without entries"))?;
        let field = first.field();
        let ncols = rows[0].len();
        Matrix::new(field, ncols, rows)
    }

    pub(crate) fn from_rows_unchecked(field: Field, ncols: usize, rows: Vec<Vector>) -> Matrix {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix { field, ncols, rows }
    }

    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Matrix {
        Matrix { field, ncols, rows: vec![zero_vector(field, ncols); nrows] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        Matrix { field, ncols: n, rows: (0..n).map(|i| unit_vector(field, n, i)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        Matrix { field: self.field, ncols: self.rows.len(), rows }
    }

    /// Row vector times matrix, `v·M`.
    pub fn left_mul(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.nrows() {
            return Err(Error::DimensionMismatch { expected: self.nrows(), found: v.len() });
        }
        Ok(combine(self.field, self.ncols, v, &self.rows))
    }

    /// Matrix times column vector, `M·v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: v.len() });
        }
        Ok(self.rows.iter().map(|r| dot(r, v, self.field)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.nrows() });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| combine(self.field, other.ncols, r, &other.rows))
            .collect();
        Ok(Matrix { field: self.field, ncols: other.ncols, rows })
    }

    /// Reduced row echelon form (zero rows dropped) together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vector> = self.rows.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.ncols {
            let Some(found) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, found);
            let inv = rows[top][col].inv().expect("nonzero pivot");
            let pivot_row: Vector = rows[top].iter().map(|x| x * &inv).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != top && !row[col].is_zero() {
                    let c = -&row[col];
                    axpy(row, &c, &pivot_row);
                }
            }
            rows[top] = pivot_row;
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        (Matrix { field: self.field, ncols: self.ncols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(Error::DimensionMismatch { expected: n, found: self.ncols });
        }
        let augmented: Vec<Vector> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend(unit_vector(self.field, n, i));
                row
            })
            .collect();
        let (red, pivots) = Matrix { field: self.field, ncols: 2 * n, rows: augmented }.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DependentBasis);
        }
        let rows = red.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(Matrix { field: self.field, ncols: n, rows })
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The null space `{v : M·v = 0}` in canonical echelon form.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, pivots) = m.rref();
    let field = m.field();
    let n = m.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vector> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = unit_vector(field, n, free);
            for (row, &p) in red.rows().iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect();
    Subspace::from_vectors_unchecked(field, n, basis)
}
