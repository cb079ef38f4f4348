// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::matrix::{axpy, kernel, unit_vector, Matrix, Vector};
use crate::linalg::scalar::{Field, Scalar};

/// A linear subspace of `K^n`, stored as its unique reduced row echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| unit_vector(field, ambient, i)).collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of `vectors`, validated against `field` and `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Result<Subspace> {
        let m = Matrix::new(field, ambient, vectors)?;
        Ok(Subspace::from_matrix(&m))
    }

    pub(crate) fn from_vectors_unchecked(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        Subspace::from_matrix(&Matrix::from_rows_unchecked(field, ambient, vectors))
    }

    pub fn from_matrix(m: &Matrix) -> Subspace {
        let (red, pivots) = m.rref();
        Subspace { field: m.field(), ambient: m.ncols(), basis: red.into_rows(), pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows_unchecked(self.field, self.ambient, self.basis.clone())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        v.iter().try_for_each(|s| self.field.check(s))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field.to_string(),
                found: other.field.to_string(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace: pivot coordinates cleared.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -&out[p];
                axpy(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis.iter().all(|v| self.reduce(v).iter().all(Scalar::is_zero)))
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::from_vectors_unchecked(self.field, self.ambient, rows))
    }

    /// `{x : v·x = 0 for all v}` under the standard pairing; `ann(ann(V)) = V`.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis_matrix())
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.annihilator().join(&other.annihilator())?.annihilator())
    }

    /// Standard basis vectors at the non-pivot columns; a canonical complement.
    pub fn echelon_complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Echelon basis vectors of `self` that extend a basis of `inner` (which must lie inside
    /// `self`) to a basis of `self`, chosen greedily in echelon order.
    pub fn complement_of(&self, inner: &Subspace) -> Result<Vec<Vector>> {
        self.check_compatible(inner)?;
        let mut acc = inner.clone();
        let mut chosen = Vec::new();
        for v in &self.basis {
            if !acc.contains(v)? {
                acc = acc.join(&Subspace::from_vectors_unchecked(self.field, self.ambient, vec![v.clone()]))?;
                chosen.push(v.clone());
            }
        }
        Ok(chosen)
    }

    /// Image under `v ↦ v·M`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.nrows() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.nrows() });
        }
        let rows = self.basis.iter().map(|v| m.left_mul(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors_unchecked(self.field, m.ncols(), rows))
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ambient_dim: usize,
            dim: usize,
            basis: &'a [Vector],
        }
        Repr { ambient_dim: self.ambient, dim: self.dim(), basis: &self.basis }.serialize(serializer)
    }
}

/// Membership test `v ∈ A`.
pub fn member(v: &[Scalar], a: &Subspace) -> Result<bool> {
    a.contains(v)
}

/// Intersection and sum of two subspaces of the same ambient space.
pub fn subspace_meet_join(a: &Subspace, b: &Subspace) -> Result<(Subspace, Subspace)> {
    Ok((a.meet(b)?, a.join(b)?))
}
