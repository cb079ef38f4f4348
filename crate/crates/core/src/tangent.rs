// SPDX-License-Identifier: Apache-2.0

//! The tangent map of the Fano scheme at a plane `E ⊂ X`, and the objects derived from it
//! for lines: `Π ⊂ W/E`, the cone tangent spaces, and the quotient pencil
//! `L = ker σ / (E*⊗Π) ⊆ K²⊗K^m`.
//!
//! Coordinates: a tangent vector `Σ αⁱ⊗w̄ᵢ ∈ E*⊗(W/E)` is the concatenation of the
//! coordinate rows `w̄₀, …, w̄_k` (each of length `n−k`) in the frame's complement basis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{monomials, BinaryForm, MultiForm};
use crate::linalg::{combine, is_zero_vector, kernel, zero_vector, Field, Matrix, Scalar, Subspace, Vector};

/// `X = Z(P) ⊂ ℙⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypersurface {
    form: MultiForm,
}

impl Hypersurface {
    pub fn new(form: MultiForm) -> Result<Hypersurface> {
        if form.is_zero() {
            return Err(Error::ZeroInput("hypersurface needs a nonzero form"));
        }
        if form.degree() == 0 {
            return Err(Error::InvalidInput("hypersurface of degree 0".into()));
        }
        if form.nvars() < 2 {
            return Err(Error::InvalidInput("need at least two variables".into()));
        }
        Ok(Hypersurface { form })
    }

    pub fn form(&self) -> &MultiForm {
        &self.form
    }

    /// Dimension of the ambient projective space.
    pub fn n(&self) -> usize {
        self.form.nvars() - 1
    }

    pub fn degree(&self) -> usize {
        self.form.degree()
    }

    pub fn field(&self) -> Field {
        self.form.field()
    }

    pub fn contains_point(&self, y: &[Scalar]) -> Result<bool> {
        Ok(self.form.evaluate(y)?.is_zero())
    }

    pub fn contains_plane(&self, frame: &PlaneFrame) -> Result<bool> {
        Ok(self.form.substitute(frame.plane())?.is_zero())
    }
}

/// A `(k+1)`-plane `E ⊂ W` with a basis, a complement basis of `W/E` and the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneFrame {
    field: Field,
    plane: Vec<Vector>,
    complement: Vec<Vector>,
    /// Inverse of the matrix whose rows are `plane ++ complement`.
    inverse: Matrix,
}

/// Lines are the `k = 1` frames.
pub type LineFrame = PlaneFrame;

impl PlaneFrame {
    /// Frame with the canonical complement: standard basis vectors at the non-pivot columns
    /// of the echelon form of `E`.
    pub fn new(plane: Vec<Vector>) -> Result<PlaneFrame> {
        let first = plane.first().ok_or(Error::ZeroInput("empty plane basis"))?;
        let field = first.first().ok_or(Error::ZeroInput("zero-length vectors"))?.field();
        let ambient = first.len();
        let span = Subspace::span(field, ambient, plane.clone())?;
        if span.dim() < plane.len() {
            return Err(Error::DependentBasis);
        }
        let complement = span
            .echelon_complement()
            .into_iter()
            .map(|j| crate::linalg::unit_vector(field, ambient, j))
            .collect();
        PlaneFrame::with_complement(plane, complement)
    }

    pub fn line(e1: Vector, e2: Vector) -> Result<LineFrame> {
        PlaneFrame::new(vec![e1, e2])
    }

    /// Frame with caller-chosen complement representatives.
    pub fn with_complement(plane: Vec<Vector>, complement: Vec<Vector>) -> Result<PlaneFrame> {
        let mut rows = plane.clone();
        rows.extend(complement.iter().cloned());
        let m = Matrix::from_rows(rows)?;
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch { expected: m.ncols(), found: m.nrows() });
        }
        let inverse = m.inverse()?;
        Ok(PlaneFrame { field: m.field(), plane, complement, inverse })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Projective dimension of the plane.
    pub fn k(&self) -> usize {
        self.plane.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.inverse.ncols()
    }

    pub fn plane(&self) -> &[Vector] {
        &self.plane
    }

    pub fn complement(&self) -> &[Vector] {
        &self.complement
    }

    pub fn e1(&self) -> &[Scalar] {
        &self.plane[0]
    }

    pub fn e2(&self) -> &[Scalar] {
        &self.plane[1]
    }

    /// Coordinates of `v` in the basis `plane ++ complement`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vector> {
        self.inverse.left_mul(v)
    }

    pub fn plane_coords(&self, v: &[Scalar]) -> Result<Vector> {
        Ok(self.coordinates(v)?[..self.plane.len()].to_vec())
    }

    /// Class of `v` in `W/E`, in the complement basis.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Result<Vector> {
        Ok(self.coordinates(v)?[self.plane.len()..].to_vec())
    }

    /// The dual basis `α⁰, …, α^k` of `E*`, extended to `W` by zero on the complement.
    pub fn dual_basis(&self) -> Vec<Vector> {
        (0..self.plane.len()).map(|i| self.inverse.column(i)).collect()
    }

    /// `Σ w̄ⱼ·complementⱼ`.
    pub fn lift(&self, wbar: &[Scalar]) -> Vector {
        combine(self.field, self.ambient_dim(), wbar, &self.complement)
    }

    pub fn point_on_plane(&self, coords: &[Scalar]) -> Vector {
        combine(self.field, self.ambient_dim(), coords, &self.plane)
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(self.field, self.ambient_dim(), self.plane.clone()).expect("valid plane")
    }
}

fn require_line(frame: &PlaneFrame) -> Result<()> {
    if frame.k() != 1 {
        return Err(Error::InvalidInput(format!("expected a line frame, got a {}-plane", frame.k())));
    }
    Ok(())
}

fn check_frame(x: &Hypersurface, frame: &PlaneFrame) -> Result<()> {
    if frame.field() != x.field() {
        return Err(Error::FieldMismatch { expected: x.field().to_string(), found: frame.field().to_string() });
    }
    if frame.ambient_dim() != x.n() + 1 {
        return Err(Error::DimensionMismatch { expected: x.n() + 1, found: frame.ambient_dim() });
    }
    if !x.contains_plane(frame)? {
        return Err(Error::PlaneNotContained);
    }
    Ok(())
}

/// Matrix of `σ_(X,E)`: row `i·(n−k)+j` is `αⁱ ∘ (wⱼ ⌟ P)|_E` in the monomial basis of
/// `S^d E*` (lexicographically descending; for lines `s^d, …, t^d`).
pub fn sigma(x: &Hypersurface, frame: &PlaneFrame) -> Result<Matrix> {
    check_frame(x, frame)?;
    let p = x.form();
    let nplane = frame.plane().len();
    let d = p.degree();
    let basis = monomials(nplane, d);
    let mut rows = Vec::with_capacity(nplane * frame.complement().len());
    let restricted: Vec<MultiForm> = frame
        .complement()
        .iter()
        .map(|w| p.contract(w)?.substitute(frame.plane()))
        .collect::<Result<_>>()?;
    for i in 0..nplane {
        let alpha = MultiForm::variable(p.field(), nplane, i);
        for f in &restricted {
            rows.push(alpha.mul(f)?.coefficient_vector(&basis));
        }
    }
    Matrix::new(p.field(), basis.len(), rows)
}

/// `T_E F_k(X) = ker σ`, inside `E*⊗(W/E)`.
pub fn tangent_space(x: &Hypersurface, frame: &PlaneFrame) -> Result<Subspace> {
    Ok(kernel(&sigma(x, frame)?.transpose()))
}

/// Everything computed from `σ` at a line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub n: usize,
    pub degree: usize,
    #[serde(skip)]
    pub sigma_matrix: Matrix,
    pub kernel: Subspace,
    pub pi: Subspace,
    pub m: usize,
    /// Columns of `W/E` (complement coordinates) spanning the chosen complement of `Π`.
    pub pi_complement: Vec<usize>,
    pub pencil: Subspace,
    pub tangent_dim: usize,
    /// `(wⱼ ⌟ P)|_E` for the frame's complement vectors.
    pub restricted: Vec<BinaryForm>,
}

impl TangentReport {
    pub fn dim_pi(&self) -> usize {
        self.pi.dim()
    }

    /// `(w ⌟ P)|_E` for a class `w̄ ∈ W/E` given in complement coordinates.
    pub fn restricted_contraction(&self, wbar: &[Scalar]) -> BinaryForm {
        let field = self.pi.field();
        let zero = BinaryForm::zero(field, self.degree - 1);
        wbar.iter()
            .zip(&self.restricted)
            .filter(|(c, _)| !c.is_zero())
            .fold(zero, |acc, (c, f)| acc.add(&f.scale(c)).expect("same degree"))
    }

    /// Embeds `u ∈ K^m = (W/E)/Π` into `W/E` through the chosen complement of `Π`.
    pub fn lift_from_quotient(&self, u: &[Scalar]) -> Vector {
        let field = self.pi.field();
        let mut out = zero_vector(field, self.n - 1);
        for (c, &j) in u.iter().zip(&self.pi_complement) {
            out[j] = c.clone();
        }
        out
    }

    /// Image of `w̄ ∈ W/E` in `K^m`.
    pub fn project_to_quotient(&self, wbar: &[Scalar]) -> Vector {
        let reduced = self.pi.reduce(wbar);
        self.pi_complement.iter().map(|&j| reduced[j].clone()).collect()
    }

    /// `E*⊗Π` inside `E*⊗(W/E)`.
    pub fn dual_tensor_pi(&self) -> Subspace {
        let field = self.pi.field();
        let q = self.n - 1;
        let mut rows = Vec::new();
        for pi in self.pi.basis() {
            let mut a = pi.clone();
            a.extend(zero_vector(field, q));
            let mut b = zero_vector(field, q);
            b.extend(pi.iter().cloned());
            rows.push(a);
            rows.push(b);
        }
        Subspace::span(field, 2 * q, rows).expect("well-formed")
    }
}

/// Runs `σ → ker σ → Π → L` for a line on `X`.
pub fn analyze_line(x: &Hypersurface, frame: &LineFrame) -> Result<TangentReport> {
    require_line(frame)?;
    let sigma_matrix = sigma(x, frame)?;
    let field = x.field();
    let p = x.form();
    let q = x.n() - 1;
    let restricted: Vec<BinaryForm> = frame
        .complement()
        .iter()
        .map(|w| p.contract(w)?.restrict_to_line(frame.e1(), frame.e2()))
        .collect::<Result<_>>()?;
    let kernel_space = kernel(&sigma_matrix.transpose());

    // Π = {w̄ : (w ⌟ P)|_E = 0}: left kernel of the coefficient matrix of the restrictions.
    let coeffs = Matrix::new(field, x.degree(), restricted.iter().map(BinaryForm::to_vector).collect())?;
    let pi = kernel(&coeffs.transpose());
    let pi_complement = pi.echelon_complement();
    let m = pi_complement.len();

    let mut report = TangentReport {
        n: x.n(),
        degree: x.degree(),
        sigma_matrix,
        tangent_dim: kernel_space.dim(),
        kernel: kernel_space,
        pi,
        m,
        pi_complement,
        pencil: Subspace::zero(field, 2 * m),
        restricted,
    };
    let rows: Vec<Vector> = report
        .kernel
        .basis()
        .iter()
        .map(|eta| {
            let mut u = report.project_to_quotient(&eta[..q]);
            u.extend(report.project_to_quotient(&eta[q..]));
            u
        })
        .collect();
    report.pencil = Subspace::span(field, 2 * m, rows)?;
    debug_assert!(report.kernel.contains_subspace(&report.dual_tensor_pi()).unwrap());
    debug_assert_eq!(report.pencil.dim(), report.tangent_dim - 2 * report.pi.dim());
    Ok(report)
}

/// `Π ⊂ W/E`, the directions with `(w ⌟ P)|_E = 0`.
pub fn compute_pi(x: &Hypersurface, frame: &LineFrame) -> Result<Subspace> {
    Ok(analyze_line(x, frame)?.pi)
}

/// `L ⊆ K²⊗K^m`.
pub fn pencil_quotient(x: &Hypersurface, frame: &LineFrame) -> Result<Subspace> {
    Ok(analyze_line(x, frame)?.pencil)
}

/// `T_E C_x = x̂^{⊥E} ⊗ Π` for a point `x ∈ ℙE` given by a vector of `W`.
pub fn tangent_cone_lines(x: &Hypersurface, frame: &LineFrame, point: &[Scalar]) -> Result<Subspace> {
    let report = analyze_line(x, frame)?;
    cone_tangent_from_report(&report, frame, point)
}

pub fn cone_tangent_from_report(report: &TangentReport, frame: &LineFrame, point: &[Scalar]) -> Result<Subspace> {
    if is_zero_vector(point) {
        return Err(Error::ZeroInput("zero vector is not a projective point"));
    }
    if !is_zero_vector(&frame.quotient_coords(point)?) {
        return Err(Error::PointNotOnLine);
    }
    let ab = frame.plane_coords(point)?;
    let (a, b) = (&ab[0], &ab[1]);
    // b·α¹ − a·α² vanishes at x = a·e₁ + b·e₂.
    let field = frame.field();
    let q = report.n - 1;
    let rows = report
        .pi
        .basis()
        .iter()
        .map(|pi| {
            let mut v: Vector = pi.iter().map(|c| b * c).collect();
            v.extend(pi.iter().map(|c| -(a * c)));
            v
        })
        .collect();
    Subspace::span(field, 2 * q, rows)
}

#[cfg(test)]
mod tests;
