// SPDX-License-Identifier: Apache-2.0

//! Singular points: the gradient oracle, certificates from the ideal `I_E` on a line, the
//! every-line criterion, enumeration over 𝔽_p and the empirical conjecture harness.

mod conjecture;
mod fp;
mod lines;

pub use conjecture::{conjecture_check, ConjectureException, ConjectureOptions, ConjectureReport, RATIONALITY_CAVEAT};
pub use fp::{grassmannian_line_count, projective_count};
pub use lines::{all_lines, line_key, lines_through, points_of, singular_points, DEFAULT_BUDGET};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{binary_gcd, BinaryForm, ProjectiveRoot, UnsolvedFactor};
use crate::ideal::{ideal_degree_piece, GeneratorSet, IdealFiltration};
use crate::linalg::{is_zero_vector, Scalar, Vector};
use crate::pencil::NormalForm;
use crate::tangent::{Hypersurface, LineFrame, TangentReport};

/// Whether every partial derivative of `P` vanishes at `y`.
pub fn is_singular_at(x: &Hypersurface, y: &[Scalar]) -> Result<bool> {
    if is_zero_vector(y) {
        return Err(Error::ZeroInput("zero vector is not a projective point"));
    }
    Ok(x.form().gradient_at(y)?.iter().all(Scalar::is_zero))
}

/// Scales `v` so its first nonzero coordinate is 1.
pub fn normalize_projective(v: &[Scalar]) -> Vector {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|c| c * &inv).collect()
        }
        None => v.to_vec(),
    }
}

/// A root of a certificate form, mapped onto `ℙE` and checked against the gradient oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedPoint {
    /// `[s:t]` with the point equal to `s·e₁ + t·e₂`.
    pub line_coords: [Scalar; 2],
    pub point: Vector,
    pub multiplicity: usize,
    pub oracle_singular: bool,
}

fn certify_roots(x: &Hypersurface, frame: &LineFrame, roots: &[ProjectiveRoot]) -> Result<Vec<CertifiedPoint>> {
    roots
        .iter()
        .map(|r| {
            let point = normalize_projective(&frame.point_on_plane(&r.point));
            Ok(CertifiedPoint {
                oracle_singular: is_singular_at(x, &point)?,
                line_coords: r.point.clone(),
                point,
                multiplicity: r.multiplicity,
            })
        })
        .collect()
}

/// Zeros on `ℙE` of the ideal `I_E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularCertificate {
    pub line: [Vector; 2],
    /// GCD of a basis of `(I_E)_{δ_c}`.
    pub zero_locus: BinaryForm,
    pub points: Vec<CertifiedPoint>,
    /// Factors of the zero locus without roots in the base field.
    pub unsolved: Vec<UnsolvedFactor>,
}

impl SingularCertificate {
    pub fn all_confirmed(&self) -> bool {
        self.points.iter().all(|p| p.oracle_singular)
    }
}

pub fn singular_on_line(x: &Hypersurface, frame: &LineFrame, filt: &IdealFiltration) -> Result<SingularCertificate> {
    let top = filt.levels.last().ok_or(Error::ZeroInput("empty filtration"))?.delta;
    let piece = ideal_degree_piece(filt, top);
    let field = piece.field();
    let forms: Vec<BinaryForm> = piece.basis().iter().map(|v| BinaryForm::from_vector(field, v)).collect();
    let g = binary_gcd(&forms)?;
    let (points, unsolved) = if g.degree() == 0 {
        (Vec::new(), Vec::new())
    } else {
        let roots = g.roots()?;
        (certify_roots(x, frame, &roots.roots)?, roots.unsolved)
    };
    let cert = SingularCertificate { line: [frame.e1().to_vec(), frame.e2().to_vec()], zero_locus: g, points, unsolved };
    if x.field().characteristic() == 0 || x.field().characteristic() > x.degree() as u64 {
        debug_assert!(cert.all_confirmed(), "gradient oracle rejected a certified point");
    }
    Ok(cert)
}

/// The every-line criterion at one line: whether `d ≥ s₁ + 1` and `s₁ = n − 1 − dim Π`, and
/// the zeros of `p₁` when it applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EveryLineRecord {
    pub applies: bool,
    pub s1: usize,
    pub dim_pi: usize,
    pub degree: usize,
    pub points: Vec<CertifiedPoint>,
    pub unsolved: Vec<UnsolvedFactor>,
    pub note: Option<String>,
}

pub fn check_everyp1(
    x: &Hypersurface,
    frame: &LineFrame,
    report: &TangentReport,
    nf: &NormalForm,
    gens: &GeneratorSet,
) -> Result<EveryLineRecord> {
    let s1 = nf.s.first().copied().unwrap_or(0);
    let dim_pi = report.pi.dim();
    let applies = report.degree > s1 && s1 + dim_pi + 1 == report.n;
    let mut record =
        EveryLineRecord { applies, s1, dim_pi, degree: report.degree, points: Vec::new(), unsolved: Vec::new(), note: None };
    if !applies {
        return Ok(record);
    }
    let p1 = &gens.generators[0].form;
    if p1.degree() == 0 {
        record.note = Some("p1 is constant although the criterion applies".into());
        return Ok(record);
    }
    let roots = p1.roots()?;
    record.points = certify_roots(x, frame, &roots.roots)?;
    record.unsolved = roots.unsolved;
    if record.points.is_empty() {
        record.note = Some("roots exist over the algebraic closure, none rational".into());
    }
    Ok(record)
}
