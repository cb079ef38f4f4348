// SPDX-License-Identifier: Apache-2.0

//! Exact algorithms for hypersurfaces that contain many lines.
//!
//! The crate builds the tangent map of the Fano scheme of lines at a line `E ⊂ X`, puts the
//! resulting constant-rank-two pencil in normal form, extracts the binary forms whose common
//! zeros on `E` are singular points of `X`, and enumerates lines over small prime fields.
//! A separate module does intersection arithmetic on ruled surfaces.
//!
//! All arithmetic is exact, over ℚ or a prime field 𝔽_p.

pub mod corpus;
pub mod error;
pub mod forms;
pub mod ideal;
pub mod linalg;
pub mod pencil;
pub mod pipeline;
pub mod ruled;
pub mod search;
pub mod tangent;

pub use error::{Error, Result};
pub use forms::{BinaryForm, MultiForm};
pub use ideal::{GeneratorSet, IdealFiltration};
pub use linalg::{Field, Matrix, Scalar, Subspace, Vector};
pub use pencil::NormalForm;
pub use pipeline::{analyze, LineAnalysis};
pub use ruled::{DivisorClass, RuledSurface};
pub use search::{ConjectureReport, SingularCertificate};
pub use tangent::{Hypersurface, LineFrame, PlaneFrame, TangentReport};
