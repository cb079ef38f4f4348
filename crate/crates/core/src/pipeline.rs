// SPDX-License-Identifier: Apache-2.0

//! The full chain at one line: tangent map, pencil normal form, generators, filtration,
//! singular certificate and the every-line criterion.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{build_filtration, contains_image_sigma, extract_generators, GeneratorSet, IdealFiltration, ImageComparison};
use crate::pencil::{normal_form, standard_alpha, NormalForm};
use crate::search::{check_everyp1, singular_on_line, EveryLineRecord, SingularCertificate};
use crate::tangent::{analyze_line, Hypersurface, LineFrame, TangentReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineAnalysis {
    pub tangent: TangentReport,
    pub normal_form: NormalForm,
    pub generators: GeneratorSet,
    pub filtration: IdealFiltration,
    pub image: ImageComparison,
    pub certificate: SingularCertificate,
    pub every_line: EveryLineRecord,
}

/// Runs every stage with `α` the dual basis of the frame.
pub fn analyze(x: &Hypersurface, frame: &LineFrame) -> Result<LineAnalysis> {
    let tangent = analyze_line(x, frame)?;
    let nf = normal_form(&tangent.pencil, &standard_alpha(x.field()))?;
    let generators = extract_generators(&tangent, &nf)?;
    let filtration = build_filtration(&generators, Some(tangent.pi.dim()))?;
    let image = contains_image_sigma(&filtration, &tangent);
    let certificate = singular_on_line(x, frame, &filtration)?;
    let every_line = check_everyp1(x, frame, &tangent, &nf, &generators)?;
    Ok(LineAnalysis { tangent, normal_form: nf, generators, filtration, image, certificate, every_line })
}
