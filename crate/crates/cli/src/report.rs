// SPDX-License-Identifier: Apache-2.0

//! JSON assembly. `serde_json::Value` keeps object keys sorted, so output is canonical.

use serde::Serialize;
use serde_json::{json, Value};

use fanoline::forms::format_form;
use fanoline::search::line_key;
use fanoline::{Hypersurface, LineAnalysis, LineFrame};

pub fn to_value<T: Serialize + ?Sized>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn form_echo(x: &Hypersurface) -> Value {
    json!({
        "field": x.field().to_string(),
        "n": x.n(),
        "degree": x.degree(),
        "form": format_form(x.form()),
    })
}

fn line_value(e: &LineFrame) -> Value {
    json!([to_value(e.e1()), to_value(e.e2())])
}

pub fn analysis(x: &Hypersurface, frame: &LineFrame, a: &LineAnalysis) -> Value {
    let t = &a.tangent;
    let generators: Vec<Value> = a
        .generators
        .generators
        .iter()
        .map(|g| {
            json!({
                "block": g.block,
                "block_size": g.block_size,
                "degree": g.degree(),
                "raw": to_value(&g.form),
                "normalized": to_value(&g.form.normalized()),
            })
        })
        .collect();
    json!({
        "input": {
            "hypersurface": form_echo(x),
            "line": line_value(frame),
            "complement": to_value(frame.complement()),
        },
        "tangent_dim": t.tangent_dim,
        "tangent_lower_bound": (2 * (t.n - 1)).saturating_sub(t.degree + 1),
        "dim_pi": t.pi.dim(),
        "pi": to_value(&t.pi),
        "m": t.m,
        "pencil": to_value(&t.pencil),
        "restricted_contractions": to_value(&t.restricted),
        "s_indices": to_value(&a.normal_form.s),
        "normal_form": to_value(&a.normal_form),
        "generators": generators,
        "filtration": {
            "deltas": a.filtration.deltas(),
            "counts": a.filtration.counts(),
            "hat_dims": a.filtration.levels.iter().map(|l| l.hat.dim()).collect::<Vec<_>>(),
            "quotient_dims": a.filtration.levels.iter().map(|l| l.quotient_dim).collect::<Vec<_>>(),
            "generator_bound_ok": a.filtration.generator_bound_ok,
        },
        "image_comparison": to_value(&a.image),
        "singular_certificate": to_value(&a.certificate),
        "every_line": to_value(&a.every_line),
    })
}

pub fn lines(x: &Hypersurface, through: Option<&str>, lines: &[LineFrame]) -> Value {
    let mut sorted: Vec<&LineFrame> = lines.iter().collect();
    sorted.sort_by_key(|e| line_key(e));
    json!({
        "input": { "hypersurface": form_echo(x), "through": through },
        "count": lines.len(),
        "lines": sorted.into_iter().map(line_value).collect::<Vec<_>>(),
    })
}
