// SPDX-License-Identifier: Apache-2.0

//! Plain-text form files:
//!
//! ```text
//! field Fp 7
//! vars 4
//! 1 1 0 0 1
//! -1 0 1 1 0
//! ```
//!
//! Each term line is `<coeff> <a₀> … <a_n>`; `#` starts a comment.

use crate::error::{Error, Result};
use crate::forms::multi::MultiForm;
use crate::linalg::Field;

pub fn parse_form(text: &str) -> Result<MultiForm> {
    let mut field = None;
    let mut nvars = None;
    let mut raw_terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: lineno + 1, message };
        let mut words = line.split_whitespace();
        let head = words.next().expect("nonempty line");
        match head {
            "field" => {
                let rest: Vec<&str> = words.collect();
                let f: Field = rest.join(" ").parse().map_err(|e: Error| err(e.to_string()))?;
                field = Some(f);
            }
            "vars" => {
                let n: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("expected `vars <n>`".into()))?;
                nvars = Some(n);
            }
            _ => raw_terms.push((lineno + 1, line.to_string())),
        }
    }
    let field = field.ok_or(Error::Parse { line: 0, message: "missing `field` header".into() })?;
    let nvars = nvars.ok_or(Error::Parse { line: 0, message: "missing `vars` header".into() })?;
    let mut terms = Vec::new();
    let mut degree = None;
    for (lineno, line) in raw_terms {
        let err = |message: String| Error::Parse { line: lineno, message };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != nvars + 1 {
            return Err(err(format!("expected {} fields, found {}", nvars + 1, words.len())));
        }
        let c = field.parse_scalar(words[0]).map_err(|e| err(e.to_string()))?;
        let exp: Vec<u32> = words[1..]
            .iter()
            .map(|w| w.parse::<u32>().map_err(|_| err(format!("bad exponent {w:?}"))))
            .collect::<Result<_>>()?;
        let d: usize = exp.iter().map(|&e| e as usize).sum();
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(err(format!("term of degree {d}, expected {d0}"))),
            _ => {}
        }
        terms.push((exp, c));
    }
    let degree = degree.ok_or(Error::Parse { line: 0, message: "no terms".into() })?;
    MultiForm::from_terms(field, nvars, degree, terms)
}

/// Canonical text rendering; `parse_form(&format_form(p)) == p`.
pub fn format_form(p: &MultiForm) -> String {
    let mut out = String::new();
    match p.field() {
        Field::Rationals => out.push_str("field Q\n"),
        Field::Prime(q) => out.push_str(&format!("field Fp {q}\n")),
    }
    out.push_str(&format!("vars {}\n", p.nvars()));
    for (e, c) in p.terms() {
        let exps: Vec<String> = e.iter().map(ToString::to_string).collect();
        out.push_str(&format!("{c} {}\n", exps.join(" ")));
    }
    out
}
