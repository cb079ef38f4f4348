// SPDX-License-Identifier: Apache-2.0

//! Empirical harness for the statement that the cone of lines through a point of `X_B`
//! meets `Sing X`, run on 𝔽_p-points.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::fp::{mulmod, to_residues, to_scalars};
use super::lines::{all_lines, points_of, singular_points, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::tangent::{analyze_line, Hypersurface, LineFrame};

pub const RATIONALITY_CAVEAT: &str = "only F_p-rational lines and singular points are visible; \
an exception is not a counterexample, since the missing singular points may be defined over an extension";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjectureOptions {
    pub budget: u128,
    /// Maximum number of points of `X_B` examined, in canonical order.
    pub sample_budget: usize,
    /// Run even when `p ≤ d`.
    pub force: bool,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions { budget: DEFAULT_BUDGET, sample_budget: usize::MAX, force: false }
    }
}

/// A point of `X_B` whose rational lines miss every rational singular point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureException {
    pub point: Vector,
    pub lines: Vec<[Vector; 2]>,
    pub singular_sample: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub field: String,
    pub n: usize,
    pub degree: usize,
    pub line_count: usize,
    pub hypersurface_points: usize,
    pub covered_points: usize,
    pub sampled_points: usize,
    pub points_meeting_singular_locus: usize,
    pub singular_points: usize,
    pub exceptions: Vec<ConjectureException>,
    pub max_tangent_dim: Option<usize>,
    /// `n − 2`: the line-family dimension the conjecture assumes.
    pub hypothesis_threshold: usize,
    /// `max tangent_dim ≥ n − 2`.
    pub hypothesis_triggered: bool,
    /// `⌊log_p #lines⌋`.
    pub line_count_dim: Option<u32>,
    /// `⌊log_p |X_B(𝔽_p)|⌋` and `⌊log_p |X(𝔽_p)|⌋`.
    pub covered_dim: Option<u32>,
    pub hypersurface_dim: Option<u32>,
    pub observed_codim: Option<i64>,
    /// Tangent dimension above the counting estimate: a hint of non-reducedness.
    pub tangent_exceeds_count: bool,
    pub status: String,
    pub caveat: &'static str,
}

fn floor_log(p: u64, count: usize) -> Option<u32> {
    if count == 0 {
        return None;
    }
    let mut e = 0;
    let mut acc = p as u128;
    while acc <= count as u128 {
        acc *= p as u128;
        e += 1;
    }
    Some(e)
}

/// The `p + 1` normalized points of a line.
fn line_points(p: u64, frame: &LineFrame) -> Vec<Vec<u64>> {
    let a = to_residues(frame.e1());
    let b = to_residues(frame.e2());
    let mut out = vec![normalize(p, &b)];
    for lambda in 0..p {
        let v: Vec<u64> = a.iter().zip(&b).map(|(&x, &y)| (x + mulmod(lambda, y, p)) % p).collect();
        out.push(normalize(p, &v));
    }
    out
}

fn normalize(p: u64, v: &[u64]) -> Vec<u64> {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero");
    let inv = crate::linalg::Field::Prime(p).from_u64(lead).inv().expect("unit").residue().expect("residue");
    v.iter().map(|&c| mulmod(c, inv, p)).collect()
}

pub fn conjecture_check(x: &Hypersurface, options: &ConjectureOptions) -> Result<ConjectureReport> {
    let field = x.field();
    let p = match field {
        crate::linalg::Field::Prime(p) => p,
        crate::linalg::Field::Rationals => return Err(Error::FiniteFieldRequired),
    };
    if p <= x.degree() as u64 && !options.force {
        return Err(Error::CharacteristicTooSmall { characteristic: p, degree: x.degree() });
    }
    let lines = all_lines(x, options.budget)?;
    let tangent_dims = lines
        .par_iter()
        .map(|e| analyze_line(x, e).map(|r| r.tangent_dim))
        .collect::<Result<Vec<_>>>()?;
    let singular: BTreeSet<Vec<u64>> = singular_points(x, options.budget)?.iter().map(|v| to_residues(v)).collect();
    let hypersurface_points = points_of(x, options.budget)?.len();

    let mut through: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    let mut meets = Vec::with_capacity(lines.len());
    for (idx, e) in lines.iter().enumerate() {
        let pts = line_points(p, e);
        meets.push(pts.iter().any(|q| singular.contains(q)));
        for q in pts {
            through.entry(q).or_default().push(idx);
        }
    }

    let sample: Vec<(&Vec<u64>, &Vec<usize>)> = through.iter().take(options.sample_budget).collect();
    let singular_sample: Vec<Vector> = singular.iter().take(5).map(|v| to_scalars(field, v)).collect();
    let mut good = 0;
    let mut exceptions = Vec::new();
    for (q, idxs) in &sample {
        if idxs.iter().any(|&i| meets[i]) {
            good += 1;
        } else {
            exceptions.push(ConjectureException {
                point: to_scalars(field, q),
                lines: idxs.iter().map(|&i| [lines[i].e1().to_vec(), lines[i].e2().to_vec()]).collect(),
                singular_sample: singular_sample.clone(),
            });
        }
    }

    let max_tangent_dim = tangent_dims.iter().copied().max();
    let threshold = x.n() - 2;
    let triggered = max_tangent_dim.is_some_and(|t| t >= threshold);
    let line_count_dim = floor_log(p, lines.len());
    let covered_dim = floor_log(p, through.len());
    let hypersurface_dim = floor_log(p, hypersurface_points);
    let status = if !triggered {
        "hypothesis not triggered".to_string()
    } else if exceptions.is_empty() {
        "no exceptions".to_string()
    } else {
        format!("{} exceptions (rationality caveat applies)", exceptions.len())
    };
    Ok(ConjectureReport {
        field: field.to_string(),
        n: x.n(),
        degree: x.degree(),
        line_count: lines.len(),
        hypersurface_points,
        covered_points: through.len(),
        sampled_points: sample.len(),
        points_meeting_singular_locus: good,
        singular_points: singular.len(),
        exceptions,
        max_tangent_dim,
        hypothesis_threshold: threshold,
        hypothesis_triggered: triggered,
        line_count_dim,
        covered_dim,
        hypersurface_dim,
        observed_codim: covered_dim.zip(hypersurface_dim).map(|(a, b)| b as i64 - a as i64),
        tangent_exceeds_count: match (max_tangent_dim, line_count_dim) {
            (Some(t), Some(c)) => t > c as usize,
            _ => false,
        },
        status,
        caveat: RATIONALITY_CAVEAT,
    })
}
