// SPDX-License-Identifier: Apache-2.0

//! Exhaustive enumeration of 𝔽_p-points and 𝔽_p-lines.

use rayon::prelude::*;

use super::fp::{echelon_free, echelon_line, projective_count, projective_point, to_residues, to_scalars, FpForm};
use crate::error::{Error, Result};
use crate::linalg::{Field, Subspace, Vector};
use crate::tangent::{Hypersurface, LineFrame};

/// Default cap on candidate points or lines examined by one enumeration.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

fn prime_of(x: &Hypersurface) -> Result<u64> {
    match x.field() {
        Field::Prime(p) => Ok(p),
        Field::Rationals => Err(Error::FiniteFieldRequired),
    }
}

fn check_budget(estimate: u128, budget: u128) -> Result<()> {
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

fn frame_from_rows(field: Field, a: &[u64], b: &[u64]) -> LineFrame {
    let span = Subspace::span(field, a.len(), vec![to_scalars(field, a), to_scalars(field, b)]).expect("well-formed");
    LineFrame::line(span.basis()[0].clone(), span.basis()[1].clone()).expect("independent")
}

/// Residues of the reduced echelon basis of a line: a canonical sort key.
pub fn line_key(frame: &LineFrame) -> Vec<u64> {
    frame.span().basis().iter().flat_map(|v| to_residues(v)).collect()
}

/// Every 𝔽_p-line on `X`, in canonical (echelon) order.
pub fn all_lines(x: &Hypersurface, budget: u128) -> Result<Vec<LineFrame>> {
    let p = prime_of(x)?;
    let ncols = x.n() + 1;
    let pairs: Vec<(usize, usize)> = (0..ncols).flat_map(|i| (i + 1..ncols).map(move |j| (i, j))).collect();
    let estimate: u128 = pairs.iter().map(|&(i, j)| (p as u128).pow(echelon_free(ncols, i, j))).sum();
    check_budget(estimate, budget)?;
    let fast = FpForm::new(x.form())?;
    let mut out = Vec::new();
    for (i, j) in pairs {
        let count = (p as u64).pow(echelon_free(ncols, i, j));
        let found: Vec<[Vec<u64>; 2]> = (0..count)
            .into_par_iter()
            .filter_map(|k| {
                let [a, b] = echelon_line(p, ncols, i, j, k as u128);
                fast.vanishes_on_line(&a, &b).then_some([a, b])
            })
            .collect();
        out.extend(found.iter().map(|[a, b]| frame_from_rows(x.field(), a, b)));
    }
    Ok(out)
}

/// Every 𝔽_p-line on `X` through the point `y ∈ X`, sorted by [`line_key`].
pub fn lines_through(x: &Hypersurface, y: &[crate::linalg::Scalar]) -> Result<Vec<LineFrame>> {
    let p = prime_of(x)?;
    if crate::linalg::is_zero_vector(y) {
        return Err(Error::ZeroInput("zero vector is not a projective point"));
    }
    if !x.contains_point(y)? {
        return Err(Error::PointNotOnHypersurface);
    }
    let ncols = x.n() + 1;
    let yr = to_residues(y);
    let pivot = yr.iter().position(|&c| c != 0).expect("nonzero");
    let others: Vec<usize> = (0..ncols).filter(|&c| c != pivot).collect();
    let fast = FpForm::new(x.form())?;
    let found: Vec<Vec<u64>> = (0..projective_count(p, ncols - 2) as u64)
        .into_par_iter()
        .filter_map(|k| {
            let q = projective_point(p, ncols - 2, k as u128);
            let mut v = vec![0u64; ncols];
            for (c, &col) in others.iter().enumerate() {
                v[col] = q[c];
            }
            fast.vanishes_on_line(&yr, &v).then_some(v)
        })
        .collect();
    let mut lines: Vec<LineFrame> = found.iter().map(|v| frame_from_rows(x.field(), &yr, v)).collect();
    lines.sort_by_key(line_key);
    Ok(lines)
}

fn scan_points(x: &Hypersurface, budget: u128, keep: impl Fn(&[u64]) -> bool + Sync) -> Result<Vec<Vector>> {
    let p = prime_of(x)?;
    let total = projective_count(p, x.n());
    check_budget(total, budget)?;
    let found: Vec<Vec<u64>> = (0..total as u64)
        .into_par_iter()
        .map(|k| projective_point(p, x.n(), k as u128))
        .filter(|v| keep(v))
        .collect();
    Ok(found.iter().map(|v| to_scalars(x.field(), v)).collect())
}

/// `X(𝔽_p)`, normalized representatives in canonical order.
pub fn points_of(x: &Hypersurface, budget: u128) -> Result<Vec<Vector>> {
    let fast = FpForm::new(x.form())?;
    scan_points(x, budget, |v| fast.eval(v) == 0)
}

/// 𝔽_p-points where `P` and all its partial derivatives vanish.
pub fn singular_points(x: &Hypersurface, budget: u128) -> Result<Vec<Vector>> {
    let fast = FpForm::new(x.form())?;
    let partials = (0..=x.n())
        .map(|i| x.form().partial(i).and_then(|d| FpForm::new(&d)))
        .collect::<Result<Vec<_>>>()?;
    scan_points(x, budget, |v| fast.eval(v) == 0 && partials.iter().all(|d| d.eval(v) == 0))
}
