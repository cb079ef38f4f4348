// SPDX-License-Identifier: Apache-2.0

//! Homogeneous forms: sparse multivariate forms and dense binary forms on a line.

mod binary;
mod multi;
mod text;
mod univariate;

pub use binary::{binary_divide, binary_gcd, binary_roots, BinaryForm, ProjectiveRoot, RootReport, UnsolvedFactor};
pub use multi::{contract, monomials, multilinear_eval, restrict_to_plane, Exponent, MultiForm};
pub use text::{format_form, parse_form};

#[cfg(test)]
mod tests;
