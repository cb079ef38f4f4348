// SPDX-License-Identifier: Apache-2.0

//! Compiled evaluation of forms over 𝔽_p on raw residues, plus iteration over projective
//! and Grassmannian points.

use crate::error::{Error, Result};
use crate::forms::MultiForm;
use crate::linalg::{Field, Scalar, Vector};

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// `P` as a flat list of `(coefficient, exponents)` over `u64` residues.
#[derive(Clone, Debug)]
pub(crate) struct FpForm {
    p: u64,
    nvars: usize,
    degree: usize,
    terms: Vec<(u64, Vec<u32>)>,
}

impl FpForm {
    pub(crate) fn new(form: &MultiForm) -> Result<FpForm> {
        let p = match form.field() {
            Field::Prime(p) => p,
            Field::Rationals => return Err(Error::FiniteFieldRequired),
        };
        let terms = form.terms().map(|(e, c)| (c.residue().expect("finite field"), e.clone())).collect();
        Ok(FpForm { p, nvars: form.nvars(), degree: form.degree(), terms })
    }

    pub(crate) fn eval(&self, x: &[u64]) -> u64 {
        let p = self.p;
        // powers[i][k] = x_i^k
        let mut powers = vec![1u64; self.nvars * (self.degree + 1)];
        for (i, &xi) in x.iter().enumerate() {
            let row = &mut powers[i * (self.degree + 1)..(i + 1) * (self.degree + 1)];
            for k in 1..=self.degree {
                row[k] = mulmod(row[k - 1], xi, p);
            }
        }
        let mut acc = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    t = mulmod(t, powers[i * (self.degree + 1) + ei as usize], p);
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Whether `P` vanishes on the line through `a` and `b` (distinct projective points).
    pub(crate) fn vanishes_on_line(&self, a: &[u64], b: &[u64]) -> bool {
        let p = self.p;
        // A binary form of degree d vanishing at d+1 points of ℙ¹ is zero.
        if self.degree as u64 > p {
            return self.vanishes_on_line_exact(a, b);
        }
        if self.eval(b) != 0 {
            return false;
        }
        let mut x = vec![0u64; self.nvars];
        for lambda in 0..(self.degree as u64).min(p) {
            for i in 0..self.nvars {
                x[i] = (a[i] + mulmod(lambda, b[i], p)) % p;
            }
            if self.eval(&x) != 0 {
                return false;
            }
        }
        true
    }

    fn vanishes_on_line_exact(&self, a: &[u64], b: &[u64]) -> bool {
        let field = Field::Prime(self.p);
        let form = MultiForm::from_terms(
            field,
            self.nvars,
            self.degree,
            self.terms.iter().map(|(c, e)| (e.clone(), field.from_u64(*c))),
        )
        .expect("valid");
        form.restrict_to_line(&to_scalars(field, a), &to_scalars(field, b)).expect("valid").is_zero()
    }
}

pub(crate) fn to_scalars(field: Field, v: &[u64]) -> Vector {
    v.iter().map(|&x| field.from_u64(x)).collect()
}

pub(crate) fn to_residues(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(|c| c.residue().expect("finite field")).collect()
}

/// Number of points of `ℙ^dim(𝔽_p)`.
pub fn projective_count(p: u64, dim: usize) -> u128 {
    (0..=dim).map(|k| (p as u128).pow(k as u32)).sum()
}

/// Number of lines in `ℙⁿ(𝔽_p)`: the Gaussian binomial `[n+1 choose 2]_p`.
pub fn grassmannian_line_count(p: u64, n: usize) -> u128 {
    let q = p as u128;
    let num = (q.pow(n as u32 + 1) - 1) * (q.pow(n as u32) - 1);
    num / ((q * q - 1) * (q - 1))
}

/// The `index`-th point of `ℙ^{dim}(𝔽_p)` in canonical order: first nonzero coordinate is 1,
/// earlier pivots first, remaining coordinates read as base-`p` digits.
pub(crate) fn projective_point(p: u64, dim: usize, mut index: u128) -> Vec<u64> {
    let q = p as u128;
    let mut x = vec![0u64; dim + 1];
    for pivot in 0..=dim {
        let free = (dim - pivot) as u32;
        let block = q.pow(free);
        if index < block {
            x[pivot] = 1;
            for j in (pivot + 1..=dim).rev() {
                x[j] = (index % q) as u64;
                index /= q;
            }
            return x;
        }
        index -= block;
    }
    panic!("projective point index out of range");
}

/// The reduced echelon pair of rows with pivots `(i, j)` whose free entries are the base-`p`
/// digits of `index`.
pub(crate) fn echelon_line(p: u64, ncols: usize, i: usize, j: usize, mut index: u128) -> [Vec<u64>; 2] {
    let q = p as u128;
    let mut a = vec![0u64; ncols];
    let mut b = vec![0u64; ncols];
    a[i] = 1;
    b[j] = 1;
    for c in (j + 1..ncols).rev() {
        b[c] = (index % q) as u64;
        index /= q;
    }
    for c in (i + 1..ncols).rev() {
        if c != j {
            a[c] = (index % q) as u64;
            index /= q;
        }
    }
    [a, b]
}

/// Free entries of an echelon line with pivots `(i, j)` in `ℙ^{ncols−1}`.
pub(crate) fn echelon_free(ncols: usize, i: usize, j: usize) -> u32 {
    (2 * ncols - i - j - 3) as u32
}
