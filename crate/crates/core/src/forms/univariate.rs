// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials (ascending coefficients, no trailing zeros) used by the
//! binary-form routines after dehomogenizing.

use crate::linalg::{Field, Scalar};

pub(crate) type Poly = Vec<Scalar>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn divmod(field: Field, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let db = degree(&b).expect("division by the zero polynomial");
    let mut rem = trim(a.clone());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut quot = vec![field.zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = &rem[shift + i] - &(&c * bi);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn monic(p: Poly) -> Poly {
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero leading coefficient");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub(crate) fn gcd(field: Field, a: &Poly, b: &Poly) -> Poly {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !y.is_empty() {
        let (_, r) = divmod(field, &x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

pub(crate) fn derivative(field: Field, p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| &field.from_u64(i as u64) * c).collect())
}

/// Square-free decomposition `p = c · Π aᵢ^i` (Yun); valid in characteristic 0 or above `deg p`.
pub(crate) fn squarefree(field: Field, p: &Poly) -> Vec<(Poly, usize)> {
    let p = trim(p.clone());
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let dp = derivative(field, &p);
    let mut a = gcd(field, &p, &dp);
    let mut b = divmod(field, &p, &a).0;
    let mut c = divmod(field, &dp, &a).0;
    let mut d = sub(&c, &derivative(field, &b));
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        a = gcd(field, &b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = divmod(field, &b, &a).0;
        c = divmod(field, &d, &a).0;
        d = sub(&c, &derivative(field, &b));
        i += 1;
    }
    out
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let field = a.first().or(b.first()).map(Scalar::field).unwrap_or(Field::Rationals);
    let zero = field.zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}
