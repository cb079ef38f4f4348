// SPDX-License-Identifier: Apache-2.0

//! Test and demo hypersurfaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forms::{monomials, MultiForm};
use crate::linalg::{unit_vector, vector_from_ints, Field};
use crate::tangent::{Hypersurface, LineFrame};

/// `x₀^d + ⋯ + x_n^d`.
pub fn fermat(field: Field, n: usize, d: usize) -> Result<Hypersurface> {
    if d == 0 {
        return Err(Error::InvalidInput("degree 0".into()));
    }
    if field.is_finite() && (d as u64) % field.characteristic() == 0 {
        return Err(Error::InvalidInput(format!(
            "characteristic {} divides the degree {d}; the Fermat gradient vanishes identically",
            field.characteristic()
        )));
    }
    let terms = (0..=n).map(|i| {
        let mut e = vec![0; n + 1];
        e[i] = d as u32;
        (e, field.one())
    });
    Hypersurface::new(MultiForm::from_terms(field, n + 1, d, terms)?)
}

/// The cone over `base` with `extra` vertex coordinates appended after the base variables.
pub fn cone(base: &MultiForm, extra: usize) -> Result<Hypersurface> {
    let nvars = base.nvars() + extra;
    let terms = base.terms().map(|(e, c)| {
        let mut e = e.clone();
        e.resize(nvars, 0);
        (e, c.clone())
    });
    Hypersurface::new(MultiForm::from_terms(base.field(), nvars, base.degree(), terms)?)
}

/// `x₀x₃ − x₁x₂ ⊂ ℙ³`.
pub fn quadric(field: Field) -> Hypersurface {
    let p = MultiForm::from_int_terms(field, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).expect("valid");
    Hypersurface::new(p).expect("nonzero")
}

/// The line `span{e₀, e₁}` on the quadric.
pub fn quadric_line(field: Field) -> LineFrame {
    LineFrame::line(unit_vector(field, 4, 0), unit_vector(field, 4, 1)).expect("independent")
}

/// Cone in `ℙ³` over the Fermat plane cubic, vertex `[0:0:0:1]`.
pub fn cubic_cone(field: Field) -> Hypersurface {
    let base = fermat(field, 2, 3).expect("char ≠ 3");
    cone(base.form(), 1).expect("nonzero")
}

/// The vertex line `span{(1,−1,0,0), e₃}` on the cubic cone.
pub fn cubic_cone_line(field: Field) -> LineFrame {
    LineFrame::line(vector_from_ints(field, &[1, -1, 0, 0]), unit_vector(field, 4, 3)).expect("independent")
}

/// The line `span{(1,−1,0,0), (0,0,1,−1)}` on the Fermat cubic surface.
pub fn fermat_cubic_line(field: Field) -> LineFrame {
    LineFrame::line(vector_from_ints(field, &[1, -1, 0, 0]), vector_from_ints(field, &[0, 0, 1, -1]))
        .expect("independent")
}

/// `(x₀x₃ − x₁x₂)·x₀`: a smooth quadric together with a plane.
pub fn quadric_plus_plane(field: Field) -> Hypersurface {
    let p = MultiForm::from_int_terms(field, &[(1, &[2, 0, 0, 1]), (-1, &[1, 1, 1, 0])]).expect("valid");
    Hypersurface::new(p).expect("nonzero")
}

/// A random degree-`d` hypersurface in `ℙⁿ(𝔽_p)` containing `E₀ = span{e₀, e₁}`: each monomial
/// divisible by some `x_i` with `i ≥ 2` gets a uniform coefficient.
pub fn random_with_line(n: usize, d: usize, p: u64, seed: u64) -> Result<(Hypersurface, LineFrame)> {
    if n < 2 || d == 0 {
        return Err(Error::InvalidInput(format!("need n ≥ 2 and d ≥ 1, got n = {n}, d = {d}")));
    }
    let field = Field::prime(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = LineFrame::line(unit_vector(field, n + 1, 0), unit_vector(field, n + 1, 1))?;
    loop {
        let terms: Vec<_> = monomials(n + 1, d)
            .into_iter()
            .filter(|e| e[2..].iter().any(|&a| a > 0))
            .map(|e| (e, field.from_u64(rng.gen_range(0..p))))
            .collect();
        let form = MultiForm::from_terms(field, n + 1, d, terms)?;
        if !form.is_zero() {
            return Ok((Hypersurface::new(form)?, frame));
        }
    }
}

/// The cone in `ℙⁿ` over a random `random_with_line(n − 1, d, p, seed)` base, with the line
/// `span{e₀, e_n}` through the vertex `e_n`.
pub fn random_cone_with_line(n: usize, d: usize, p: u64, seed: u64) -> Result<(Hypersurface, LineFrame)> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("need n ≥ 3 for a cone with a base line, got {n}")));
    }
    let (base, _) = random_with_line(n - 1, d, p, seed)?;
    let x = cone(base.form(), 1)?;
    let field = x.field();
    let frame = LineFrame::line(unit_vector(field, n + 1, 0), unit_vector(field, n + 1, n))?;
    Ok((x, frame))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_matches_power_sum() {
        let f = Field::prime(7).unwrap();
        let x = fermat(f, 3, 3).unwrap();
        assert_eq!(x.form().num_terms(), 4);
        assert!(x.form().coefficient(&[0, 0, 3, 0]).is_one());
        assert!(fermat(Field::prime(3).unwrap(), 3, 3).is_err());
    }

    #[test]
    fn cone_keeps_base_terms() {
        let x = cubic_cone(Field::Rationals);
        assert_eq!(x.n(), 3);
        assert!(x.form().coefficient(&[0, 0, 0, 3]).is_zero());
        assert!(x.contains_plane(&cubic_cone_line(Field::Rationals)).unwrap());
    }

    #[test]
    fn random_instances_contain_the_line() {
        for seed in 0..20 {
            let (x, e) = random_with_line(3, 3, 7, seed).unwrap();
            assert!(x.contains_plane(&e).unwrap());
        }
        let a = random_with_line(4, 3, 11, 5).unwrap().0;
        let b = random_with_line(4, 3, 11, 5).unwrap().0;
        assert_eq!(a, b);
        let (c, e) = random_cone_with_line(3, 3, 7, 1).unwrap();
        assert!(c.contains_plane(&e).unwrap());
        assert!(c.form().terms().all(|(ex, _)| ex[3] == 0));
    }
}
