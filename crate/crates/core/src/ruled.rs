// SPDX-License-Identifier: Apache-2.0

//! Numerical classes on a ruled surface over a curve: the lattice spanned by a section `ξ₀`
//! with `ξ₀² = −k` and a fibre `F`, with `ξ₀·F = 1`, `F² = 0`.

use serde::Serialize;

use crate::error::{Error, Result};

/// `a·ξ₀ + b·F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const SECTION: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const FIBRE: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> DivisorClass {
        DivisorClass { a, b }
    }

    pub fn add(self, other: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + other.a, self.b + other.b)
    }

    pub fn scale(self, c: i64) -> DivisorClass {
        DivisorClass::new(c * self.a, c * self.b)
    }
}

impl std::str::FromStr for DivisorClass {
    type Err = Error;

    /// `a,b`.
    fn from_str(s: &str) -> Result<DivisorClass> {
        let (a, b) = s.split_once(',').ok_or_else(|| Error::InvalidInput(format!("expected `a,b`, got {s:?}")))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad integer {t:?}")));
        Ok(DivisorClass::new(parse(a)?, parse(b)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuledSurface {
    pub k: i64,
    /// Class of `O(1)`.
    pub tautological: DivisorClass,
}

impl RuledSurface {
    /// `O(1)` defaults to `ξ₀ + kF`.
    pub fn new(k: i64) -> Result<RuledSurface> {
        RuledSurface::with_tautological(k, DivisorClass::new(1, k))
    }

    pub fn with_tautological(k: i64, tautological: DivisorClass) -> Result<RuledSurface> {
        if k < 1 {
            return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
        }
        Ok(RuledSurface { k, tautological })
    }
}

/// `−a₁a₂k + a₁b₂ + a₂b₁`.
pub fn intersect(s: &RuledSurface, d1: DivisorClass, d2: DivisorClass) -> i64 {
    -d1.a * d2.a * s.k + d1.a * d2.b + d2.a * d1.b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ItconeRecord {
    /// `aᵢ ≥ 1` and `Dᵢ·ξ₀ = bᵢ − aᵢk ≥ 0` for both classes.
    pub effective_hypotheses: bool,
    pub value: i64,
    pub lower_bound: i64,
    pub positive: bool,
}

/// Positivity of `D₁·D₂` for classes with positive section coefficient meeting `ξ₀`
/// non-negatively; then `D₁·D₂ ≥ a₁a₂k > 0`.
pub fn itcone_check(s: &RuledSurface, d1: DivisorClass, d2: DivisorClass) -> ItconeRecord {
    let ok = |d: DivisorClass| d.a >= 1 && d.b - d.a * s.k >= 0;
    let hyp = ok(d1) && ok(d2);
    let value = intersect(s, d1, d2);
    let lower_bound = d1.a * d2.a * s.k;
    if hyp {
        assert!(value >= lower_bound && lower_bound > 0, "intersection bound violated");
    }
    ItconeRecord { effective_hypotheses: hyp, value, lower_bound, positive: value > 0 }
}

/// The class of `q*L* ⊗ O(p)` given the class of `L` pulled back from the base curve, which
/// must be a multiple of `F`.
pub fn c1_twist(s: &RuledSurface, l: DivisorClass, p: i64) -> Result<DivisorClass> {
    if l.a != 0 {
        return Err(Error::InvalidInput(format!("pullback classes are multiples of F, got a = {}", l.a)));
    }
    let out = s.tautological.scale(p).add(l.scale(-1));
    assert_eq!(intersect(s, out, DivisorClass::FIBRE), p * intersect(s, s.tautological, DivisorClass::FIBRE));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRecord {
    /// Class when one factor was given, pairing when two were.
    pub class: Option<DivisorClass>,
    pub value: Option<i64>,
    pub product_dim_ok: bool,
    pub nonzero: bool,
}

/// Product of first Chern classes of line bundles on the surface: a class for one factor,
/// a number for two.
pub fn stareqn_curve_case(classes: &[DivisorClass], s: &RuledSurface) -> Result<ProductRecord> {
    match *classes {
        [] => Err(Error::ZeroInput("no classes")),
        [d] => Ok(ProductRecord { class: Some(d), value: None, product_dim_ok: true, nonzero: d != DivisorClass::new(0, 0) }),
        [d1, d2] => {
            let v = intersect(s, d1, d2);
            Ok(ProductRecord { class: None, value: Some(v), product_dim_ok: true, nonzero: v != 0 })
        }
        _ => Err(Error::CodimensionExceedsDimension(classes.len())),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn c(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(a, b)
    }

    #[test]
    fn lattice_generators() {
        for k in 1..=5 {
            let s = RuledSurface::new(k).unwrap();
            assert_eq!(intersect(&s, DivisorClass::SECTION, DivisorClass::SECTION), -k);
            assert_eq!(intersect(&s, DivisorClass::SECTION, DivisorClass::FIBRE), 1);
            assert_eq!(intersect(&s, DivisorClass::FIBRE, DivisorClass::FIBRE), 0);
        }
        assert_eq!(intersect(&RuledSurface::new(1).unwrap(), c(1, 1), c(1, 2)), 2);
        assert!(RuledSurface::new(0).is_err());
    }

    #[test]
    fn itcone_examples() {
        let r = itcone_check(&RuledSurface::new(2).unwrap(), c(1, 2), c(1, 2));
        assert!(r.effective_hypotheses && r.positive);
        assert_eq!((r.value, r.lower_bound), (2, 2));
        let r = itcone_check(&RuledSurface::new(1).unwrap(), c(1, 0), c(1, 1));
        assert!(!r.effective_hypotheses);
        let r = itcone_check(&RuledSurface::new(3).unwrap(), c(2, 6), c(1, 3));
        assert_eq!((r.value, r.lower_bound), (6, 6));
    }

    #[test]
    fn twist_examples() {
        let s = RuledSurface::new(3).unwrap();
        assert_eq!(c1_twist(&s, c(0, 0), 1).unwrap(), c(1, 3));
        assert_eq!(c1_twist(&s, c(0, 0), 0).unwrap(), c(0, 0));
        assert_eq!(c1_twist(&s, c(0, 3), 2).unwrap(), c(2, 3));
        assert_eq!(intersect(&s, c1_twist(&s, c(0, 3), 2).unwrap(), DivisorClass::FIBRE), 2);
        assert!(c1_twist(&s, c(1, 0), 2).is_err());
    }

    #[test]
    fn products() {
        let s = RuledSurface::new(1).unwrap();
        let ff = stareqn_curve_case(&[DivisorClass::FIBRE, DivisorClass::FIBRE], &s).unwrap();
        assert_eq!((ff.value, ff.nonzero), (Some(0), false));
        let one = stareqn_curve_case(&[c(1, 1)], &s).unwrap();
        assert!(one.nonzero && one.class == Some(c(1, 1)));
        assert!(stareqn_curve_case(&[c(1, 1), c(1, 2)], &s).unwrap().nonzero);
        assert!(matches!(stareqn_curve_case(&[c(1, 1); 3], &s), Err(Error::CodimensionExceedsDimension(3))));
        assert_eq!("2,-3".parse::<DivisorClass>().unwrap(), c(2, -3));
        assert!("2".parse::<DivisorClass>().is_err());
    }

    fn class() -> impl Strategy<Value = DivisorClass> {
        (-20i64..=20, -20i64..=20).prop_map(|(a, b)| c(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn bilinear_and_symmetric(k in 1i64..=6, x in class(), y in class(), z in class(), m in -5i64..=5) {
            let s = RuledSurface::new(k).unwrap();
            prop_assert_eq!(intersect(&s, x, y), intersect(&s, y, x));
            prop_assert_eq!(intersect(&s, x.add(z), y), intersect(&s, x, y) + intersect(&s, z, y));
            prop_assert_eq!(intersect(&s, x.scale(m), y), m * intersect(&s, x, y));
        }

        #[test]
        fn itcone_positivity(k in 1i64..=5, a1 in 1i64..=5, a2 in 1i64..=5, e1 in 0i64..=10, e2 in 0i64..=10) {
            let s = RuledSurface::new(k).unwrap();
            let r = itcone_check(&s, c(a1, a1 * k + e1), c(a2, a2 * k + e2));
            prop_assert!(r.effective_hypotheses);
            prop_assert!(r.value >= a1 * a2 * k && a1 * a2 * k >= 1);
            prop_assert!(stareqn_curve_case(&[c(a1, a1 * k + e1), c(a2, a2 * k + e2)], &s).unwrap().nonzero);
        }

        #[test]
        fn twist_meets_fibre_p_times(k in 1i64..=6, b in -10i64..=10, p in -10i64..=10) {
            let s = RuledSurface::new(k).unwrap();
            prop_assert_eq!(intersect(&s, c1_twist(&s, c(0, b), p).unwrap(), DivisorClass::FIBRE), p);
        }
    }
}
