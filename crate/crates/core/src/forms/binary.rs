// SPDX-License-Identifier: Apache-2.0

//! Binary forms on a line: dense coefficient lists in the dual basis `s = α¹`, `t = α²`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::univariate::{self, Poly};
use crate::linalg::{Field, Scalar, Vector};

/// `Σ cᵢ s^{deg−i} tⁱ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    field: Field,
    coeffs: Vec<Scalar>,
}

/// A point `[s:t]` of ℙ¹ normalized so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectiveRoot {
    pub point: [Scalar; 2],
    pub multiplicity: usize,
}

/// A factor without roots in the base field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnsolvedFactor {
    pub factor: BinaryForm,
    pub multiplicity: usize,
    /// True when the factor has degree 2 or 3 (no root ⇒ irreducible).
    pub certified_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub roots: Vec<ProjectiveRoot>,
    pub unsolved: Vec<UnsolvedFactor>,
    /// False when rational root search was skipped because coefficients were too large to factor.
    pub complete: bool,
}

impl RootReport {
    pub fn total_root_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

impl BinaryForm {
    pub fn zero(field: Field, degree: usize) -> BinaryForm {
        BinaryForm { field, coeffs: vec![field.zero(); degree + 1] }
    }

    pub fn constant(c: Scalar) -> BinaryForm {
        BinaryForm { field: c.field(), coeffs: vec![c] }
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<Scalar>) -> Result<BinaryForm> {
        if coeffs.is_empty() {
            return Err(Error::ZeroInput("binary form needs at least one coefficient"));
        }
        coeffs.iter().try_for_each(|c| field.check(c))?;
        Ok(BinaryForm { field, coeffs })
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> BinaryForm {
        BinaryForm { field, coeffs: coeffs.iter().map(|&c| field.from_i64(c)).collect() }
    }

    /// `s^a t^b`.
    pub fn monomial(field: Field, a: usize, b: usize) -> BinaryForm {
        let mut f = BinaryForm::zero(field, a + b);
        f.coeffs[b] = field.one();
        f
    }

    /// `a·s + b·t`.
    pub fn linear(a: Scalar, b: Scalar) -> BinaryForm {
        BinaryForm { field: a.field(), coeffs: vec![a, b] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let d = self.degree();
        let mut acc = self.field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c * &(s.pow((d - i) as u64) * t.pow(i as u64));
            }
        }
        acc
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch { expected: self.degree(), found: other.degree() });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(BinaryForm { field: self.field, coeffs })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm { field: self.field, coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        BinaryForm { field: self.field, coeffs }
    }

    pub fn pow(&self, k: usize) -> BinaryForm {
        let mut acc = BinaryForm::constant(self.field.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicity of `t` as a factor.
    pub fn t_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Coefficients as a vector in `S^deg`, monomials `s^deg, …, t^deg`.
    pub fn to_vector(&self) -> Vector {
        self.coeffs.clone()
    }

    pub fn from_vector(field: Field, v: &[Scalar]) -> BinaryForm {
        BinaryForm { field, coeffs: v.to_vec() }
    }

    /// Scaled so the `s^deg` coefficient is 1, else the `t^deg` coefficient, else the first
    /// nonzero one.
    pub fn normalized(&self) -> BinaryForm {
        let d = self.degree();
        let lead = [0, d]
            .iter()
            .map(|&i| &self.coeffs[i])
            .find(|c| !c.is_zero())
            .or_else(|| self.coeffs.iter().find(|c| !c.is_zero()));
        match lead.and_then(Scalar::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    fn dehomogenize_t(&self) -> Poly {
        // f(s, 1): coefficient of s^j is c_{deg−j}.
        univariate::trim(self.coeffs.iter().rev().cloned().collect())
    }

    fn homogenize_t(field: Field, p: &Poly, degree: usize) -> BinaryForm {
        let zero = field.zero();
        let coeffs = (0..=degree).map(|i| p.get(degree - i).unwrap_or(&zero).clone()).collect();
        BinaryForm { field, coeffs }
    }

    /// Exact quotient `q` with `self = g·q`.
    pub fn divide(&self, g: &BinaryForm) -> Result<BinaryForm> {
        if g.is_zero() {
            return Err(Error::ZeroInput("division by the zero form"));
        }
        let (d, e) = (self.degree(), g.degree());
        if e > d {
            return Err(Error::NotDivisible { remainder: self.clone() });
        }
        let (q, r) = univariate::divmod(self.field, &self.dehomogenize_t(), &g.dehomogenize_t());
        if !r.is_empty() {
            return Err(Error::NotDivisible { remainder: Self::homogenize_t(self.field, &r, d) });
        }
        if univariate::degree(&q).unwrap_or(0) > d - e {
            // g carries more powers of t than self.
            return Err(Error::NotDivisible { remainder: self.clone() });
        }
        Ok(Self::homogenize_t(self.field, &q, d - e))
    }

    /// Roots in ℙ¹ of the base field with multiplicities; over ℚ only rational roots are
    /// produced and the remaining factors are listed unsolved.
    pub fn roots(&self) -> Result<RootReport> {
        if self.is_zero() {
            return Err(Error::ZeroInput("roots of the zero form"));
        }
        let field = self.field;
        let candidates: Vec<[Scalar; 2]> = match field {
            Field::Prime(_) => {
                let mut pts: Vec<[Scalar; 2]> = field.elements()?.map(|u| [field.one(), u]).collect();
                pts.push([field.zero(), field.one()]);
                pts
            }
            Field::Rationals => match rational_root_candidates(self) {
                Some(pts) => pts,
                None => {
                    return Ok(RootReport {
                        roots: Vec::new(),
                        unsolved: vec![UnsolvedFactor {
                            factor: self.clone(),
                            multiplicity: 1,
                            certified_irreducible: false,
                        }],
                        complete: false,
                    })
                }
            },
        };
        let mut residual = self.clone();
        let mut roots = Vec::new();
        for [s, t] in candidates {
            let ell = BinaryForm::linear(t.clone(), -&s);
            let mut mult = 0;
            while residual.degree() > 0 && residual.eval(&s, &t).is_zero() {
                residual = residual.divide(&ell).expect("linear factor of a vanishing form");
                mult += 1;
            }
            if mult > 0 {
                roots.push(ProjectiveRoot { point: [s, t], multiplicity: mult });
            }
        }
        roots.sort_by_key(|r| point_key(&r.point));
        let unsolved = if residual.degree() == 0 {
            Vec::new()
        } else {
            unsolved_factors(&residual)
        };
        Ok(RootReport { roots, unsolved, complete: true })
    }
}

fn point_key(p: &[Scalar; 2]) -> (u8, String) {
    (if p[0].is_zero() { 1 } else { 0 }, p[1].to_string())
}

fn unsolved_factors(residual: &BinaryForm) -> Vec<UnsolvedFactor> {
    let field = residual.field;
    let deg = residual.degree();
    let yun_ok = match field {
        Field::Rationals => true,
        Field::Prime(p) => (deg as u64) < p,
    };
    // No roots remain, so s^deg has a nonzero coefficient and f(s,1) has full degree.
    let parts = if yun_ok { univariate::squarefree(field, &residual.dehomogenize_t()) } else { Vec::new() };
    if parts.is_empty() {
        return vec![UnsolvedFactor {
            factor: residual.normalized(),
            multiplicity: 1,
            certified_irreducible: deg <= 3,
        }];
    }
    parts
        .into_iter()
        .map(|(p, mult)| {
            let d = univariate::degree(&p).unwrap_or(0);
            UnsolvedFactor {
                factor: BinaryForm::homogenize_t(field, &p, d),
                multiplicity: mult,
                certified_irreducible: d <= 3,
            }
        })
        .collect()
}

const FACTOR_LIMIT: u64 = 1 << 40;

/// Candidate rational roots `[1:u]` (rational root theorem on `f(1,t)`) plus `[0:1]`.
fn rational_root_candidates(f: &BinaryForm) -> Option<Vec<[Scalar; 2]>> {
    let q = Field::Rationals;
    let rats: Vec<&BigRational> = f.coeffs.iter().map(|c| c.as_rational().expect("rational")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r.numer() * &lcm) / r.denom()).collect();
    let mut pts = vec![[q.zero(), q.one()]];
    // f(1,t) = Σ cᵢ tⁱ; zero root when c₀ = 0.
    let nonzero: Vec<(usize, &BigInt)> = ints.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let (lo, hi) = (nonzero.first()?.1, nonzero.last()?.1);
    if nonzero.first()?.0 > 0 {
        pts.push([q.one(), q.zero()]);
    }
    if nonzero.len() == 1 {
        return Some(pts);
    }
    let lo = lo.abs().to_u64().filter(|&v| v <= FACTOR_LIMIT)?;
    let hi = hi.abs().to_u64().filter(|&v| v <= FACTOR_LIMIT)?;
    let mut seen = std::collections::BTreeSet::new();
    for a in divisors(lo) {
        for b in divisors(hi) {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(a) * sign, BigInt::from(b));
                if seen.insert(r.clone()) {
                    pts.push([q.one(), Scalar::Rational(r)]);
                }
            }
        }
    }
    Some(pts)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, 0) => power("s", a),
                (0, b) => power("t", b),
                (a, b) => format!("{} {}", power("s", a), power("t", b)),
            };
            let cs = c.to_string();
            parts.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                (false, _) => format!("{cs} {mono}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

fn power(var: &str, e: usize) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            coefficients: &'a [Scalar],
            text: String,
        }
        Repr { degree: self.degree(), coefficients: &self.coeffs, text: self.to_string() }.serialize(serializer)
    }
}

/// Exact division `f / g`.
pub fn binary_divide(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
    f.divide(g)
}

/// Monic GCD (first nonzero coefficient 1) of the nonzero inputs.
pub fn binary_gcd(fs: &[BinaryForm]) -> Result<BinaryForm> {
    let nonzero: Vec<&BinaryForm> = fs.iter().filter(|f| !f.is_zero()).collect();
    let first = nonzero.first().ok_or(Error::ZeroInput("gcd of zero forms"))?;
    let field = first.field;
    let t_mult = nonzero.iter().map(|f| f.t_multiplicity()).min().unwrap_or(0);
    let mut g: Poly = first.dehomogenize_t();
    for f in &nonzero[1..] {
        g = univariate::gcd(field, &g, &f.dehomogenize_t());
    }
    let g = univariate::monic(g);
    let core = BinaryForm::homogenize_t(field, &g, univariate::degree(&g).unwrap_or(0));
    Ok(core.mul(&BinaryForm::monomial(field, 0, t_mult)))
}

pub fn binary_roots(f: &BinaryForm) -> Result<RootReport> {
    f.roots()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn divide_examples() {
        let s2t = BinaryForm::monomial(q(), 2, 1);
        let t = BinaryForm::monomial(q(), 0, 1);
        assert_eq!(s2t.divide(&t).unwrap(), BinaryForm::monomial(q(), 2, 0));

        let s_minus_t = BinaryForm::from_ints(q(), &[1, -1]);
        assert_eq!(s_minus_t.pow(2).divide(&s_minus_t).unwrap(), s_minus_t);

        let f = BinaryForm::from_ints(q(), &[1, 0, 1]);
        let s = BinaryForm::monomial(q(), 1, 0);
        match f.divide(&s) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, BinaryForm::monomial(q(), 0, 2)),
            other => panic!("expected non-divisibility, got {other:?}"),
        }
        assert!(matches!(BinaryForm::monomial(q(), 0, 2).divide(&s), Err(Error::NotDivisible { .. })));
        assert!(f.divide(&BinaryForm::zero(q(), 1)).is_err());
    }

    #[test]
    fn gcd_examples() {
        let g = binary_gcd(&[BinaryForm::monomial(q(), 2, 1), BinaryForm::monomial(q(), 1, 2)]).unwrap();
        assert_eq!(g, BinaryForm::monomial(q(), 1, 1));

        let g = binary_gcd(&[BinaryForm::monomial(q(), 2, 0), BinaryForm::monomial(q(), 0, 2)]).unwrap();
        assert_eq!(g.degree(), 0);

        // (s−2t)(s+t) = s² − st − 2t², (s−2t)t = st − 2t²
        let a = BinaryForm::from_ints(q(), &[1, -1, -2]);
        let b = BinaryForm::from_ints(q(), &[0, 1, -2]);
        assert_eq!(binary_gcd(&[a, b]).unwrap(), BinaryForm::from_ints(q(), &[1, -2]));

        assert!(binary_gcd(&[BinaryForm::zero(q(), 2)]).is_err());
    }

    #[test]
    fn roots_examples() {
        let st = BinaryForm::monomial(q(), 1, 1);
        let r = st.roots().unwrap();
        let pts: Vec<[Scalar; 2]> = r.roots.iter().map(|x| x.point.clone()).collect();
        assert_eq!(pts, vec![[q().one(), q().zero()], [q().zero(), q().one()]]);

        let f5 = Field::prime(5).unwrap();
        let r = BinaryForm::monomial(f5, 2, 0).roots().unwrap();
        assert_eq!(r.roots, vec![ProjectiveRoot { point: [f5.zero(), f5.one()], multiplicity: 2 }]);

        let r = BinaryForm::from_ints(q(), &[1, 0, 1]).roots().unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.unsolved.len(), 1);
        assert!(r.unsolved[0].certified_irreducible);
        assert_eq!(r.unsolved[0].factor.degree(), 2);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2s − 3t)(s + t)² has roots [1:2/3] and [1:−1] (double).
        let f = BinaryForm::from_ints(q(), &[2, -3]).mul(&BinaryForm::from_ints(q(), &[1, 1]).pow(2));
        let r = f.roots().unwrap();
        assert_eq!(r.total_root_multiplicity(), 3);
        let two_thirds = q().parse_scalar("2/3").unwrap();
        assert!(r.roots.iter().any(|x| x.point[1] == two_thirds && x.multiplicity == 1));
        assert!(r.roots.iter().any(|x| x.point[1] == q().from_i64(-1) && x.multiplicity == 2));
    }

    #[test]
    fn repeated_irreducible_factor_is_split() {
        let quad = BinaryForm::from_ints(q(), &[1, 0, 1]);
        let f = quad.pow(2).mul(&BinaryForm::from_ints(q(), &[1, 3]));
        let r = f.roots().unwrap();
        assert_eq!(r.total_root_multiplicity(), 1);
        assert_eq!(r.unsolved.len(), 1);
        assert_eq!(r.unsolved[0].multiplicity, 2);
        assert_eq!(r.unsolved[0].factor, quad);
    }

    #[test]
    fn display() {
        assert_eq!(BinaryForm::from_ints(q(), &[3, 0, -1]).to_string(), "3 s^2 - t^2");
        assert_eq!(BinaryForm::from_ints(q(), &[0, -1]).to_string(), "-t");
        assert_eq!(BinaryForm::zero(q(), 2).to_string(), "0");
    }
}
