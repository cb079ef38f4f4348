// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::binary::BinaryForm;
use crate::linalg::{Field, Matrix, Scalar, Vector};

pub type Exponent = Vec<u32>;

/// A homogeneous form in `nvars` variables, stored sparsely.
///
/// Contraction follows the directional-derivative convention `v ⌟ P = D_v P`, with no
/// `1/d` normalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiForm {
    field: Field,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

/// All exponent vectors of total degree `degree` in `nvars` variables, lexicographically
/// descending (for two variables: `s^d, s^{d−1}t, …, t^d`).
pub fn monomials(nvars: usize, degree: usize) -> Vec<Exponent> {
    fn rec(nvars: usize, degree: usize, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if nvars == 1 {
            prefix.push(degree as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e as u32);
            rec(nvars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

fn factorial(field: Field, k: usize) -> Scalar {
    (1..=k).fold(field.one(), |acc, i| acc * field.from_u64(i as u64))
}

impl MultiForm {
    pub fn zero(field: Field, nvars: usize, degree: usize) -> MultiForm {
        MultiForm { field, nvars, degree, terms: BTreeMap::new() }
    }

    /// Sums the given terms; every exponent must have length `nvars` and total `degree`.
    pub fn from_terms(
        field: Field,
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Exponent, Scalar)>,
    ) -> Result<MultiForm> {
        let mut form = MultiForm::zero(field, nvars, degree);
        for (exp, c) in terms {
            field.check(&c)?;
            if exp.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: exp.len() });
            }
            let total: u32 = exp.iter().sum();
            if total as usize != degree {
                return Err(Error::InvalidInput(format!(
                    "exponent {exp:?} has degree {total}, expected {degree}"
                )));
            }
            form.add_term(exp, c);
        }
        Ok(form)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(field: Field, terms: &[(i64, &[u32])]) -> Result<MultiForm> {
        let (_, first) = terms.first().ok_or(Error::ZeroInput("form without terms"))?;
        let nvars = first.len();
        let degree = first.iter().sum::<u32>() as usize;
        MultiForm::from_terms(
            field,
            nvars,
            degree,
            terms.iter().map(|(c, e)| (e.to_vec(), field.from_i64(*c))),
        )
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> MultiForm {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        MultiForm::from_terms(field, nvars, 1, [(exp, field.one())]).expect("valid variable")
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> MultiForm {
        let mut f = MultiForm::zero(field, nvars, 0);
        f.add_term(vec![0; nvars], c);
        f
    }

    fn add_term(&mut self, exp: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients listed in the order of `basis`.
    pub fn coefficient_vector(&self, basis: &[Exponent]) -> Vector {
        basis.iter().map(|e| self.coefficient(e)).collect()
    }

    fn check_same_shape(&self, other: &MultiForm) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field.to_string(), found: other.field.to_string() });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiForm) -> Result<MultiForm> {
        self.check_same_shape(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DimensionMismatch { expected: self.degree, found: other.degree });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = MultiForm { degree, ..self.clone() };
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> MultiForm {
        let mut out = MultiForm::zero(self.field, self.nvars, self.degree);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), c * x);
        }
        out
    }

    pub fn mul(&self, other: &MultiForm) -> Result<MultiForm> {
        self.check_same_shape(other)?;
        let mut out = MultiForm::zero(self.field, self.nvars, self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> MultiForm {
        let mut acc = MultiForm::constant(self.field, self.nvars, self.field.one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    fn check_point(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: v.len() });
        }
        v.iter().try_for_each(|s| self.field.check(s))
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        self.check_point(point)?;
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = term * x.pow(k as u64);
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// `∂P/∂xᵢ`.
    pub fn partial(&self, i: usize) -> Result<MultiForm> {
        if self.degree == 0 {
            return Err(Error::ContractConstant);
        }
        if i >= self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: i + 1 });
        }
        let mut out = MultiForm::zero(self.field, self.nvars, self.degree - 1);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * &self.field.from_u64(e[i] as u64));
        }
        Ok(out)
    }

    pub fn gradient_at(&self, point: &[Scalar]) -> Result<Vector> {
        self.check_point(point)?;
        (0..self.nvars).map(|i| self.partial(i)?.evaluate(point)).collect()
    }

    /// `v ⌟ P = Σ vᵢ ∂P/∂xᵢ`.
    pub fn contract(&self, v: &[Scalar]) -> Result<MultiForm> {
        if self.degree == 0 {
            return Err(Error::ContractConstant);
        }
        self.check_point(v)?;
        let mut out = MultiForm::zero(self.field, self.nvars, self.degree - 1);
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                out = out.add(&self.partial(i)?.scale(vi))?;
            }
        }
        Ok(out)
    }

    /// `P(Σ sⱼ vⱼ)` as a form in the variables `s₀ … s_k`; no independence requirement.
    pub fn substitute(&self, vectors: &[Vector]) -> Result<MultiForm> {
        for v in vectors {
            self.check_point(v)?;
        }
        let k = vectors.len();
        let linear: Vec<MultiForm> = (0..self.nvars)
            .map(|i| {
                MultiForm::from_terms(
                    self.field,
                    k,
                    1,
                    vectors.iter().enumerate().map(|(j, v)| {
                        let mut e = vec![0; k];
                        e[j] = 1;
                        (e, v[i].clone())
                    }),
                )
                .expect("linear form")
            })
            .collect();
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<MultiForm>> = linear
            .iter()
            .map(|l| {
                let mut p = vec![MultiForm::constant(self.field, k, self.field.one())];
                for _ in 0..max_exp {
                    let next = p.last().unwrap().mul(l).expect("same shape");
                    p.push(next);
                }
                p
            })
            .collect();
        let mut out = MultiForm::zero(self.field, k, self.degree);
        for (e, c) in &self.terms {
            let mut term = MultiForm::constant(self.field, k, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    term = term.mul(&powers[i][ei as usize])?;
                }
            }
            out = out.add(&term)?;
        }
        out.degree = self.degree;
        Ok(out)
    }

    /// Restriction to the plane spanned by `basis`, which must be independent.
    pub fn restrict_to_plane(&self, basis: &[Vector]) -> Result<MultiForm> {
        let m = Matrix::new(self.field, self.nvars, basis.to_vec())?;
        if m.rank() < basis.len() {
            return Err(Error::DependentBasis);
        }
        self.substitute(basis)
    }

    /// `P(s·e₁ + t·e₂)` computed with dense binary arithmetic.
    pub fn restrict_to_line(&self, e1: &[Scalar], e2: &[Scalar]) -> Result<BinaryForm> {
        self.check_point(e1)?;
        self.check_point(e2)?;
        let field = self.field;
        let linear: Vec<BinaryForm> =
            (0..self.nvars).map(|i| BinaryForm::linear(e1[i].clone(), e2[i].clone())).collect();
        let mut cache: Vec<Vec<BinaryForm>> = linear.iter().map(|l| vec![BinaryForm::constant(field.one()), l.clone()]).collect();
        let mut out = BinaryForm::zero(field, self.degree);
        for (e, c) in &self.terms {
            let mut term = BinaryForm::constant(c.clone());
            for (i, &ei) in e.iter().enumerate() {
                let ei = ei as usize;
                if ei == 0 {
                    continue;
                }
                while cache[i].len() <= ei {
                    let next = cache[i].last().unwrap().mul(&linear[i]);
                    cache[i].push(next);
                }
                term = term.mul(&cache[i][ei]);
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Polarization value `P(v₁^{a₁}, …, v_q^{a_q})` of the symmetric multilinear form with
    /// `P(v,…,v) = P(v)`.
    pub fn multilinear_eval(&self, args: &[(Vector, usize)]) -> Result<Scalar> {
        let total: usize = args.iter().map(|(_, a)| a).sum();
        if total != self.degree {
            return Err(Error::InvalidInput(format!(
                "multiplicities sum to {total}, form has degree {}",
                self.degree
            )));
        }
        let p = self.field.characteristic();
        if p != 0 && p as usize <= self.degree {
            return Err(Error::CharacteristicTooSmall { characteristic: p, degree: self.degree });
        }
        let vectors: Vec<Vector> = args.iter().map(|(v, _)| v.clone()).collect();
        let sub = self.substitute(&vectors)?;
        let exp: Exponent = args.iter().map(|(_, a)| *a as u32).collect();
        let coeff = sub.coefficient(&exp);
        let numer = args.iter().fold(self.field.one(), |acc, (_, a)| acc * factorial(self.field, *a));
        Ok(coeff * numer / factorial(self.field, self.degree))
    }

    /// Reinterprets the coefficients in another field (ℚ → 𝔽_p reduction, or identity).
    pub fn change_field(&self, target: Field) -> Result<MultiForm> {
        if target == self.field {
            return Ok(self.clone());
        }
        if self.field != Field::Rationals {
            return Err(Error::FieldMismatch { expected: target.to_string(), found: self.field.to_string() });
        }
        let mut out = MultiForm::zero(target, self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), target.from_rational(c.as_rational().expect("rational"))?);
        }
        Ok(out)
    }
}

impl Serialize for MultiForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coefficient: &'a Scalar,
            exponents: &'a Exponent,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            field: String,
            nvars: usize,
            degree: usize,
            terms: Vec<Term<'a>>,
        }
        Repr {
            field: self.field.to_string(),
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| Term { coefficient: c, exponents: e }).collect(),
        }
        .serialize(serializer)
    }
}

/// `v ⌟ P`.
pub fn contract(v: &[Scalar], p: &MultiForm) -> Result<MultiForm> {
    p.contract(v)
}

pub fn restrict_to_plane(p: &MultiForm, basis: &[Vector]) -> Result<MultiForm> {
    p.restrict_to_plane(basis)
}

pub fn multilinear_eval(p: &MultiForm, args: &[(Vector, usize)]) -> Result<Scalar> {
    p.multilinear_eval(args)
}
