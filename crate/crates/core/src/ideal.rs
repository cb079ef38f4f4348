// SPDX-License-Identifier: Apache-2.0

//! The generators `p_j` on a line, the degree filtration `M̂₁ ⊂ ⋯ ⊂ M̂_c` they span, graded
//! pieces of the ideal `I_E ⊂ Sym E*`, and multiplicities of its elements at points of `ℙE`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{binary_gcd, BinaryForm, RootReport};
use crate::linalg::{Field, Scalar, Subspace};
use crate::pencil::NormalForm;
use crate::tangent::TangentReport;

/// The generator attached to one block of the normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    /// `(w_head ⌟ P)|_E / (α²)^{s−1}`, unscaled.
    pub form: BinaryForm,
    pub block_size: usize,
    pub block: usize,
}

impl Generator {
    pub fn degree(&self) -> usize {
        self.form.degree()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
    /// Degree `d` of the hypersurface.
    pub degree: usize,
}

impl GeneratorSet {
    pub fn field(&self) -> Field {
        self.generators[0].form.field()
    }

    pub fn s1(&self) -> usize {
        self.generators.iter().map(|g| g.block_size).max().unwrap_or(0)
    }
}

/// `(α¹)^{j−1}(α²)^{s−j}·p` with `α` from the normal form.
pub fn chain_prediction(nf: &NormalForm, p: &BinaryForm, s: usize, j: usize) -> BinaryForm {
    let [a1, a2] = alpha_forms(nf);
    a1.pow(j - 1).mul(&a2.pow(s - j)).mul(p)
}

fn alpha_forms(nf: &NormalForm) -> [BinaryForm; 2] {
    let [[a, b], [c, d]] = &nf.alpha;
    [BinaryForm::linear(a.clone(), b.clone()), BinaryForm::linear(c.clone(), d.clone())]
}

/// Peels `p` off the head of each chain and checks every chain identity exactly.
pub fn extract_generators(report: &TangentReport, nf: &NormalForm) -> Result<GeneratorSet> {
    if nf.m != report.m {
        return Err(Error::DimensionMismatch { expected: report.m, found: nf.m });
    }
    let d = report.degree;
    let [_, a2] = alpha_forms(nf);
    let mut generators = Vec::with_capacity(nf.r);
    for (j, block) in nf.blocks().enumerate() {
        let s = block.len();
        if d < s {
            return Err(Error::DegreeTooSmall { block_size: s, degree: d });
        }
        let restricted: Vec<BinaryForm> =
            block.iter().map(|w| report.restricted_contraction(&report.lift_from_quotient(w))).collect();
        let p = restricted[0]
            .divide(&a2.pow(s - 1))
            .map_err(|_| Error::ChainIdentityViolated { block: j, position: 0 })?;
        for (i, f) in restricted.iter().enumerate().skip(1) {
            if *f != chain_prediction(nf, &p, s, i + 1) {
                return Err(Error::ChainIdentityViolated { block: j, position: i });
            }
        }
        generators.push(Generator { form: p, block_size: s, block: j });
    }
    if generators.is_empty() {
        return Err(Error::ZeroInput("no blocks (m = 0)"));
    }
    Ok(GeneratorSet { generators, degree: d })
}

/// `V·S^e`, inside `S^{k+e}` for `V ⊆ S^k`.
pub fn multiply_by_all(v: &Subspace, e: usize) -> Subspace {
    let field = v.field();
    let k = v.ambient_dim() - 1;
    let rows = v
        .basis()
        .iter()
        .flat_map(|b| {
            let f = BinaryForm::from_vector(field, b);
            (0..=e).map(move |i| f.mul(&BinaryForm::monomial(field, e - i, i)).to_vector())
        })
        .collect();
    Subspace::span(field, k + e + 1, rows).expect("well-formed")
}

fn span_forms(field: Field, degree: usize, forms: &[&BinaryForm]) -> Subspace {
    Subspace::span(field, degree + 1, forms.iter().map(|f| f.to_vector()).collect()).expect("same degree")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationLevel {
    pub delta: usize,
    /// `i_j`: number of generators of degree `≤ δ_j`.
    pub count: usize,
    pub hat: Subspace,
    /// `dim M̂_{j−1}·S^{δ_j−δ_{j−1}}`.
    pub carried_dim: usize,
    /// `dim M_j = dim M̂_j − carried_dim`.
    pub quotient_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealFiltration {
    pub levels: Vec<FiltrationLevel>,
    pub degree: usize,
    pub block_sizes: Vec<usize>,
    /// `r ≤ dim C_x + 1`, when `dim C_x` was supplied.
    pub generator_bound_ok: Option<bool>,
}

impl IdealFiltration {
    pub fn field(&self) -> Field {
        self.levels[0].hat.field()
    }

    pub fn deltas(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.delta).collect()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn c(&self) -> usize {
        self.levels.len()
    }

    pub fn s1(&self) -> usize {
        self.block_sizes.iter().copied().max().unwrap_or(0)
    }
}

pub fn build_filtration(gens: &GeneratorSet, dim_cx: Option<usize>) -> Result<IdealFiltration> {
    let first = gens.generators.first().ok_or(Error::ZeroInput("empty generator set"))?;
    let field = first.form.field();
    let mut deltas: Vec<usize> = gens.generators.iter().map(Generator::degree).collect();
    deltas.sort_unstable();
    deltas.dedup();
    let mut levels: Vec<FiltrationLevel> = Vec::with_capacity(deltas.len());
    for &delta in &deltas {
        let new: Vec<&BinaryForm> = gens.generators.iter().filter(|g| g.degree() == delta).map(|g| &g.form).collect();
        let carried = match levels.last() {
            Some(prev) => multiply_by_all(&prev.hat, delta - prev.delta),
            None => Subspace::zero(field, delta + 1),
        };
        let hat = carried.join(&span_forms(field, delta, &new))?;
        let count = gens.generators.iter().filter(|g| g.degree() <= delta).count();
        levels.push(FiltrationLevel {
            delta,
            count,
            quotient_dim: hat.dim() - carried.dim(),
            carried_dim: carried.dim(),
            hat,
        });
    }
    Ok(IdealFiltration {
        levels,
        degree: gens.degree,
        block_sizes: gens.generators.iter().map(|g| g.block_size).collect(),
        generator_bound_ok: dim_cx.map(|c| gens.generators.len() <= c + 1),
    })
}

/// `(I_E)_k = Σ_{δ_j ≤ k} M̂_j·S^{k−δ_j}`; zero below `δ₁`.
pub fn ideal_degree_piece(filt: &IdealFiltration, k: usize) -> Subspace {
    let field = filt.field();
    filt.levels
        .iter()
        .filter(|l| l.delta <= k)
        .fold(Subspace::zero(field, k + 1), |acc, l| acc.join(&multiply_by_all(&l.hat, k - l.delta)).expect("same ambient"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageComparison {
    pub equal: bool,
    /// `d ≥ s₁ + 1`.
    pub hypothesis_met: bool,
    pub degree: usize,
    pub s1: usize,
    pub image_dim: usize,
    pub ideal_dim: usize,
}

/// Compares `Image σ` with `Σ_j S^{s_j}·p_j = (I_E)_d`.
pub fn contains_image_sigma(filt: &IdealFiltration, report: &TangentReport) -> ImageComparison {
    let image = report.sigma_matrix.row_space();
    let ideal = ideal_degree_piece(filt, report.degree);
    ImageComparison {
        equal: image == ideal,
        hypothesis_met: filt.degree > filt.s1(),
        degree: filt.degree,
        s1: filt.s1(),
        image_dim: image.dim(),
        ideal_dim: ideal.dim(),
    }
}

/// `b·α¹ − a·α²`, the linear form vanishing at `[a:b]`.
pub fn vanishing_form(x: &[Scalar; 2]) -> BinaryForm {
    BinaryForm::linear(x[1].clone(), -&x[0])
}

/// Largest `t` with `V ∩ η^t·S^{k−t} ≠ 0`, where `η` vanishes at `x`.
pub fn max_multiplicity_at(v: &Subspace, x: &[Scalar; 2]) -> Result<usize> {
    if v.is_zero() {
        return Err(Error::ZeroInput("multiplicity of the zero subspace"));
    }
    if x[0].is_zero() && x[1].is_zero() {
        return Err(Error::ZeroInput("zero vector is not a projective point"));
    }
    let field = v.field();
    let k = v.ambient_dim() - 1;
    let eta = vanishing_form(x);
    for t in (1..=k).rev() {
        let power = Subspace::span(field, t + 1, vec![eta.pow(t).to_vector()])?;
        if !v.meet(&multiply_by_all(&power, k - t))?.is_zero() {
            return Ok(t);
        }
    }
    Ok(0)
}

/// Points `x` at which some element of `V ⊆ S^k` vanishes to order `k`, i.e. `η_x^k ∈ V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExceptionalSet {
    /// `V = S^k`.
    All,
    /// Zeros of `locus` (a binary form in the coordinates of `x`).
    Finite { locus: BinaryForm, roots: RootReport },
}

impl ExceptionalSet {
    pub fn contains(&self, x: &[Scalar; 2]) -> bool {
        match self {
            ExceptionalSet::All => true,
            ExceptionalSet::Finite { locus, .. } => locus.eval(&x[0], &x[1]).is_zero(),
        }
    }
}

pub fn exceptional_points(v: &Subspace) -> Result<ExceptionalSet> {
    let field = v.field();
    let k = v.ambient_dim() - 1;
    let ann = v.annihilator();
    if ann.is_zero() {
        return Ok(ExceptionalSet::All);
    }
    // η^k = Σ_i C(k,i) (−a)^i b^{k−i} s^{k−i} t^i; pairing with φ gives a form in (a, b).
    let mut int_binom = vec![BigInt::from(1)];
    for i in 1..=k {
        let next = &int_binom[i - 1] * BigInt::from(k - i + 1) / BigInt::from(i);
        int_binom.push(next);
    }
    let binom: Vec<Scalar> = int_binom.iter().map(|c| field.from_bigint(c)).collect();
    let forms: Vec<BinaryForm> = ann
        .basis()
        .iter()
        .map(|phi| {
            let mut coeffs = vec![field.zero(); k + 1];
            for i in 0..=k {
                let c = &phi[i] * &binom[i];
                coeffs[k - i] = if i % 2 == 1 { -c } else { c };
            }
            BinaryForm::from_coeffs(field, coeffs).expect("valid")
        })
        .filter(|f| !f.is_zero())
        .collect();
    if forms.is_empty() {
        return Ok(ExceptionalSet::All);
    }
    let locus = binary_gcd(&forms)?;
    let roots = locus.roots()?;
    Ok(ExceptionalSet::Finite { locus, roots })
}
