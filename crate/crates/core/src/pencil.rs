// SPDX-License-Identifier: Apache-2.0

//! Constant-rank-two subspaces `L ⊆ K²⊗K^m` and their chain normal form
//! `α¹⊗w₁ − α²⊗w₂, α¹⊗w₂ − α²⊗w₃, …`, one chain per block.
//!
//! An element `ε¹⊗X₀ + ε²⊗X₁` (standard dual basis `ε` of `K²`) is stored as `[X₀ | X₁]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, kernel, unit_vector, zero_vector, Field, Matrix, Scalar, Subspace, Vector};

/// A basis `(α¹, α²)` of `K²`, each written in the standard coordinates.
pub type Alpha = [[Scalar; 2]; 2];

pub fn standard_alpha(field: Field) -> Alpha {
    [[field.one(), field.zero()], [field.zero(), field.one()]]
}

/// `R = {(u, v) : α¹⊗u − α²⊗v ∈ L}`, stored as rows `[u | v]`.
#[derive(Clone, Debug)]
struct Relation {
    m: usize,
    pairs: Subspace,
}

impl Relation {
    fn new(l: &Subspace, alpha: &Alpha) -> Result<Relation> {
        let field = l.field();
        if l.ambient_dim() % 2 != 0 {
            return Err(Error::InvalidInput(format!("pencil ambient dimension {} is odd", l.ambient_dim())));
        }
        let m = l.ambient_dim() / 2;
        let [[a, b], [c, d]] = alpha;
        for x in alpha.iter().flatten() {
            field.check(x)?;
        }
        let det = &(a * d) - &(b * c);
        let inv = det.inv().ok_or(Error::DependentBasis)?;
        let rows = l
            .basis()
            .iter()
            .map(|x| {
                let (x0, x1) = x.split_at(m);
                let mut row: Vector = (0..m).map(|j| &(&(d * &x0[j]) - &(c * &x1[j])) * &inv).collect();
                row.extend((0..m).map(|j| &(&(b * &x0[j]) - &(a * &x1[j])) * &inv));
                row
            })
            .collect();
        Ok(Relation { m, pairs: Subspace::span(field, 2 * m, rows)? })
    }

    fn field(&self) -> Field {
        self.pairs.field()
    }

    fn project(&self, pairs: &Subspace, second: bool) -> Subspace {
        let m = self.m;
        let rows = pairs
            .basis()
            .iter()
            .map(|r| if second { r[m..].to_vec() } else { r[..m].to_vec() })
            .collect();
        Subspace::span(self.field(), m, rows).expect("well-formed")
    }

    fn domain(&self) -> Subspace {
        self.project(&self.pairs, false)
    }

    fn image(&self) -> Subspace {
        self.project(&self.pairs, true)
    }

    /// `V × K^m` or `K^m × V`.
    fn product(&self, v: &Subspace, first: bool) -> Subspace {
        let field = self.field();
        let m = self.m;
        let mut rows: Vec<Vector> = v
            .basis()
            .iter()
            .map(|x| {
                let mut r = zero_vector(field, 2 * m);
                let off = if first { 0 } else { m };
                r[off..off + m].clone_from_slice(x);
                r
            })
            .collect();
        let off = if first { m } else { 0 };
        rows.extend((0..m).map(|j| unit_vector(field, 2 * m, off + j)));
        Subspace::span(field, 2 * m, rows).expect("well-formed")
    }

    /// `p₂(R ∩ (V × K^m))`.
    fn forward(&self, v: &Subspace) -> Subspace {
        let meet = self.pairs.meet(&self.product(v, true)).expect("compatible");
        self.project(&meet, true)
    }

    /// `p₁(R ∩ (K^m × D))`.
    fn backward(&self, d: &Subspace) -> Subspace {
        let meet = self.pairs.meet(&self.product(d, false)).expect("compatible");
        self.project(&meet, false)
    }

    /// The unique `v` with `(u, v) ∈ R`; requires `p₁` injective.
    fn apply(&self, u: &[Scalar]) -> Option<Vector> {
        let m = self.m;
        let mut x = u.to_vec();
        x.extend(zero_vector(self.field(), m));
        let r = self.pairs.reduce(&x);
        if !is_zero_vector(&r[..m]) {
            return None;
        }
        Some(r[m..].iter().map(|c| -c).collect())
    }

    /// Why `L` fails to be constant rank two, if it does.
    fn degeneracy(&self) -> Option<String> {
        let dim = self.pairs.dim();
        if self.domain().dim() < dim {
            return Some("L contains an element α²⊗w (first projection not injective)".into());
        }
        if self.image().dim() < dim {
            return Some("L contains an element α¹⊗w (second projection not injective)".into());
        }
        let stable = self.v_chain().last().cloned().expect("nonempty chain");
        if !stable.is_zero() {
            return Some(format!(
                "the relation has a {}-dimensional invariant subspace; L contains (aα¹ + bα²)⊗w over the algebraic closure",
                stable.dim()
            ));
        }
        None
    }

    /// `V₀ = K^m, V_t = p₂(R ∩ (V_{t−1} × K^m))`, until it stabilizes.
    fn v_chain(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.field(), self.m)];
        loop {
            let next = self.forward(chain.last().unwrap());
            if next == *chain.last().unwrap() {
                return chain;
            }
            chain.push(next);
        }
    }
}

/// Whether some nonzero element of `L` has rank ≤ 1 over the algebraic closure of the field.
///
/// `L` has no such element exactly when both projections of `R` are injective and the
/// partial map `u ↦ v` it defines has no invariant subspace (`V_t` reaches 0).
pub fn has_decomposable(l: &Subspace) -> Result<bool> {
    let rel = Relation::new(l, &standard_alpha(l.field()))?;
    Ok(rel.degeneracy().is_some())
}

/// A rational decomposable element `(aε¹ + bε²)⊗w ∈ L`, found by trying every `[a:b] ∈ ℙ¹(𝔽_p)`.
pub fn rational_decomposable_witness(l: &Subspace) -> Result<Option<([Scalar; 2], Vector)>> {
    let field = l.field();
    if !field.is_finite() {
        return Err(Error::FiniteFieldRequired);
    }
    let m = l.ambient_dim() / 2;
    let ann = l.annihilator();
    let mut points = vec![[field.one(), field.zero()]];
    points.extend(field.elements()?.map(|t| [t, field.one()]));
    for [a, b] in points {
        let rows: Vec<Vector> = ann
            .basis()
            .iter()
            .map(|f| (0..m).map(|j| &(&a * &f[j]) + &(&b * &f[m + j])).collect())
            .collect();
        let k = kernel(&Matrix::new(field, m, rows)?);
        if let Some(w) = k.basis().first() {
            return Ok(Some(([a, b], w.clone())));
        }
    }
    Ok(None)
}

/// Chain normal form of a constant-rank-two `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub m: usize,
    pub r: usize,
    /// `s₁ ≥ ⋯ ≥ s_r ≥ 1`, summing to `m`.
    pub s: Vec<usize>,
    /// `w₁, …, w_m`, block by block.
    pub adapted_basis: Vec<Vector>,
    pub alpha: Alpha,
    pub chain_offsets: Vec<usize>,
    /// `dim V_t` for `t = 0, 1, …` down to 0.
    pub vchain_dims: Vec<usize>,
}

impl NormalForm {
    pub fn field(&self) -> Field {
        self.alpha[0][0].field()
    }

    pub fn block(&self, j: usize) -> &[Vector] {
        let start = self.chain_offsets[j];
        &self.adapted_basis[start..start + self.s[j]]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[Vector]> {
        (0..self.r).map(|j| self.block(j))
    }

    /// `α¹⊗w_i − α²⊗w_{i+1}` for consecutive vectors of each block, as `[X₀ | X₁]`.
    pub fn generators(&self) -> Vec<Vector> {
        let [[a, b], [c, d]] = &self.alpha;
        let mut out = Vec::new();
        for block in self.blocks() {
            for pair in block.windows(2) {
                let (u, v) = (&pair[0], &pair[1]);
                let mut x: Vector = (0..self.m).map(|j| &(a * &u[j]) - &(c * &v[j])).collect();
                x.extend((0..self.m).map(|j| &(b * &u[j]) - &(d * &v[j])));
                out.push(x);
            }
        }
        out
    }

    /// Reconstruction of `L` from the chains.
    pub fn pencil(&self) -> Subspace {
        Subspace::span(self.field(), 2 * self.m, self.generators()).expect("well-formed")
    }
}

/// Puts `L` in normal form relative to `alpha`.
pub fn normal_form(l: &Subspace, alpha: &Alpha) -> Result<NormalForm> {
    let rel = Relation::new(l, alpha)?;
    if let Some(why) = rel.degeneracy() {
        return Err(Error::NotConstantRankTwo(why));
    }
    let field = l.field();
    let m = rel.m;
    let vchain_dims: Vec<usize> = rel.v_chain().iter().map(Subspace::dim).collect();

    // D_t: vectors whose chain continues for at least t more steps.
    let mut d = vec![Subspace::full(field, m)];
    while !d.last().unwrap().is_zero() {
        let next = rel.backward(d.last().unwrap());
        d.push(next);
    }
    let img = rel.image();
    let mut chains: Vec<Vec<Vector>> = Vec::new();
    for t in (1..d.len()).rev() {
        let inner = d[t].join(&img.meet(&d[t - 1])?)?;
        for head in d[t - 1].complement_of(&inner)? {
            let mut chain = vec![head];
            for _ in 1..t {
                let next = rel.apply(chain.last().unwrap()).expect("chain stays in the domain");
                chain.push(next);
            }
            chains.push(chain);
        }
    }

    let s: Vec<usize> = chains.iter().map(Vec::len).collect();
    let chain_offsets = s
        .iter()
        .scan(0, |acc, &len| {
            let start = *acc;
            *acc += len;
            Some(start)
        })
        .collect();
    let nf = NormalForm {
        m,
        r: chains.len(),
        s,
        adapted_basis: chains.into_iter().flatten().collect(),
        alpha: alpha.clone(),
        chain_offsets,
        vchain_dims,
    };
    assert!(verify_normal_form(l, &nf), "normal form construction failed verification");
    Ok(nf)
}

/// Checks sizes, ordering, that the adapted vectors form a basis, and that the chain
/// generators span exactly `L`.
pub fn verify_normal_form(l: &Subspace, nf: &NormalForm) -> bool {
    let field = l.field();
    if l.ambient_dim() != 2 * nf.m || nf.field() != field {
        return false;
    }
    if nf.s.len() != nf.r || nf.chain_offsets.len() != nf.r || nf.s.iter().sum::<usize>() != nf.m {
        return false;
    }
    if nf.s.iter().any(|&x| x == 0) || nf.s.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    if nf.r + l.dim() != nf.m || nf.adapted_basis.len() != nf.m {
        return false;
    }
    if nf.adapted_basis.iter().any(|v| v.len() != nf.m || v.iter().any(|c| !field.owns(c))) {
        return false;
    }
    let mut offset = 0;
    for (j, &len) in nf.s.iter().enumerate() {
        if nf.chain_offsets[j] != offset {
            return false;
        }
        offset += len;
    }
    let basis = Subspace::span(field, nf.m, nf.adapted_basis.clone());
    if !matches!(basis, Ok(ref b) if b.dim() == nf.m) {
        return false;
    }
    nf.pencil() == *l
}

/// Contents of a pencil file: a field, `m`, and basis elements of `L` as 2×m matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilInput {
    pub field: Field,
    pub m: usize,
    pub elements: Vec<Vector>,
}

impl PencilInput {
    pub fn subspace(&self) -> Result<Subspace> {
        Subspace::span(self.field, 2 * self.m, self.elements.clone())
    }
}

/// Parses
///
/// ```text
/// field Fp 7
/// m 3
/// 1 0 0     # α¹ row of the first element
/// 0 -1 0    # α² row
/// ```
pub fn parse_pencil(text: &str) -> Result<PencilInput> {
    let mut field = None;
    let mut m = None;
    let mut rows: Vec<(usize, Vector)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: lineno + 1, message };
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[0] {
            "field" => field = Some(words[1..].join(" ").parse::<Field>().map_err(|e| err(e.to_string()))?),
            "m" => {
                let v = words.get(1).and_then(|w| w.parse().ok()).ok_or_else(|| err("expected `m <m>`".into()))?;
                m = Some(v);
            }
            _ => {
                let f = field.ok_or_else(|| err("`field` must precede matrix rows".into()))?;
                let mm = m.ok_or_else(|| err("`m` must precede matrix rows".into()))?;
                if words.len() != mm {
                    return Err(err(format!("expected {mm} entries, found {}", words.len())));
                }
                let row = words.iter().map(|w| f.parse_scalar(w)).collect::<Result<Vector>>().map_err(|e| err(e.to_string()))?;
                rows.push((lineno + 1, row));
            }
        }
    }
    let field = field.ok_or(Error::Parse { line: 0, message: "missing `field` header".into() })?;
    let m = m.ok_or(Error::Parse { line: 0, message: "missing `m` header".into() })?;
    if rows.len() % 2 != 0 {
        let line = rows.last().map(|(l, _)| *l).unwrap_or(0);
        return Err(Error::Parse { line, message: "odd number of matrix rows".into() });
    }
    let elements = rows
        .chunks(2)
        .map(|pair| {
            let mut x = pair[0].1.clone();
            x.extend(pair[1].1.iter().cloned());
            x
        })
        .collect();
    Ok(PencilInput { field, m, elements })
}
