// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corpus::{cubic_cone, cubic_cone_line, fermat, fermat_cubic_line, quadric, quadric_line, random_with_line};
use crate::forms::BinaryForm;
use crate::linalg::{add_vectors, scale_vector, unit_vector, vector_from_ints};

const Q: Field = Field::Rationals;

/// `σ` rebuilt without contraction: `(w ⌟ P)|_E` is the `u`-linear coefficient of
/// `P(s·e₀ + ⋯ + u·w)`.
fn sigma_by_substitution(x: &Hypersurface, frame: &PlaneFrame) -> Matrix {
    let field = x.field();
    let np = frame.plane().len();
    let basis = monomials(np, x.degree());
    let mut firsts = Vec::new();
    for w in frame.complement() {
        let mut vs = frame.plane().to_vec();
        vs.push(w.clone());
        let q = x.form().substitute(&vs).unwrap();
        let mut f = MultiForm::zero(field, np, x.degree() - 1);
        for (e, c) in q.terms() {
            if e[np] == 1 {
                let t = MultiForm::from_terms(field, np, x.degree() - 1, [(e[..np].to_vec(), c.clone())]).unwrap();
                f = f.add(&t).unwrap();
            }
        }
        firsts.push(f);
    }
    let mut rows = Vec::new();
    for i in 0..np {
        let a = MultiForm::variable(field, np, i);
        for f in &firsts {
            rows.push(a.mul(f).unwrap().coefficient_vector(&basis));
        }
    }
    Matrix::new(field, basis.len(), rows).unwrap()
}

/// The `ε`-coefficient of `P(s(e₁+εW₁) + t(e₂+εW₂))`, computed by substituting four vectors.
fn first_order_defect(x: &Hypersurface, frame: &LineFrame, w1: &[Scalar], w2: &[Scalar]) -> BinaryForm {
    let field = x.field();
    let vs = vec![frame.e1().to_vec(), frame.e2().to_vec(), w1.to_vec(), w2.to_vec()];
    let q = x.form().substitute(&vs).unwrap();
    let d = x.degree();
    let mut out = vec![field.zero(); d + 1];
    for (e, c) in q.terms() {
        if e[2] + e[3] != 1 {
            continue;
        }
        let tdeg = (e[1] + e[3]) as usize;
        out[tdeg] = &out[tdeg] + c;
    }
    BinaryForm::from_coeffs(field, out).unwrap()
}

fn order_zero(x: &Hypersurface, frame: &LineFrame) -> bool {
    x.form().restrict_to_line(frame.e1(), frame.e2()).unwrap().is_zero()
}

#[test]
fn quadric_worked_example() {
    let x = quadric(Q);
    let e = quadric_line(Q);
    let s = sigma(&x, &e).unwrap();
    assert_eq!((s.nrows(), s.ncols()), (4, 3));
    assert_eq!(s.rank(), 3);
    let r = analyze_line(&x, &e).unwrap();
    assert_eq!(r.restricted[0], BinaryForm::from_ints(Q, &[0, -1]));
    assert_eq!(r.restricted[1], BinaryForm::from_ints(Q, &[1, 0]));
    assert_eq!(r.tangent_dim, 1);
    let expected = Subspace::span(Q, 4, vec![vector_from_ints(Q, &[1, 0, 0, 1])]).unwrap();
    assert_eq!(r.kernel, expected);
    assert!(r.pi.is_zero());
    assert_eq!(r.m, 2);
    assert_eq!(r.pencil, expected);
    for pt in [vector_from_ints(Q, &[1, 0, 0, 0]), vector_from_ints(Q, &[2, 3, 0, 0])] {
        assert!(tangent_cone_lines(&x, &e, &pt).unwrap().is_zero());
    }
}

#[test]
fn fermat_cubic_line_is_rigid() {
    let x = fermat(Q, 3, 3).unwrap();
    let e = fermat_cubic_line(Q);
    assert_eq!(sigma(&x, &e).unwrap().rank(), 4);
    let r = analyze_line(&x, &e).unwrap();
    assert_eq!(r.tangent_dim, 0);
    assert!(r.pi.is_zero());
    assert_eq!(r.m, 2);
    assert!(r.pencil.is_zero());
    assert_eq!(r.pencil.ambient_dim(), 4);
    // Complement is (e₁, e₃): the restrictions are 3s² and 3t².
    assert_eq!(r.restricted[0], BinaryForm::from_ints(Q, &[3, 0, 0]));
    assert_eq!(r.restricted[1], BinaryForm::from_ints(Q, &[0, 0, 3]));
}

#[test]
fn cone_vertex_line() {
    let x = cubic_cone(Q);
    let e = cubic_cone_line(Q);
    let r = analyze_line(&x, &e).unwrap();
    assert_eq!(r.tangent_dim, 2);
    assert_eq!(r.pi, Subspace::span(Q, 2, vec![vector_from_ints(Q, &[0, 1])]).unwrap());
    assert_eq!(r.m, 1);
    assert!(r.pencil.is_zero());
    assert_eq!(r.kernel, r.dual_tensor_pi());
    let x1 = vector_from_ints(Q, &[1, -1, 0, 0]);
    let x2 = vector_from_ints(Q, &[0, 0, 0, 1]);
    let c1 = tangent_cone_lines(&x, &e, &x1).unwrap();
    let c2 = tangent_cone_lines(&x, &e, &x2).unwrap();
    assert_eq!((c1.dim(), c2.dim()), (1, 1));
    assert_ne!(c1, c2);
    assert!(r.kernel.contains_subspace(&c1).unwrap());
}

#[test]
fn errors() {
    let x = quadric(Q);
    let off = LineFrame::line(unit_vector(Q, 4, 0), unit_vector(Q, 4, 3)).unwrap();
    assert!(matches!(sigma(&x, &off), Err(Error::PlaneNotContained)));
    assert!(matches!(analyze_line(&x, &off), Err(Error::PlaneNotContained)));
    let e = quadric_line(Q);
    let bad = vector_from_ints(Q, &[0, 0, 1, 0]);
    assert!(matches!(tangent_cone_lines(&x, &e, &bad), Err(Error::PointNotOnLine)));
    assert!(tangent_cone_lines(&x, &e, &vector_from_ints(Q, &[0, 0, 0, 0])).is_err());
    assert!(matches!(
        LineFrame::line(unit_vector(Q, 4, 0), vector_from_ints(Q, &[2, 0, 0, 0])),
        Err(Error::DependentBasis)
    ));
}

#[test]
fn complement_shift_by_plane_vectors() {
    for (x, e) in [(quadric(Q), quadric_line(Q)), (cubic_cone(Q), cubic_cone_line(Q)), (fermat(Q, 3, 3).unwrap(), fermat_cubic_line(Q))] {
        let shifted: Vec<Vector> = e.complement().iter().map(|w| add_vectors(w, e.e1())).collect();
        let e2 = LineFrame::with_complement(e.plane().to_vec(), shifted).unwrap();
        assert_eq!(sigma(&x, &e).unwrap(), sigma(&x, &e2).unwrap());
        let mixed: Vec<Vector> = e
            .complement()
            .iter()
            .map(|w| add_vectors(w, &add_vectors(&scale_vector(&Q.from_i64(-3), e.e1()), &scale_vector(&Q.from_i64(5), e.e2()))))
            .collect();
        let e3 = LineFrame::with_complement(e.plane().to_vec(), mixed).unwrap();
        assert_eq!(sigma(&x, &e).unwrap(), sigma(&x, &e3).unwrap());
    }
}

#[test]
fn sigma_matches_substitution_oracle() {
    for (x, e) in [(quadric(Q), quadric_line(Q)), (cubic_cone(Q), cubic_cone_line(Q)), (fermat(Q, 3, 3).unwrap(), fermat_cubic_line(Q))] {
        assert_eq!(sigma(&x, &e).unwrap(), sigma_by_substitution(&x, &e));
    }
}

#[test]
fn planes_in_reducible_quadrics() {
    // x₀x₁ ⊃ {x₀ = 0}: σ is injective. x₀² ⊃ {x₀ = 0}: σ vanishes.
    let plane = vec![unit_vector(Q, 4, 1), unit_vector(Q, 4, 2), unit_vector(Q, 4, 3)];
    let frame = PlaneFrame::new(plane).unwrap();
    assert_eq!(frame.k(), 2);
    let x = Hypersurface::new(MultiForm::from_int_terms(Q, &[(1, &[1, 1, 0, 0])]).unwrap()).unwrap();
    assert_eq!(tangent_space(&x, &frame).unwrap().dim(), 0);
    let y = Hypersurface::new(MultiForm::from_int_terms(Q, &[(1, &[2, 0, 0, 0])]).unwrap()).unwrap();
    assert_eq!(tangent_space(&y, &frame).unwrap().dim(), 3);
    assert_eq!(sigma(&x, &frame).unwrap(), sigma_by_substitution(&x, &frame));
    assert!(analyze_line(&x, &frame).is_err());
}

#[test]
fn frame_coordinates_round_trip() {
    let e = cubic_cone_line(Q);
    let v = vector_from_ints(Q, &[3, 1, -2, 7]);
    let c = e.coordinates(&v).unwrap();
    let back = add_vectors(&e.point_on_plane(&c[..2]), &e.lift(&c[2..]));
    assert_eq!(back, v);
    let duals = e.dual_basis();
    assert!(crate::linalg::dot(&duals[0], e.e1(), Q).is_one());
    assert!(crate::linalg::dot(&duals[0], e.e2(), Q).is_zero());
}

fn random_invertible(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    let p = field.characteristic();
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| field.from_u64(rng.gen_range(0..p))).collect()).collect();
        let m = Matrix::new(field, n, rows).unwrap();
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// New basis of `E` and new complement representatives, mixed with random elements of `E`.
fn random_reframe(rng: &mut ChaCha8Rng, frame: &LineFrame) -> LineFrame {
    let field = frame.field();
    let p = field.characteristic();
    let g = random_invertible(rng, field, 2);
    let plane: Vec<Vector> = g.rows().iter().map(|r| frame.point_on_plane(r)).collect();
    let q = frame.complement().len();
    let h = random_invertible(rng, field, q);
    let complement = h
        .rows()
        .iter()
        .map(|r| {
            let e = [field.from_u64(rng.gen_range(0..p)), field.from_u64(rng.gen_range(0..p))];
            add_vectors(&frame.lift(r), &frame.point_on_plane(&e))
        })
        .collect();
    LineFrame::with_complement(plane, complement).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_instances_satisfy_kernel_bounds(n in 3usize..=5, d in 2usize..=5, big in any::<bool>(), seed in any::<u64>()) {
        let p = if big { 13 } else { 11 };
        let (x, e) = random_with_line(n, d, p, seed).unwrap();
        let r = analyze_line(&x, &e).unwrap();
        prop_assert!(r.tangent_dim + d + 1 >= 2 * (n - 1));
        prop_assert!(r.kernel.contains_subspace(&r.dual_tensor_pi()).unwrap());
        prop_assert_eq!(r.m, n - 1 - r.pi.dim());
        prop_assert_eq!(r.pencil.dim(), r.tangent_dim - 2 * r.pi.dim());
        prop_assert_eq!(&r.sigma_matrix, &sigma_by_substitution(&x, &e));
    }

    #[test]
    fn kernel_vectors_deform_to_first_order(n in 3usize..=4, d in 2usize..=4, seed in any::<u64>()) {
        let (x, e) = random_with_line(n, d, 11, seed).unwrap();
        let r = analyze_line(&x, &e).unwrap();
        let q = n - 1;
        prop_assert!(order_zero(&x, &e));
        for eta in r.kernel.basis() {
            let defect = first_order_defect(&x, &e, &e.lift(&eta[..q]), &e.lift(&eta[q..]));
            prop_assert!(defect.is_zero());
        }
        // A vector outside the kernel must fail the first-order test.
        let f = x.field();
        for i in 0..2 * q {
            let v = unit_vector(f, 2 * q, i);
            if !r.kernel.contains(&v).unwrap() {
                prop_assert!(!first_order_defect(&x, &e, &e.lift(&v[..q]), &e.lift(&v[q..])).is_zero());
            }
        }
    }

    #[test]
    fn invariants_survive_reframing(n in 3usize..=5, d in 2usize..=4, seed in any::<u64>()) {
        let (x, e) = random_with_line(n, d, 13, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let r = analyze_line(&x, &e).unwrap();
        let e2 = random_reframe(&mut rng, &e);
        let r2 = analyze_line(&x, &e2).unwrap();
        prop_assert_eq!(r.tangent_dim, r2.tangent_dim);
        prop_assert_eq!(r.pi.dim(), r2.pi.dim());
        prop_assert_eq!(r.pencil.dim(), r2.pencil.dim());
    }
}
