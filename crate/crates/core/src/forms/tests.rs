// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;

use super::*;
use crate::linalg::{vector_from_ints, Field, Scalar};

fn q() -> Field {
    Field::Rationals
}

fn quadric() -> MultiForm {
    MultiForm::from_int_terms(q(), &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap()
}

fn fermat_cubic(field: Field) -> MultiForm {
    MultiForm::from_int_terms(field, &[(1, &[3, 0, 0, 0]), (1, &[0, 3, 0, 0]), (1, &[0, 0, 3, 0]), (1, &[0, 0, 0, 3])]).unwrap()
}

#[test]
fn contract_examples() {
    let d = contract(&vector_from_ints(q(), &[0, 0, 1, 0]), &quadric()).unwrap();
    assert_eq!(d, MultiForm::from_int_terms(q(), &[(-1, &[0, 1, 0, 0])]).unwrap());

    let cube = MultiForm::from_int_terms(q(), &[(1, &[3, 0])]).unwrap();
    let d = contract(&vector_from_ints(q(), &[1, 0]), &cube).unwrap();
    assert_eq!(d, MultiForm::from_int_terms(q(), &[(3, &[2, 0])]).unwrap());

    let sq = MultiForm::from_int_terms(q(), &[(1, &[0, 2])]).unwrap();
    assert!(contract(&vector_from_ints(q(), &[1, 0]), &sq).unwrap().is_zero());

    let c = MultiForm::constant(q(), 2, q().one());
    assert!(matches!(contract(&vector_from_ints(q(), &[1, 0]), &c), Err(crate::Error::ContractConstant)));
}

#[test]
fn repeated_contraction_gives_factorial_times_value() {
    let p = fermat_cubic(q());
    let v = vector_from_ints(q(), &[2, -1, 3, 1]);
    let mut f = p.clone();
    for _ in 0..3 {
        f = f.contract(&v).unwrap();
    }
    let value = f.coefficient(&[0, 0, 0, 0]);
    assert_eq!(value, q().from_i64(6) * p.evaluate(&v).unwrap());
}

#[test]
fn restriction_examples() {
    let e = |v: &[i64]| vector_from_ints(q(), v);
    let r = quadric().restrict_to_line(&e(&[1, 0, 0, 0]), &e(&[0, 1, 0, 0])).unwrap();
    assert!(r.is_zero());
    assert_eq!(r.degree(), 2);

    let r = fermat_cubic(q()).restrict_to_line(&e(&[1, -1, 0, 0]), &e(&[0, 0, 1, -1])).unwrap();
    assert!(r.is_zero());

    let x0sq = MultiForm::from_int_terms(q(), &[(1, &[2, 0, 0, 0])]).unwrap();
    let r = x0sq.restrict_to_line(&e(&[1, 0, 0, 0]), &e(&[0, 1, 0, 0])).unwrap();
    assert_eq!(r, BinaryForm::monomial(q(), 2, 0));

    assert!(matches!(
        restrict_to_plane(&x0sq, &[e(&[1, 0, 0, 0]), e(&[2, 0, 0, 0])]),
        Err(crate::Error::DependentBasis)
    ));
}

#[test]
fn plane_and_line_restrictions_agree() {
    let p = fermat_cubic(q());
    let (a, b) = (vector_from_ints(q(), &[1, 2, 0, -1]), vector_from_ints(q(), &[0, 1, 1, 3]));
    let line = p.restrict_to_line(&a, &b).unwrap();
    let plane = p.restrict_to_plane(&[a, b]).unwrap();
    assert_eq!(plane.coefficient_vector(&monomials(2, 3)), line.to_vector());
}

#[test]
fn multilinear_examples() {
    let xy = MultiForm::from_int_terms(q(), &[(1, &[1, 1])]).unwrap();
    let v = multilinear_eval(&xy, &[(vector_from_ints(q(), &[1, 0]), 1), (vector_from_ints(q(), &[0, 1]), 1)]).unwrap();
    assert_eq!(v, q().parse_scalar("1/2").unwrap());

    let xsq = MultiForm::from_int_terms(q(), &[(1, &[2, 0])]).unwrap();
    assert!(multilinear_eval(&xsq, &[(vector_from_ints(q(), &[1, 0]), 2)]).unwrap().is_one());

    let f7 = Field::prime(7).unwrap();
    let e0 = vector_from_ints(f7, &[1, 0, 0, 0]);
    assert!(multilinear_eval(&fermat_cubic(f7), &[(e0.clone(), 3)]).unwrap().is_one());
    let f2 = Field::prime(2).unwrap();
    let e0 = vector_from_ints(f2, &[1, 0, 0, 0]);
    assert!(matches!(
        multilinear_eval(&fermat_cubic(f2), &[(e0.clone(), 3)]),
        Err(crate::Error::CharacteristicTooSmall { .. })
    ));
    assert!(multilinear_eval(&xsq, &[(vector_from_ints(q(), &[1, 0]), 1)]).is_err());
}

#[test]
fn multilinear_on_diagonal_is_evaluation() {
    let p = fermat_cubic(q()).add(&MultiForm::from_int_terms(q(), &[(5, &[1, 1, 1, 0])]).unwrap()).unwrap();
    let v = vector_from_ints(q(), &[1, -2, 3, 4]);
    assert_eq!(multilinear_eval(&p, &[(v.clone(), 3)]).unwrap(), p.evaluate(&v).unwrap());
}

#[test]
fn text_format_round_trip() {
    let src = "# quadric\nfield Q\nvars 4\n1 1 0 0 1\n-1/2 0 1 1 0\n";
    let p = parse_form(src).unwrap();
    assert_eq!(p.coefficient(&[0, 1, 1, 0]), q().parse_scalar("-1/2").unwrap());
    assert_eq!(parse_form(&format_form(&p)).unwrap(), p);

    let f = parse_form("field Fp 7\nvars 2\n8 2 0\n").unwrap();
    assert!(f.coefficient(&[2, 0]).is_one());

    assert!(parse_form("field Q\nvars 2\n1 2 0\n1 1 0\n").is_err());
    assert!(parse_form("vars 2\n1 2 0\n").is_err());
    assert!(parse_form("field Q\nvars 2\n1 2\n").is_err());
}

fn f11() -> Field {
    Field::prime(11).unwrap()
}

fn random_form(nvars: usize, degree: usize) -> impl Strategy<Value = MultiForm> {
    let basis = monomials(nvars, degree);
    proptest::collection::vec(0i64..11, basis.len()).prop_map(move |cs| {
        MultiForm::from_terms(f11(), nvars, degree, basis.iter().cloned().zip(cs.iter().map(|&c| f11().from_i64(c)))).unwrap()
    })
}

fn random_vec(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(0i64..11, n).prop_map(|v| vector_from_ints(f11(), &v))
}

fn random_binary(max_deg: usize) -> impl Strategy<Value = BinaryForm> {
    (0..=max_deg).prop_flat_map(|d| {
        proptest::collection::vec(0i64..11, d + 1).prop_map(|c| BinaryForm::from_ints(f11(), &c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contractions_commute(p in random_form(4, 4), v in random_vec(4), w in random_vec(4)) {
        let vw = p.contract(&w).unwrap().contract(&v).unwrap();
        let wv = p.contract(&v).unwrap().contract(&w).unwrap();
        prop_assert_eq!(vw, wv);
    }

    #[test]
    fn contraction_is_linear(p in random_form(3, 3), v in random_vec(3), w in random_vec(3)) {
        let sum: Vec<Scalar> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
        let lhs = p.contract(&sum).unwrap();
        let rhs = p.contract(&v).unwrap().add(&p.contract(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_commutes_with_contraction_inside_the_line(
        p in random_form(4, 3), e1 in random_vec(4), e2 in random_vec(4), a in 0i64..11, b in 0i64..11,
    ) {
        let (a, b) = (f11().from_i64(a), f11().from_i64(b));
        let u: Vec<Scalar> = e1.iter().zip(&e2).map(|(x, y)| &a * x + &b * y).collect();
        let lhs = p.contract(&u).unwrap().substitute(&[e1.clone(), e2.clone()]).unwrap();
        let rhs = p.substitute(&[e1, e2]).unwrap().contract(&[a, b]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_is_a_ring_homomorphism(p in random_form(3, 2), r in random_form(3, 2), e1 in random_vec(3), e2 in random_vec(3)) {
        let lhs = p.mul(&r).unwrap().restrict_to_line(&e1, &e2).unwrap();
        let rhs = p.restrict_to_line(&e1, &e2).unwrap().mul(&r.restrict_to_line(&e1, &e2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_reconstructs(f in random_binary(5), g in random_binary(5), h in random_binary(3)) {
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let (fh, gh) = (f.mul(&h), g.mul(&h));
        let d = binary_gcd(&[fh.clone(), gh.clone()]).unwrap();
        for x in [&fh, &gh] {
            if !x.is_zero() {
                let quot = x.divide(&d).unwrap();
                prop_assert_eq!(quot.mul(&d), x.clone());
                prop_assert!(d.degree() <= x.degree());
            }
        }
        // h divides both, so it divides the gcd.
        prop_assert!(d.divide(&h).is_ok());
    }

    #[test]
    fn finite_field_roots_match_exhaustive_evaluation(f in random_binary(6)) {
        prop_assume!(!f.is_zero());
        let report = f.roots().unwrap();
        let field = f11();
        let mut expected = Vec::new();
        let mut points: Vec<[Scalar; 2]> = field.elements().unwrap().map(|u| [field.one(), u]).collect();
        points.push([field.zero(), field.one()]);
        for [s, t] in points {
            if f.eval(&s, &t).is_zero() {
                // multiplicity by repeated division
                let ell = BinaryForm::linear(t.clone(), -&s);
                let mut g = f.clone();
                let mut k = 0;
                while let Ok(q) = g.divide(&ell) {
                    g = q;
                    k += 1;
                }
                expected.push(([s, t], k));
            }
        }
        let got: Vec<([Scalar; 2], usize)> = report.roots.iter().map(|r| (r.point.clone(), r.multiplicity)).collect();
        prop_assert_eq!(got.len(), expected.len());
        for e in &expected {
            prop_assert!(got.contains(e));
        }
        prop_assert!(report.total_root_multiplicity() <= f.degree());
    }

    #[test]
    fn text_round_trip(p in random_form(3, 3)) {
        prop_assume!(!p.is_zero());
        prop_assert_eq!(parse_form(&format_form(&p)).unwrap(), p);
    }
}
