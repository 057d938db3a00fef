mod common;

use std::sync::Arc;

use common::q;
use fftc::assoc::{center, fixtures, Algebra};
use fftc::exact::{combine, RowSpace};
use fftc::frobform::{check_central_form, higman_basis, ideal_report_auto, tau, CentralForm};
use fftc::{FieldSpec, Rational};
use proptest::prelude::*;

/// `k[X,Y]/⟨X², Y²⟩` on the basis `1, X, Y, XY`.
fn dual_numbers_squared() -> Algebra<Rational> {
    let names = ["1", "X", "Y", "XY"].iter().map(|s| s.to_string()).collect();
    Algebra::from_fn(FieldSpec::Rational, names, vec![q(1), q(0), q(0), q(0)], None, |i, j| {
        if i & j == 0 {
            vec![(i | j, q(1))]
        } else {
            vec![]
        }
    })
    .unwrap()
}

fn group_ring_z2() -> Algebra<Rational> {
    fftc::grring::group_ring_z2::<Rational>().ring
}

/// Symmetric algebras with a nondegenerate central form.
fn symmetric() -> Vec<(&'static str, CentralForm<Rational>)> {
    let form = |a: Algebra<Rational>, c: &[i64]| CentralForm::new(Arc::new(a), c.iter().map(|&x| q(x)).collect()).unwrap();
    vec![
        ("kx2", form(fixtures::truncated_polynomial(), &[0, 1])),
        ("m2", form(fixtures::matrix_algebra(2), &[1, 0, 0, 1])),
        ("k3", form(fixtures::split_product(3), &[1, 2, 3])),
        ("z2", form(group_ring_z2(), &[1, 0])),
        ("kxy", form(dual_numbers_squared(), &[0, 0, 0, 1])),
    ]
}

fn space(d: usize, vs: &[Vec<Rational>]) -> RowSpace<Rational> {
    RowSpace::from_vectors(d, vs.to_vec())
}

#[test]
fn ideal_dimensions() {
    let got: Vec<(usize, usize, usize)> = symmetric()
        .iter()
        .map(|(_, f)| {
            let r = ideal_report_auto(f).unwrap();
            (r.dim_center, r.dim_reynolds, r.dim_higman)
        })
        .collect();
    assert_eq!(got, vec![(2, 1, 1), (1, 1, 1), (3, 3, 3), (2, 2, 2), (4, 1, 1)]);
}

#[test]
fn chain_and_character_identities() {
    for (name, f) in symmetric() {
        let check = check_central_form(&f);
        assert!(check.central && check.nondegenerate, "{name}");
        let r = ideal_report_auto(&f).unwrap();
        let d = f.algebra.dim();
        assert!(space(d, &r.center).contains_space(&space(d, &r.reynolds)), "{name}");
        assert!(space(d, &r.reynolds).contains_space(&space(d, &r.higman)), "{name}");
        assert!(r.chain_holds, "{name}");
        assert!(r.zeta_higman_is_projective_span, "{name}");
        assert!(r.zeta_reynolds_is_character_span, "{name}");
        assert!(r.higman_dim_equals_cartan_rank, "{name}");
        let c = &r.cartan;
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(c[i][j], c[j][i], "{name}: Cartan matrix is symmetric");
            }
        }
        assert_eq!(r.semisimple, r.dim_higman == r.dim_center, "{name}");
    }
}

#[test]
fn dual_numbers_characters() {
    let f = &symmetric()[0].1;
    let r = ideal_report_auto(f).unwrap();
    let doubled: Vec<Rational> = r.simple_characters[0].iter().map(|x| x.clone() * q(2)).collect();
    assert_eq!(r.projective_characters[0], doubled);
    assert!(r.projective_span_equals_character_span);
    assert_eq!(r.higman, vec![vec![q(0), q(1)]]);
    assert!(!r.semisimple);
}

fn vector(d: usize, xs: &[i64]) -> Vec<Rational> {
    (0..d).map(|i| q(xs[i % xs.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_is_central_linear(which in 0usize..5, zc in prop::collection::vec(-3i64..=3, 1..5), a in prop::collection::vec(-3i64..=3, 1..5)) {
        let (_, f) = symmetric().swap_remove(which);
        let alg = f.algebra.clone();
        let zb = center(&alg);
        let z = combine(&vector(zb.len(), &zc), &zb, alg.dim());
        let a = vector(alg.dim(), &a);
        prop_assert_eq!(tau(&f, &alg.mul(&z, &a)).unwrap(), alg.mul(&z, &tau(&f, &a).unwrap()));
    }

    #[test]
    fn higman_span_is_form_independent(which in 0usize..5, zc in prop::collection::vec(-3i64..=3, 1..5)) {
        let (_, f) = symmetric().swap_remove(which);
        let alg = f.algebra.clone();
        let zb = center(&alg);
        let z = combine(&vector(zb.len(), &zc), &zb, alg.dim());
        prop_assume!(alg.left_mult_matrix(&z).inverse().is_some());
        let g = f.twisted(&z);
        prop_assert!(check_central_form(&g).nondegenerate);
        let d = alg.dim();
        prop_assert!(space(d, &higman_basis(&f).unwrap()).same_space(&space(d, &higman_basis(&g).unwrap())));
    }
}
