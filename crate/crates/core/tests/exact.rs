use fftc::exact::{kernel_basis, mat_rref, parse_as, parse_scalar, q, RowSpace};
use fftc::{Field, FieldSpec, GaussianRational, Matrix, Rational, Scalar};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |r, c| Rational::from_i64(entries[(r * cols + c) % entries.len()]))
}

fn shape_and_entries() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6, prop::collection::vec(-4i64..=4, 1..36))
}

#[test]
fn gaussian_unit_squares_to_minus_one() {
    let i = parse_as::<GaussianRational>("0+1/1*i").unwrap();
    assert_eq!(i.clone() * i, GaussianRational::from_i64(-1));
}

#[test]
fn parse_examples() {
    assert_eq!(parse_as::<Rational>("-6/4").unwrap(), q(-3, 2));
    assert_eq!(parse_as::<GaussianRational>("1/2-3/4*i").unwrap().render(), "1/2-3/4*i");
    assert_eq!(parse_scalar("1/2", FieldSpec::prime(5).unwrap()).unwrap(), Scalar::modp(3, 5));
    assert!(parse_as::<Rational>("1/0").is_err());
    assert!(parse_as::<Rational>("2*i").is_err());
    assert!(parse_as::<Rational>("1.5").is_err());
    assert!(FieldSpec::prime(6).is_err());
}

#[test]
fn large_entries_stay_exact() {
    // 2^{2N−1} entries at N = 40 overflow i64 products
    let big = parse_as::<Rational>("604462909807314587353088").unwrap();
    let m = Matrix::from_rows(vec![vec![big.clone(), big.clone()], vec![big.clone(), big.clone() + Rational::from_i64(1)]]).unwrap();
    assert_eq!(m.rank(), 2);
    let inv = m.inverse().unwrap();
    assert!(m.try_mul(&inv).unwrap().is_identity());
}

proptest! {
    #[test]
    fn rank_nullity((r, c, e) in shape_and_entries()) {
        let m = matrix(r, c, &e);
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), c);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn rref_preserves_row_space((r, c, e) in shape_and_entries()) {
        let m = matrix(r, c, &e);
        let rref = mat_rref(&m);
        let a = RowSpace::from_vectors(c, m.to_rows());
        let b = RowSpace::from_vectors(c, rref.matrix.to_rows());
        prop_assert!(a.same_space(&b));
        prop_assert_eq!(rref.rank, a.rank());
        prop_assert_eq!(mat_rref(&rref.matrix).matrix, rref.matrix);
    }

    #[test]
    fn reciprocal_product_is_one(n in -1000i64..1000, d in 1i64..1000) {
        prop_assume!(n != 0);
        prop_assert_eq!(q(n, d) * q(d, n), Rational::from_i64(1));
    }

    #[test]
    fn render_parse_round_trip(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let z = parse_as::<GaussianRational>(&format!("{a}/{b}{}{}/{d}*i", if c < 0 { "-" } else { "+" }, c.abs())).unwrap();
        prop_assert_eq!(parse_as::<GaussianRational>(&z.render()).unwrap(), z.clone());
        let w = q(a, b);
        prop_assert_eq!(parse_as::<Rational>(&w.render()).unwrap(), w);
    }

    #[test]
    fn inverse_is_two_sided((n, e) in (1usize..5, prop::collection::vec(-3i64..=3, 1..25))) {
        let m = matrix(n, n, &e);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.try_mul(&inv).unwrap().is_identity());
                prop_assert!(inv.try_mul(&m).unwrap().is_identity());
            }
            None => prop_assert!(m.rank() < n),
        }
    }
}
