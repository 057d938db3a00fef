#![allow(dead_code)]

use fftc::assoc::Algebra;
use fftc::{Field, Matrix, Rational};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// A unimodular integer matrix `L·U` with unit diagonals, from `n(n−1)` entries.
pub fn unimodular(n: usize, entries: &[i64]) -> Matrix<Rational> {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, q(*it.next().unwrap_or(&0)));
            u.set(j, i, q(*it.next().unwrap_or(&0)));
        }
    }
    l.try_mul(&u).expect("square")
}

pub fn small_entries() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 1..32)
}

/// The same algebra in the basis given by the columns of `p`.
pub fn change_basis(a: &Algebra<Rational>, p: &Matrix<Rational>) -> Algebra<Rational> {
    let pinv = p.inverse().expect("invertible");
    let n = a.dim();
    let cols: Vec<Vec<Rational>> = (0..n).map(|i| p.column(i)).collect();
    let unit = pinv.mul_vec(&a.unit);
    let parity = a.parity.clone();
    Algebra::from_fn(a.field, a.basis_names.clone(), unit, parity, |i, j| {
        let prod = pinv.mul_vec(&a.mul(&cols[i], &cols[j]));
        prod.into_iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect()
    })
    .expect("well-formed")
}

pub fn sorted(mut m: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for r in &mut m {
        r.sort();
    }
    m.sort();
    m
}
