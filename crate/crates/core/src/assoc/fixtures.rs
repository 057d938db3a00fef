//! Small algebras used throughout the test suites and the CLI fixtures.

use crate::exact::{Field, FieldSpec, Rational, Scalar};
use crate::superlin::Parity;

use super::Algebra;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `k[X]/⟨X²⟩` with basis `1, X`.
pub fn truncated_polynomial<F: Field>() -> Algebra<F> {
    Algebra::new(
        F::one().field_spec(),
        names(&["1", "X"]),
        vec![(0, 0, 0, F::one()), (0, 1, 1, F::one()), (1, 0, 1, F::one())],
        vec![F::one(), F::zero()],
        None,
    )
    .expect("well-formed")
}

/// `k^n` with idempotent basis `e_1, …, e_n`.
pub fn split_product<F: Field>(n: usize) -> Algebra<F> {
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::new(
        F::one().field_spec(),
        names,
        (0..n).map(|i| (i, i, i, F::one())),
        vec![F::one(); n],
        None,
    )
    .expect("well-formed")
}

/// `M_n(k)` with matrix units `E_ij` in row-major order.
pub fn matrix_algebra<F: Field>(n: usize) -> Algebra<F> {
    let names = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, F::one()));
            }
        }
    }
    let unit = (0..n * n).map(|k| if k / n == k % n { F::one() } else { F::zero() }).collect();
    Algebra::new(F::one().field_spec(), names, entries, unit, None).expect("well-formed")
}

/// Upper triangular 2×2 matrices, basis `E11, E12, E22`.
pub fn upper_triangular<F: Field>() -> Algebra<F> {
    let (e11, e12, e22) = (0, 1, 2);
    Algebra::new(
        F::one().field_spec(),
        names(&["E11", "E12", "E22"]),
        vec![
            (e11, e11, e11, F::one()),
            (e11, e12, e12, F::one()),
            (e12, e22, e12, F::one()),
            (e22, e22, e22, F::one()),
        ],
        vec![F::one(), F::zero(), F::one()],
        None,
    )
    .expect("well-formed")
}

/// Subsets of `{0, …, n−1}` as bitmasks, ordered by size and then lexicographically.
pub fn exterior_basis(n: usize) -> Vec<u32> {
    let mut subsets: Vec<u32> = (0..1u32 << n).collect();
    subsets.sort_by_key(|&s| {
        let members: Vec<u32> = (0..n as u32).filter(|i| s & (1 << i) != 0).collect();
        (members.len(), members)
    });
    subsets
}

/// Sign of `e_S e_T` for disjoint `S`, `T`: `(−1)^{#{(s,t) : s > t}}`.
pub fn exterior_sign(s: u32, t: u32) -> i64 {
    let mut inversions = 0;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (s >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn subset_name(s: u32, n: usize) -> String {
    if s == 0 {
        return "1".into();
    }
    (0..n)
        .filter(|i| s & (1 << i) != 0)
        .map(|i| format!("a{}", i + 1))
        .collect::<Vec<_>>()
        .join("")
}

/// The exterior (Grassmann) algebra on `n` generators; `graded` attaches `|S| mod 2`.
pub fn exterior_algebra<F: Field>(n: usize, field: FieldSpec, graded: bool) -> Algebra<F> {
    let basis = exterior_basis(n);
    let mut position = vec![0usize; 1 << n];
    for (k, &s) in basis.iter().enumerate() {
        position[s as usize] = k;
    }
    let names = basis.iter().map(|&s| subset_name(s, n)).collect();
    let parity = graded.then(|| basis.iter().map(|s| Parity::from_bit(s.count_ones() as u8)).collect());
    let mut unit = vec![F::zero(); basis.len()];
    unit[0] = F::one();
    let gens = (1..=n).collect();
    Algebra::from_fn(field, names, unit, parity, |i, j| {
        let (s, t) = (basis[i], basis[j]);
        if s & t != 0 {
            return vec![];
        }
        vec![(position[(s | t) as usize], F::from_i64(exterior_sign(s, t)))]
    })
    .expect("well-formed")
    .with_generators(gens)
}

/// Grassmann algebra over ℚ without grading.
pub fn grassmann(n: usize) -> Algebra<Rational> {
    exterior_algebra(n, FieldSpec::Rational, false)
}

/// `ℚ(i)` viewed as a two-dimensional ℚ-algebra; its quotient is not split.
pub fn gaussian_field_over_q() -> Algebra<Rational> {
    Algebra::new(
        FieldSpec::Rational,
        names(&["1", "j"]),
        vec![
            (0, 0, 0, Rational::from_i64(1)),
            (0, 1, 1, Rational::from_i64(1)),
            (1, 0, 1, Rational::from_i64(1)),
            (1, 1, 0, Rational::from_i64(-1)),
        ],
        vec![Rational::from_i64(1), Rational::from_i64(0)],
        None,
    )
    .expect("well-formed")
}

/// The group algebra `𝔽_p[ℤ/p]` with basis `g^0, …, g^{p−1}`.
pub fn group_algebra_cyclic_mod_p(p: u64) -> Algebra<Scalar> {
    let n = p as usize;
    let one = Scalar::Mod { value: 1, p };
    let zero = Scalar::Mod { value: 0, p };
    let names = (0..n).map(|k| format!("g{k}")).collect();
    let mut unit = vec![zero; n];
    unit[0] = one.clone();
    Algebra::new(
        FieldSpec::PrimeField(p),
        names,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n))).map(|(i, j, k)| (i, j, k, one.clone())),
        unit,
        None,
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_order_and_signs() {
        assert_eq!(exterior_basis(2), vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(exterior_basis(3)[4..], [0b011, 0b101, 0b110, 0b111]);
        assert_eq!(exterior_sign(0b01, 0b10), 1);
        assert_eq!(exterior_sign(0b10, 0b01), -1);
    }

    #[test]
    fn fixtures_validate() {
        assert!(truncated_polynomial::<Rational>().validate().is_valid());
        assert!(split_product::<Rational>(3).validate().is_valid());
        assert!(matrix_algebra::<Rational>(3).validate().is_valid());
        assert!(upper_triangular::<Rational>().validate().is_valid());
        assert!(exterior_algebra::<Rational>(3, FieldSpec::Rational, true).validate().is_valid());
        assert!(gaussian_field_over_q().validate().is_valid());
        assert!(group_algebra_cyclic_mod_p(5).validate().is_valid());
    }

    #[test]
    fn exterior_products() {
        let a = grassmann(2);
        let a1 = a.basis_vector(1);
        let a2 = a.basis_vector(2);
        let top = a.basis_vector(3);
        assert_eq!(a.mul(&a1, &a2), top);
        let neg: Vec<Rational> = top.iter().map(|x| -x.clone()).collect();
        assert_eq!(a.mul(&a2, &a1), neg);
    }
}
