//! Exact scalars and dense linear algebra over ℚ, ℚ(i) and 𝔽_p.

mod field;
mod matrix;
pub mod poly;
mod scalar;

pub use field::{frac, imaginary_unit, is_prime, q, Field, FieldSpec, GaussianRational, Rational};
pub use matrix::{combine, coordinates, dot, unit_vector, Matrix, RowSpace, Rref, SpanCoords};
pub use scalar::{from_scalar, parse_as, parse_scalar, Scalar};

/// Echelon form, rank and pivots of `m`.
pub fn mat_rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    m.rref()
}

pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}

/// One exact solution of `a·x = b`, `Ok(None)` if the system is inconsistent.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F]) -> crate::Result<Option<Vec<F>>> {
    a.solve(b)
}
