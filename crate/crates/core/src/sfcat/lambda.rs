use std::sync::Arc;

use crate::assoc::fixtures::{exterior_algebra, exterior_basis, exterior_sign};
use crate::assoc::Algebra;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

/// The exterior Hopf superalgebra `Λ = Λ(h)` on `2N` odd primitive generators.
///
/// Basis: subsets of `{1, …, 2N}` ordered by size, then lexicographically.
#[derive(Clone, Debug)]
pub struct LambdaAlgebra<F: Field> {
    pub n: usize,
    /// The value `β^{-2}` of the cointegral on the top monomial, when fixed.
    pub beta_sq_inv: Option<F>,
    pub algebra: Arc<Algebra<F>>,
    subsets: Vec<u32>,
    position: Vec<usize>,
}

/// Largest `N` accepted; `dim Λ = 4^N`.
pub const MAX_N: usize = 6;

impl<F: Field> LambdaAlgebra<F> {
    /// `Λ` without a cointegral normalization (enough for fusion and Cartan data).
    pub fn structure(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Invalid(format!("N must lie in 1..={MAX_N}, got {n}")));
        }
        let field = F::one().field_spec();
        let algebra = Arc::new(exterior_algebra::<F>(2 * n, field, true));
        let subsets = exterior_basis(2 * n);
        let mut position = vec![0; subsets.len()];
        for (k, &s) in subsets.iter().enumerate() {
            position[s as usize] = k;
        }
        Ok(LambdaAlgebra {
            n,
            beta_sq_inv: None,
            algebra,
            subsets,
            position,
        })
    }

    pub fn generators(&self) -> usize {
        2 * self.n
    }

    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, i: usize) -> u32 {
        self.subsets[i]
    }

    pub fn index_of(&self, subset: u32) -> usize {
        self.position[subset as usize]
    }

    /// Basis index of the generator `a_j`, `j` counted from 1.
    pub fn generator_index(&self, j: usize) -> usize {
        self.index_of(1 << (j - 1))
    }

    pub fn top(&self) -> usize {
        self.dim() - 1
    }

    pub fn top_vector(&self) -> Vec<F> {
        self.algebra.basis_vector(self.top())
    }

    pub fn beta_sq_inv(&self) -> Result<&F> {
        self.beta_sq_inv
            .as_ref()
            .ok_or_else(|| Error::Invalid("no cointegral normalization fixed".into()))
    }

    pub fn counit(&self, a: &[F]) -> F {
        a[0].clone()
    }

    /// `λ(a) = β^{-2}·a_top`.
    pub fn cointegral(&self, a: &[F]) -> Result<F> {
        Ok(self.beta_sq_inv()?.mul_ref(&a[self.top()]))
    }

    /// `Δ(e_S) = Σ_{A ⊔ B = S} ± e_A ⊗ e_B` as `(index A, index B, sign)`.
    ///
    /// The sign is that of the shuffle moving the letters of `A` in front of those of `B`.
    pub fn coproduct(&self, i: usize) -> Vec<(usize, usize, i64)> {
        let s = self.subsets[i];
        let mut out = Vec::new();
        let mut a = s;
        loop {
            let b = s & !a;
            out.push((self.index_of(a), self.index_of(b), exterior_sign(a, b)));
            if a == 0 {
                break;
            }
            a = (a - 1) & s;
        }
        out.sort();
        out
    }

    /// Radical basis: every monomial of positive degree.
    pub fn radical(&self) -> Vec<Vec<F>> {
        (1..self.dim()).map(|i| self.algebra.basis_vector(i)).collect()
    }

    /// The full action `ρ(e_S) = ρ(a_{s_1})⋯ρ(a_{s_k})` from generator matrices.
    pub fn extend_action(&self, gens: &[Matrix<F>], dim: usize) -> Vec<Matrix<F>> {
        let mut action: Vec<Matrix<F>> = Vec::with_capacity(self.dim());
        for (k, &s) in self.subsets.iter().enumerate() {
            if s == 0 {
                action.push(Matrix::identity(dim));
                continue;
            }
            let first = s.trailing_zeros() as usize;
            let rest = self.index_of(s & (s - 1));
            debug_assert!(rest < k);
            action.push(&gens[first] * &action[rest]);
        }
        action
    }
}

/// `Λ(h)` with the cointegral `λ(e_top) = β^{-2}`.
///
/// Requires `(β^{-2})² = (−1)^N`, i.e. `β^{-2} ∈ {±1, ±i}` with the right square.
pub fn lambda_algebra<F: Field>(n: usize, beta_sq_inv: F) -> Result<LambdaAlgebra<F>> {
    let expected = if n.is_multiple_of(2) { F::one() } else { -F::one() };
    if beta_sq_inv.mul_ref(&beta_sq_inv) != expected {
        return Err(Error::Invalid(format!(
            "beta^-2 = {} does not square to (-1)^{n}",
            beta_sq_inv.render()
        )));
    }
    let mut lam = LambdaAlgebra::structure(n)?;
    lam.beta_sq_inv = Some(beta_sq_inv);
    Ok(lam)
}

/// `β^{-2}` for the symbolic choice `β = e^{−iNπ/4}`, i.e. `i^N`.
pub fn default_beta_sq_inv<F: Field>(n: usize) -> Result<F> {
    let i = F::imaginary_unit().ok_or_else(|| {
        Error::ImaginaryOutsideGaussian(format!("i^{n} needs the Gaussian rationals"))
    });
    match n % 4 {
        0 => Ok(F::one()),
        2 => Ok(-F::one()),
        1 => i,
        _ => i.map(|i| -i),
    }
}
