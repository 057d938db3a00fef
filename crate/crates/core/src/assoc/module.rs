use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{combine, Field, FieldSpec, Matrix, RowSpace, SpanCoords};
use crate::superlin::Parity;

use super::algebra::densify;
use super::Algebra;

/// A finite-dimensional left module, one action matrix per algebra basis element.
///
/// Right modules over `A` are left modules over `A.opposite()`.
#[derive(Clone, Debug)]
pub struct AlgModule<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    dim: usize,
    pub action: Vec<Matrix<F>>,
    pub parity: Option<Vec<Parity>>,
}

impl<F: Field> AlgModule<F> {
    pub fn new(
        algebra: Arc<Algebra<F>>,
        dim: usize,
        action: Vec<Matrix<F>>,
        parity: Option<Vec<Parity>>,
    ) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        if parity.as_ref().is_some_and(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch("module parity list length".into()));
        }
        Ok(AlgModule {
            algebra,
            dim,
            action,
            parity,
        })
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        let dim = algebra.dim();
        let parity = algebra.parity.clone();
        AlgModule {
            algebra,
            dim,
            action,
            parity,
        }
    }

    /// `A` as a right module over itself, i.e. a left `A^op`-module.
    pub fn right_regular(algebra: &Algebra<F>) -> Self {
        let op = Arc::new(algebra.opposite());
        let action = (0..algebra.dim())
            .map(|i| algebra.right_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        AlgModule {
            dim: algebra.dim(),
            parity: algebra.parity.clone(),
            algebra: op,
            action,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_graded(&self) -> bool {
        self.parity.is_some()
    }

    pub fn parity_of(&self, i: usize) -> Parity {
        self.parity.as_ref().map_or(Parity::Even, |p| p[i])
    }

    /// Graded dimensions `(even, odd)`; ungraded modules count as even.
    pub fn graded_dims(&self) -> (usize, usize) {
        let odd = (0..self.dim).filter(|&i| self.parity_of(i) == Parity::Odd).count();
        (self.dim - odd, odd)
    }

    /// Matrix of the element with coordinates `a`.
    pub fn act(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    /// Checks unitality and multiplicativity of the action.
    pub fn verify(&self) -> Result<()> {
        if self.act(&self.algebra.unit) != Matrix::identity(self.dim) {
            return Err(Error::Invalid("the unit does not act as the identity".into()));
        }
        let d = self.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = &self.action[i] * &self.action[j];
                let rhs = self.act(&densify(self.algebra.basis_product(i, j), d));
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "action is not multiplicative on ({}, {})",
                        self.algebra.basis_names[i], self.algebra.basis_names[j]
                    )));
                }
            }
        }
        if let Some(p) = &self.parity {
            for (i, m) in self.action.iter().enumerate() {
                let pi = self.algebra.parity_of(i);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        if !m.get(r, c).is_zero() && p[r] != p[c].add(pi) {
                            return Err(Error::Invalid("action does not respect the grading".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Indices of the algebra elements whose action determines module maps.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.algebra
            .generators
            .clone()
            .unwrap_or_else(|| (0..self.algebra.dim()).collect())
    }

    /// The submodule on an invariant subspace, with the given (independent) basis.
    pub fn restrict(&self, basis: &[Vec<F>], parity: Option<Vec<Parity>>) -> Result<Self> {
        let coords = SpanCoords::new(basis)
            .ok_or_else(|| Error::Invalid("submodule basis is not linearly independent".into()))?;
        let s = basis.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut cols = Vec::with_capacity(s);
            for v in basis {
                let image = m.mul_vec(v);
                let c = coords
                    .coords_checked(&image)
                    .ok_or_else(|| Error::Invalid("subspace is not invariant".into()))?;
                cols.push(c);
            }
            action.push(Matrix::from_columns(&cols, s)?);
        }
        Ok(AlgModule {
            algebra: self.algebra.clone(),
            dim: s,
            action,
            parity,
        })
    }

    /// `self / sub` for an invariant subspace, on a complement of standard basis vectors.
    pub fn quotient(&self, sub: &[Vec<F>]) -> Result<Self> {
        let n = self.dim;
        let mut span = RowSpace::from_vectors(n, sub.iter().cloned());
        let mut complement = Vec::new();
        for i in 0..n {
            if span.insert(crate::exact::unit_vector(n, i)) {
                complement.push(i);
            }
        }
        let mut full: Vec<Vec<F>> = sub.to_vec();
        full.extend(complement.iter().map(|&i| crate::exact::unit_vector(n, i)));
        let coords = SpanCoords::new(&full)
            .ok_or_else(|| Error::Invalid("submodule basis is not linearly independent".into()))?;
        let s = sub.len();
        let q = complement.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            for v in sub {
                let c = coords.coords(&m.mul_vec(v));
                if c[s..].iter().any(|x| !x.is_zero()) {
                    return Err(Error::Invalid("subspace is not invariant".into()));
                }
            }
            let cols: Vec<Vec<F>> = complement
                .iter()
                .map(|&i| coords.coords(&m.column(i))[s..].to_vec())
                .collect();
            action.push(Matrix::from_columns(&cols, q)?);
        }
        let parity = self
            .parity
            .as_ref()
            .map(|p| complement.iter().map(|&i| p[i]).collect());
        Ok(AlgModule {
            algebra: self.algebra.clone(),
            dim: q,
            action,
            parity,
        })
    }

    /// Direct sum, with the left summand's basis first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Matrix::block_diag(&[a, b]))
            .collect();
        let parity = match (&self.parity, &other.parity) {
            (None, None) => None,
            _ => Some(
                (0..self.dim)
                    .map(|i| self.parity_of(i))
                    .chain((0..other.dim).map(|i| other.parity_of(i)))
                    .collect(),
            ),
        };
        AlgModule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action,
            parity,
        }
    }

    /// `Π M`: same action, opposite parity on every basis vector.
    ///
    /// The Koszul-signed variant is isomorphic to this one via `v ↦ (−1)^{|v|} v`.
    pub fn parity_shift(&self) -> Self {
        let parity = Some((0..self.dim).map(|i| self.parity_of(i).add(Parity::Odd)).collect());
        AlgModule {
            parity,
            ..self.clone()
        }
    }

    /// Span of `{ρ(a)v}` over the given algebra elements and vectors.
    pub fn span_of_images(&self, elements: &[Matrix<F>], vectors: &[Vec<F>]) -> RowSpace<F> {
        let mut s = RowSpace::new(self.dim);
        for m in elements {
            for v in vectors {
                s.insert(m.mul_vec(v));
            }
        }
        s
    }
}

/// Intertwiners `m → n` (even ones if both modules are graded).
pub fn hom_basis<F: Field>(m: &AlgModule<F>, n: &AlgModule<F>) -> Result<Vec<Matrix<F>>> {
    if !Arc::ptr_eq(&m.algebra, &n.algebra) && m.algebra != n.algebra {
        return Err(Error::Invalid("modules over different algebras".into()));
    }
    let (rows, cols) = (n.dim(), m.dim());
    let graded = m.is_graded() && n.is_graded();
    // unknown f_{rc} allowed only on parity-preserving positions when graded
    let mut slot = vec![usize::MAX; rows * cols];
    let mut unknowns = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if !graded || n.parity_of(r) == m.parity_of(c) {
                slot[r * cols + c] = unknowns.len();
                unknowns.push((r, c));
            }
        }
    }
    let u = unknowns.len();
    if u == 0 {
        return Ok(Vec::new());
    }
    let mut eqs = RowSpace::new(u);
    for k in m.generator_indices() {
        let am = &m.action[k];
        let an = &n.action[k];
        // (f·am − an·f)_{r,c'} = Σ_c f_{rc} am_{cc'} − Σ_{r'} an_{rr'} f_{r'c'}
        for r in 0..rows {
            for c2 in 0..cols {
                let mut row = vec![F::zero(); u];
                let mut any = false;
                for c in 0..cols {
                    let s = slot[r * cols + c];
                    let x = am.get(c, c2);
                    if s != usize::MAX && !x.is_zero() {
                        row[s] = row[s].add_ref(x);
                        any = true;
                    }
                }
                for r2 in 0..rows {
                    let s = slot[r2 * cols + c2];
                    let x = an.get(r, r2);
                    if s != usize::MAX && !x.is_zero() {
                        row[s] = row[s].sub_ref(x);
                        any = true;
                    }
                }
                if any {
                    eqs.insert(row);
                }
            }
        }
    }
    Ok(eqs
        .null_space()
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(rows, cols);
            for (s, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    let (r, c) = unknowns[s];
                    f.set(r, c, x);
                }
            }
            f
        })
        .collect())
}

/// The algebra `End_A(m)` on a hom basis, together with that basis.
pub fn endomorphism_algebra<F: Field>(m: &AlgModule<F>) -> Result<(Algebra<F>, Vec<Matrix<F>>)> {
    let basis = hom_basis(m, m)?;
    let alg = matrix_span_algebra(m.algebra.field, &basis)?;
    Ok((alg, basis))
}

/// The algebra structure on a multiplicatively closed span of square matrices containing 1.
pub fn matrix_span_algebra<F: Field>(field: FieldSpec, basis: &[Matrix<F>]) -> Result<Algebra<F>> {
    let dim = basis.first().map_or(0, |b| b.rows());
    let flat: Vec<Vec<F>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let coords = SpanCoords::new(&flat).ok_or_else(|| Error::Invalid("dependent matrix basis".into()))?;
    let mut entries = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let xy = x * y;
            let c = coords
                .coords_checked(xy.entries())
                .ok_or_else(|| Error::Invalid("span is not closed under composition".into()))?;
            for (k, c) in c.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let unit = coords
        .coords_checked(Matrix::identity(dim).entries())
        .ok_or_else(|| Error::Invalid("identity is not in the span".into()))?;
    let names = (0..basis.len()).map(|k| format!("h{k}")).collect();
    Algebra::new(field, names, entries, unit, None)
}

/// Evaluates an element of `End_A(m)` given by coordinates on its hom basis.
pub fn endo_from_coords<F: Field>(basis: &[Matrix<F>], coords: &[F], dim: usize) -> Matrix<F> {
    let flat: Vec<Vec<F>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    Matrix::from_vec(dim, dim, combine(coords, &flat, dim * dim)).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::fixtures;
    use crate::exact::Rational;

    #[test]
    fn regular_modules_verify() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        AlgModule::regular(a.clone()).verify().unwrap();
        AlgModule::right_regular(&a).verify().unwrap();
        let g = Arc::new(fixtures::exterior_algebra::<Rational>(2, crate::FieldSpec::Rational, true));
        AlgModule::regular(g).verify().unwrap();
    }

    #[test]
    fn hom_of_truncated_polynomial_regular() {
        let a = Arc::new(fixtures::truncated_polynomial::<Rational>());
        let m = AlgModule::regular(a);
        assert_eq!(hom_basis(&m, &m).unwrap().len(), 2);
    }

    #[test]
    fn hom_between_triangular_projectives() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        let reg = AlgModule::regular(a.clone());
        // P1 = A E11 = span{E11}, P2 = A E22 = span{E12, E22}
        let p1 = reg.restrict(&[a.basis_vector(0)], None).unwrap();
        let p2 = reg.restrict(&[a.basis_vector(1), a.basis_vector(2)], None).unwrap();
        assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 1);
        assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 0);
    }

    #[test]
    fn simple_module_has_scalar_endomorphisms() {
        let a = Arc::new(fixtures::matrix_algebra::<Rational>(2));
        let reg = AlgModule::regular(a.clone());
        // first column E11, E21 is the natural module
        let nat = reg.restrict(&[a.basis_vector(0), a.basis_vector(2)], None).unwrap();
        nat.verify().unwrap();
        assert_eq!(hom_basis(&nat, &nat).unwrap().len(), 1);
    }

    #[test]
    fn quotient_of_truncated_polynomial_is_trivial() {
        let a = Arc::new(fixtures::truncated_polynomial::<Rational>());
        let reg = AlgModule::regular(a.clone());
        let top = reg.quotient(&[a.basis_vector(1)]).unwrap();
        top.verify().unwrap();
        assert_eq!(top.dim(), 1);
        assert!(top.action[1].is_zero());
        assert!(reg.quotient(&[a.basis_vector(0)]).is_err());
    }

    #[test]
    fn restrict_rejects_non_invariant() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        let reg = AlgModule::regular(a.clone());
        assert!(reg.restrict(&[a.basis_vector(2)], None).is_err());
    }

    #[test]
    fn endomorphism_algebra_of_regular_is_opposite() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        let (e, basis) = endomorphism_algebra(&AlgModule::regular(a)).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(e.validate().is_valid());
    }
}
