use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Field, FieldSpec, Matrix, RowSpace};
use crate::superlin::Parity;

/// A finite-dimensional unital associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    pub field: FieldSpec,
    pub basis_names: Vec<String>,
    // products[i * dim + j] = sparse coordinates of b_i b_j
    products: Vec<Vec<(usize, F)>>,
    pub unit: Vec<F>,
    pub parity: Option<Vec<Parity>>,
    /// Basis indices generating the algebra; used to shorten intertwiner systems.
    pub generators: Option<Vec<usize>>,
}

/// Violated identities found by [`Algebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `b_i b_j ∋ c·b_k`.
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
        unit: Vec<F>,
        parity: Option<Vec<Parity>>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Invalid("an algebra needs at least one basis element".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit has {} coordinates, dim is {dim}", unit.len())));
        }
        if parity.as_ref().is_some_and(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch("parity list length".into()));
        }
        let mut dense: Vec<Vec<F>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invalid(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = vec![F::zero(); dim];
            }
            slot[k] = slot[k].add_ref(&c);
        }
        let products = dense.into_iter().map(|v| sparse(&v)).collect();
        Ok(Algebra {
            field,
            basis_names,
            products,
            unit,
            parity,
            generators: None,
        })
    }

    /// Builds an algebra from a closure returning the coordinates of `b_i b_j`.
    pub fn from_fn(
        field: FieldSpec,
        basis_names: Vec<String>,
        unit: Vec<F>,
        parity: Option<Vec<Parity>>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, F)>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in product(i, j) {
                    entries.push((i, j, k, c));
                }
            }
        }
        Self::new(field, basis_names, entries, unit, parity)
    }

    pub fn with_generators(mut self, generators: Vec<usize>) -> Self {
        self.generators = Some(generators);
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn is_graded(&self) -> bool {
        self.parity.is_some()
    }

    pub fn parity_of(&self, i: usize) -> Parity {
        self.parity.as_ref().map_or(Parity::Even, |p| p[i])
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// Sparse coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.products[i * self.dim() + j]
    }

    /// Iterates all nonzero structure constants as `(i, j, k, c)`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        let d = self.dim();
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / d, ij % d, *k, c)))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        crate::exact::unit_vector(self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = out[*k].add_ref(&xy.mul_ref(c));
                }
            }
        }
        out
    }

    /// `b_i · a`.
    pub fn mul_basis_left(&self, i: usize, a: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, y) in a.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = out[*k].add_ref(&y.mul_ref(c));
            }
        }
        out
    }

    /// `a · b_j`.
    pub fn mul_basis_right(&self, a: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] = out[*k].add_ref(&x.mul_ref(c));
            }
        }
        out
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul_basis_right(a, j)).collect();
        Matrix::from_columns(&cols, self.dim()).expect("square")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|i| self.mul_basis_left(i, a)).collect();
        Matrix::from_columns(&cols, self.dim()).expect("square")
    }

    pub fn pow(&self, a: &[F], e: u32) -> Vec<F> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Checks associativity, the unit law and (if graded) parity of products.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi {
                violations.push(format!("1·{} != {}", self.basis_names[i], self.basis_names[i]));
            }
            if self.mul(&bi, &self.unit) != bi {
                violations.push(format!("{}·1 != {}", self.basis_names[i], self.basis_names[i]));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let bij = densify(self.basis_product(i, j), d);
                for k in 0..d {
                    let left = self.mul_basis_right(&bij, k);
                    let bjk = densify(self.basis_product(j, k), d);
                    let right = self.mul_basis_left(i, &bjk);
                    if left != right {
                        violations.push(format!(
                            "({}·{})·{} != {}·({}·{})",
                            self.basis_names[i],
                            self.basis_names[j],
                            self.basis_names[k],
                            self.basis_names[i],
                            self.basis_names[j],
                            self.basis_names[k]
                        ));
                    }
                }
            }
        }
        if let Some(p) = &self.parity {
            for i in 0..d {
                for j in 0..d {
                    let want = p[i].add(p[j]);
                    if self.basis_product(i, j).iter().any(|(k, _)| p[*k] != want) {
                        violations.push(format!(
                            "{}·{} is not homogeneous of the expected parity",
                            self.basis_names[i], self.basis_names[j]
                        ));
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `A^op` with `b_i ∘ b_j = b_j b_i`.
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let mut products = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                products[i * d + j] = self.basis_product(j, i).to_vec();
            }
        }
        Algebra {
            field: self.field,
            basis_names: self.basis_names.clone(),
            products,
            unit: self.unit.clone(),
            parity: self.parity.clone(),
            generators: self.generators.clone(),
        }
    }

    /// `tr(L_{b_k})` for every basis element.
    pub fn regular_traces(&self) -> Vec<F> {
        (0..self.dim())
            .map(|k| {
                (0..self.dim()).fold(F::zero(), |acc, j| {
                    match self.basis_product(k, j).iter().find(|(i, _)| *i == j) {
                        Some((_, c)) => acc.add_ref(c),
                        None => acc,
                    }
                })
            })
            .collect()
    }

    /// Gram matrix `tr(L_{b_i} L_{b_j}) = tr(L_{b_i b_j})`.
    pub fn trace_form_gram(&self) -> Matrix<F> {
        let t = self.regular_traces();
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.basis_product(i, j)
                .iter()
                .fold(F::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&t[*k])))
        })
    }

    /// Span of `{x·y : x ∈ xs, y ∈ ys}`.
    pub fn product_span(&self, xs: &[Vec<F>], ys: &[Vec<F>]) -> RowSpace<F> {
        let mut s = RowSpace::new(self.dim());
        for x in xs {
            for y in ys {
                s.insert(self.mul(x, y));
            }
        }
        s
    }

    /// Span of `{x·b_k·y}` over all basis elements.
    pub fn sandwich_span(&self, x: &[F], y: &[F]) -> RowSpace<F> {
        let mut s = RowSpace::new(self.dim());
        for k in 0..self.dim() {
            let xb = self.mul_basis_right(x, k);
            s.insert(self.mul(&xb, y));
        }
        s
    }

    pub fn require_char0(&self, what: &str) -> Result<()> {
        match self.characteristic() {
            0 => Ok(()),
            p => Err(Error::PositiveCharacteristic {
                characteristic: p,
                what: what.into(),
            }),
        }
    }
}

fn sparse<F: Field>(v: &[F]) -> Vec<(usize, F)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

pub(crate) fn densify<F: Field>(s: &[(usize, F)], d: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d];
    for (k, c) in s {
        v[*k] = c.clone();
    }
    v
}

/// Basis of the center `{z : z b_i = b_i z ∀i}`.
pub fn center<F: Field>(a: &Algebra<F>) -> Vec<Vec<F>> {
    let d = a.dim();
    // row (i, k): coefficient of b_k in z b_i − b_i z, as a functional on z
    let mut eqs = RowSpace::new(d);
    for i in 0..d {
        let mut rows = vec![vec![F::zero(); d]; d];
        for j in 0..d {
            for (k, c) in a.basis_product(j, i) {
                rows[*k][j] = rows[*k][j].add_ref(c);
            }
            for (k, c) in a.basis_product(i, j) {
                rows[*k][j] = rows[*k][j].sub_ref(c);
            }
        }
        for r in rows {
            eqs.insert(r);
        }
    }
    eqs.null_space()
}

/// Jacobson radical over a field of characteristic zero (Dickson's criterion).
pub fn radical_char0<F: Field>(a: &Algebra<F>) -> Result<Vec<Vec<F>>> {
    a.require_char0("radical via the trace form")?;
    Ok(a.trace_form_gram().kernel_basis())
}

/// Whether `span` is a two-sided ideal all of whose elements are nilpotent as a whole.
pub fn is_nilpotent_ideal<F: Field>(a: &Algebra<F>, span: &[Vec<F>]) -> bool {
    let space = RowSpace::from_vectors(a.dim(), span.iter().cloned());
    for v in span {
        for k in 0..a.dim() {
            if !space.contains(&a.mul_basis_left(k, v)) || !space.contains(&a.mul_basis_right(v, k)) {
                return false;
            }
        }
    }
    // I^n = 0 for n = dim I + 1 suffices
    let mut power: Vec<Vec<F>> = span.to_vec();
    for _ in 0..=span.len() {
        if power.iter().all(|v| v.iter().all(Zero::is_zero)) {
            return true;
        }
        power = a.product_span(&power, span).basis();
    }
    power.is_empty()
}
