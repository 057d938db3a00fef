//! Dense matrices over an exact field.

use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Field::render).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row-reduces `rows` in place to reduced echelon form; returns pivot columns.
pub(crate) fn rref_in_place<F: Field>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let mut prow = std::mem::take(&mut rows[r]);
        let inv = prow[c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in prow[c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j].sub_mul_assign(&factor, &prow[j]);
            }
        }
        rows[r] = prow;
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Parses small integer literals; handy for fixtures and tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        let t = a.mul_ref(b);
                        let slot = &mut out.data[base + j];
                        *slot = slot.add_ref(&t);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| if x.is_zero() { F::zero() } else { x.mul_ref(s) })
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// A square matrix is nilpotent iff its `n`-th power vanishes.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    pub fn rref(&self) -> Rref<F> {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let matrix = if rows.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_rows(rows).expect("rectangular")
        };
        Rref {
            rank: pivots.len(),
            matrix,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for r in 0..self.rows {
            space.insert(self.row(r).to_vec());
        }
        space.rank()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        kernel_from_rref(&rows, &pivots, self.cols)
    }

    /// One solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} right-hand entries for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        debug_assert_eq!(self.mul_vec(&x), b);
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { F::one() } else { F::zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| rows[r][n + c].clone()))
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Kronecker product with plain (unsigned) block placement.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                return F::zero();
            }
            a.mul_ref(other.get(r % other.rows, c % other.cols))
        })
    }
}

pub(crate) fn kernel_from_rref<F: Field>(rows: &[Vec<F>], pivots: &[usize], cols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                let e = &rows[i][f];
                if !e.is_zero() {
                    v[p] = -e.clone();
                }
            }
            v
        })
        .collect()
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

/// Incrementally maintained row echelon basis of a subspace of `F^cols`.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    cols: usize,
    // (pivot column, row normalised to 1 at the pivot), sorted by pivot.
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors(cols: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut s = Self::new(cols);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.cols
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length");
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for j in *p..self.cols {
                if !row[j].is_zero() {
                    v[j].sub_mul_assign(&factor, &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v[p..].iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// The echelon basis (not necessarily reduced).
    pub fn basis(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// The unique reduced echelon basis; equal spaces give equal output.
    pub fn reduced_basis(&self) -> Vec<Vec<F>> {
        let mut rows = self.basis();
        rref_in_place(&mut rows, self.cols);
        rows
    }

    /// Vectors `x` with `row · x = 0` for every row of the space.
    pub fn null_space(&self) -> Vec<Vec<F>> {
        let mut rows = self.basis();
        let pivots = rref_in_place(&mut rows, self.cols);
        kernel_from_rref(&rows, &pivots, self.cols)
    }

    pub fn contains_space(&self, other: &RowSpace<F>) -> bool {
        other.rows.iter().all(|(_, r)| self.contains(r))
    }

    pub fn same_space(&self, other: &RowSpace<F>) -> bool {
        self.rank() == other.rank() && self.contains_space(other)
    }
}

/// Fast coordinates with respect to a linearly independent family.
///
/// Picks rows on which the family is invertible; `coords` is then a small
/// matrix-vector product. Membership is not checked by `coords`.
#[derive(Clone, Debug)]
pub struct SpanCoords<F: Field> {
    rows: Vec<usize>,
    inv: Matrix<F>,
    basis: Vec<Vec<F>>,
}

impl<F: Field> SpanCoords<F> {
    pub fn new(basis: &[Vec<F>]) -> Option<Self> {
        let len = basis.first().map_or(0, Vec::len);
        let mut t: Vec<Vec<F>> = basis.to_vec();
        let pivots = rref_in_place(&mut t, len);
        if pivots.len() < basis.len() {
            return None;
        }
        let minor = Matrix::from_fn(basis.len(), basis.len(), |r, c| basis[c][pivots[r]].clone());
        Some(SpanCoords {
            inv: minor.inverse()?,
            rows: pivots,
            basis: basis.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn coords(&self, v: &[F]) -> Vec<F> {
        let picked: Vec<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&picked)
    }

    /// Coordinates, or `None` when `v` is outside the span.
    pub fn coords_checked(&self, v: &[F]) -> Option<Vec<F>> {
        let c = self.coords(v);
        let back = combine(&c, &self.basis, v.len());
        (back == v).then_some(c)
    }
}

/// Coordinates of `v` in the basis formed by `basis`, if it lies in the span.
pub fn coordinates<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let m = Matrix::from_columns(basis, v.len()).ok()?;
    m.solve(v).ok().flatten()
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
}

/// `Σ coeffs[k] · vectors[k]`.
pub fn combine<F: Field>(coeffs: &[F], vectors: &[Vec<F>], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.add_ref(&c.mul_ref(x));
            }
        }
    }
    out
}

pub fn unit_vector<F: Field>(len: usize, at: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[at] = F::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{q, Rational};
    use proptest::prelude::*;

    type M = Matrix<Rational>;

    #[test]
    fn proportional_rows_have_rank_one() {
        let m = M::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn sf_cartan_n1_rank_and_kernel() {
        let m = M::from_i64_rows(&[&[2, 2, 0, 0], &[2, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(m.rref().rank, 3);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        let expected: Vec<Rational> = [1, -1, 0, 0].iter().map(|&x| q(x, 1)).collect();
        // the kernel is a line; compare up to scale
        let s = ker[0][0].clone();
        let scaled: Vec<Rational> = ker[0].iter().map(|x| x / &s).collect();
        assert_eq!(scaled, expected);
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = M::identity(3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(M::zeros(2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn solve_examples() {
        let a = M::from_i64_rows(&[&[2]]);
        assert_eq!(a.solve(&[q(1, 1)]).unwrap(), Some(vec![q(1, 2)]));
        let a = M::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&[q(1, 1), q(2, 1)]).unwrap(), None);
        let gram = M::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(gram.solve(&[q(1, 1), q(0, 1)]).unwrap(), Some(vec![q(0, 1), q(1, 1)]));
        assert!(matches!(gram.solve(&[q(1, 1)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn exact_reciprocals() {
        let a = q(7, 13);
        assert_eq!(a.clone() * a.inv().unwrap(), q(1, 1));
    }

    fn small_matrix() -> impl Strategy<Value = M> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                M::from_vec(r, c, v.into_iter().map(|x| q(x, 1)).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let r = m.rref();
            prop_assert_eq!(r.rank + m.kernel_basis().len(), m.cols());
            prop_assert_eq!(r.rank, m.rank());
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn rref_preserves_row_space(m in small_matrix()) {
            let r = m.rref();
            let original = RowSpace::from_vectors(m.cols(), m.to_rows());
            let reduced = RowSpace::from_vectors(m.cols(), r.matrix.to_rows());
            prop_assert!(original.same_space(&reduced));
            // uniqueness: reduced bases coincide
            prop_assert_eq!(original.reduced_basis(), reduced.reduced_basis());
        }

        #[test]
        fn inverse_round_trip(m in small_matrix()) {
            if let Some(inv) = m.inverse() {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
            } else {
                prop_assert!(!m.is_square() || m.rank() < m.rows());
            }
        }
    }
}
