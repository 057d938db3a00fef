//! Super vector spaces and homogeneous linear maps.
//!
//! Bases are ordered even-first. The tensor product `X ⊗ Y` lists the even
//! pairs `(i, j)` lexicographically, then the odd pairs lexicographically.

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }
}

/// `(−1)^{a·b}` for parities `a`, `b`.
pub fn koszul_sign(a: Parity, b: Parity) -> i64 {
    if a == Parity::Odd && b == Parity::Odd {
        -1
    } else {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl SuperSpace {
    pub fn new(even_dim: usize, odd_dim: usize) -> Self {
        SuperSpace { even_dim, odd_dim }
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn sdim(&self) -> i64 {
        self.even_dim as i64 - self.odd_dim as i64
    }

    pub fn parity_of(&self, i: usize) -> Parity {
        if i < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity shift `Π`.
    pub fn shift(&self) -> Self {
        SuperSpace::new(self.odd_dim, self.even_dim)
    }

    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace::new(
            self.even_dim * other.even_dim + self.odd_dim * other.odd_dim,
            self.even_dim * other.odd_dim + self.odd_dim * other.even_dim,
        )
    }

    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace::new(self.even_dim + other.even_dim, self.odd_dim + other.odd_dim)
    }
}

/// Index bookkeeping for the basis of `X ⊗ Y`.
#[derive(Clone, Debug)]
pub struct TensorBasis {
    pub left: SuperSpace,
    pub right: SuperSpace,
    index: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl TensorBasis {
    pub fn new(left: SuperSpace, right: SuperSpace) -> Self {
        let (m, n) = (left.dim(), right.dim());
        let mut pairs = Vec::with_capacity(m * n);
        for target in [Parity::Even, Parity::Odd] {
            for i in 0..m {
                for j in 0..n {
                    if left.parity_of(i).add(right.parity_of(j)) == target {
                        pairs.push((i, j));
                    }
                }
            }
        }
        let mut index = vec![0; m * n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            index[i * n + j] = k;
        }
        TensorBasis {
            left,
            right,
            index,
            pairs,
        }
    }

    pub fn space(&self) -> SuperSpace {
        self.left.tensor(&self.right)
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        self.index[i * self.right.dim() + j]
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A homogeneous linear map between super spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMap<F: Field> {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub matrix: Matrix<F>,
    pub parity: Parity,
}

impl<F: Field> SuperMap<F> {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: Matrix<F>, parity: Parity) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {}|{} -> {}|{}",
                matrix.rows(),
                matrix.cols(),
                source.even_dim,
                source.odd_dim,
                target.even_dim,
                target.odd_dim
            )));
        }
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                let block = target.parity_of(r).add(source.parity_of(c));
                if block != parity && !matrix.get(r, c).is_zero() {
                    return Err(Error::Invalid(format!(
                        "entry ({r},{c}) breaks the {parity:?} block pattern"
                    )));
                }
            }
        }
        Ok(SuperMap {
            source,
            target,
            matrix,
            parity,
        })
    }

    pub fn identity(space: SuperSpace) -> Self {
        SuperMap {
            source: space,
            target: space,
            matrix: Matrix::identity(space.dim()),
            parity: Parity::Even,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperMap<F>) -> Result<Self> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch("composition of incompatible maps".into()));
        }
        Ok(SuperMap {
            source: other.source,
            target: self.target,
            matrix: self.matrix.try_mul(&other.matrix)?,
            parity: self.parity.add(other.parity),
        })
    }

    pub fn supertrace(&self) -> Result<F> {
        supertrace_matrix(&self.matrix, &self.source, self.parity, self.source == self.target)
    }
}

fn supertrace_matrix<F: Field>(m: &Matrix<F>, space: &SuperSpace, parity: Parity, endo: bool) -> Result<F> {
    if !endo || !m.is_square() || m.rows() != space.dim() {
        return Err(Error::DimensionMismatch("supertrace of a non-endomorphism".into()));
    }
    if parity == Parity::Odd {
        return Err(Error::Invalid("supertrace of an odd map".into()));
    }
    let mut acc = F::zero();
    for i in 0..space.dim() {
        let d = m.get(i, i);
        acc = match space.parity_of(i) {
            Parity::Even => acc.add_ref(d),
            Parity::Odd => acc.sub_ref(d),
        };
    }
    Ok(acc)
}

pub fn supertrace<F: Field>(f: &SuperMap<F>) -> Result<F> {
    f.supertrace()
}

/// Supertrace of a square matrix read in the block basis of `space`.
pub fn supertrace_of<F: Field>(m: &Matrix<F>, space: &SuperSpace) -> Result<F> {
    supertrace_matrix(m, space, Parity::Even, true)
}

/// `(f ⊗ g)(v ⊗ w) = (−1)^{|g||v|} f(v) ⊗ g(w)`.
pub fn tensor_map<F: Field>(f: &SuperMap<F>, g: &SuperMap<F>) -> SuperMap<F> {
    let src = TensorBasis::new(f.source, g.source);
    let tgt = TensorBasis::new(f.target, g.target);
    let mut m = Matrix::zeros(tgt.len(), src.len());
    for c in 0..src.len() {
        let (i, j) = src.pair(c);
        let negate = koszul_sign(g.parity, f.source.parity_of(i)) < 0;
        for k in 0..f.target.dim() {
            let a = f.matrix.get(k, i);
            if a.is_zero() {
                continue;
            }
            for l in 0..g.target.dim() {
                let b = g.matrix.get(l, j);
                if b.is_zero() {
                    continue;
                }
                let v = a.mul_ref(b);
                m.set(tgt.index(k, l), c, if negate { -v } else { v });
            }
        }
    }
    SuperMap {
        source: src.space(),
        target: tgt.space(),
        matrix: m,
        parity: f.parity.add(g.parity),
    }
}

/// The symmetry `X ⊗ Y → Y ⊗ X`, `v ⊗ w ↦ (−1)^{|v||w|} w ⊗ v`.
pub fn flip<F: Field>(x: SuperSpace, y: SuperSpace) -> SuperMap<F> {
    let src = TensorBasis::new(x, y);
    let tgt = TensorBasis::new(y, x);
    let mut m = Matrix::zeros(tgt.len(), src.len());
    for c in 0..src.len() {
        let (i, j) = src.pair(c);
        let s = koszul_sign(x.parity_of(i), y.parity_of(j));
        m.set(tgt.index(j, i), c, F::from_i64(s));
    }
    SuperMap {
        source: src.space(),
        target: tgt.space(),
        matrix: m,
        parity: Parity::Even,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Rational};
    use proptest::prelude::*;

    type Q = Rational;

    fn id(e: usize, o: usize) -> SuperMap<Q> {
        SuperMap::identity(SuperSpace::new(e, o))
    }

    #[test]
    fn supertrace_of_identities() {
        assert_eq!(id(3, 2).supertrace().unwrap(), q(1, 1));
        assert_eq!(id(2, 3).supertrace().unwrap(), q(-1, 1));
        assert_eq!(id(2, 2).supertrace().unwrap(), q(0, 1));
    }

    #[test]
    fn supertrace_rejects_odd_and_non_endo() {
        let s = SuperSpace::new(1, 1);
        let odd = SuperMap::new(s, s, Matrix::<Q>::from_i64_rows(&[&[0, 1], &[1, 0]]), Parity::Odd).unwrap();
        assert!(odd.supertrace().is_err());
        let t = SuperSpace::new(2, 1);
        let m = SuperMap::new(s, t, Matrix::<Q>::zeros(3, 2), Parity::Even).unwrap();
        assert!(m.supertrace().is_err());
    }

    #[test]
    fn block_pattern_is_enforced() {
        let s = SuperSpace::new(1, 1);
        let bad = SuperMap::new(s, s, Matrix::<Q>::from_i64_rows(&[&[0, 1], &[0, 0]]), Parity::Even);
        assert!(bad.is_err());
    }

    #[test]
    fn identity_tensor_identity() {
        let t = tensor_map(&id(2, 1), &id(1, 2));
        assert!(t.matrix.is_identity());
        assert_eq!(t.source, SuperSpace::new(4, 5));
    }

    #[test]
    fn koszul_sign_on_odd_input() {
        // g odd on C^{1|1}, v the odd basis vector of C^{0|1}
        let line = SuperSpace::new(0, 1);
        let s = SuperSpace::new(1, 1);
        let g = SuperMap::new(s, s, Matrix::<Q>::from_i64_rows(&[&[0, 1], &[1, 0]]), Parity::Odd).unwrap();
        let t = tensor_map(&id(0, 1), &g);
        let tb = TensorBasis::new(line, s);
        let col = tb.index(0, 0);
        let row = tb.index(0, 1);
        assert_eq!(t.matrix.get(row, col), &q(-1, 1));
        // with an even v the sign is +1
        let t = tensor_map(&id(1, 0), &g);
        let tb = TensorBasis::new(SuperSpace::new(1, 0), s);
        assert_eq!(t.matrix.get(tb.index(0, 1), tb.index(0, 0)), &q(1, 1));
    }

    #[test]
    fn flips() {
        let x = SuperSpace::new(0, 1);
        let f: SuperMap<Q> = flip(x, x);
        assert_eq!(f.matrix.get(0, 0), &q(-1, 1));
        let plain: SuperMap<Q> = flip(SuperSpace::new(1, 0), SuperSpace::new(2, 1));
        assert!(plain.matrix.entries().iter().all(|e| *e == q(0, 1) || *e == q(1, 1)));
    }

    fn space() -> impl Strategy<Value = SuperSpace> {
        (0usize..3, 0usize..3).prop_map(|(e, o)| SuperSpace::new(e, o))
    }

    fn even_endo(s: SuperSpace) -> impl Strategy<Value = SuperMap<Q>> {
        let n = s.dim();
        proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| {
            let m = Matrix::from_fn(n, n, |r, c| {
                if s.parity_of(r) == s.parity_of(c) {
                    q(v[r * n + c], 1)
                } else {
                    q(0, 1)
                }
            });
            SuperMap::new(s, s, m, Parity::Even).unwrap()
        })
    }

    proptest! {
        #[test]
        fn supertrace_is_cyclic((f, g) in space().prop_flat_map(|s| (even_endo(s), even_endo(s)))) {
            let fg = f.compose(&g).unwrap().supertrace().unwrap();
            let gf = g.compose(&f).unwrap().supertrace().unwrap();
            prop_assert_eq!(fg, gf);
        }

        #[test]
        fn supertrace_is_multiplicative(f in space().prop_flat_map(even_endo), g in space().prop_flat_map(even_endo)) {
            let t = tensor_map(&f, &g);
            prop_assert_eq!(t.supertrace().unwrap(), f.supertrace().unwrap() * g.supertrace().unwrap());
        }

        #[test]
        fn flip_squares_to_identity(x in space(), y in space()) {
            let a: SuperMap<Q> = flip(x, y);
            let b: SuperMap<Q> = flip(y, x);
            let both = b.compose(&a).unwrap();
            prop_assert!(both.matrix.is_identity());
            let st = a.compose(&b).unwrap().supertrace().unwrap();
            prop_assert_eq!(st, q(x.tensor(&y).sdim(), 1));
        }

        #[test]
        fn flip_supertrace_is_product_of_sdims(x in space(), y in space()) {
            if x == y {
                let f: SuperMap<Q> = flip(x, x);
                // str(flip) on X⊗X equals sdim(X)
                prop_assert_eq!(f.supertrace().unwrap(), q(x.sdim(), 1));
            }
            prop_assert_eq!(x.tensor(&y).sdim(), x.sdim() * y.sdim());
        }
    }
}
