use crate::assoc::AlgModule;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};
use crate::superlin::{Parity, SuperSpace};

use super::lambda::LambdaAlgebra;

/// An object of `SF = SF₀ ⊕ SF₁`.
///
/// Basis vectors carry explicit parities; sector-0 objects carry a `Λ`-action.
#[derive(Clone, Debug)]
pub struct SFObject<F: Field> {
    pub name: String,
    pub sector: u8,
    pub parity: Vec<Parity>,
    pub module: Option<AlgModule<F>>,
}

impl<F: Field> SFObject<F> {
    /// A sector-0 object from a graded `Λ`-module.
    pub fn from_module(name: impl Into<String>, module: AlgModule<F>) -> Result<Self> {
        let parity = module
            .parity
            .clone()
            .ok_or_else(|| Error::Invalid("sector-0 objects need a graded module".into()))?;
        Ok(SFObject {
            name: name.into(),
            sector: 0,
            parity,
            module: Some(module),
        })
    }

    /// A sector-1 object: a bare super vector space.
    pub fn sector_one(name: impl Into<String>, parity: Vec<Parity>) -> Self {
        SFObject {
            name: name.into(),
            sector: 1,
            parity,
            module: None,
        }
    }

    fn trivial(lam: &LambdaAlgebra<F>, name: &str, p: Parity) -> Self {
        let gens = vec![Matrix::zeros(1, 1); lam.generators()];
        let action = lam.extend_action(&gens, 1);
        let module = AlgModule::new(lam.algebra.clone(), 1, action, Some(vec![p])).expect("shape");
        SFObject::from_module(name, module).expect("graded")
    }

    /// The tensor unit `1 = k^{1|0}` with trivial action.
    pub fn unit(lam: &LambdaAlgebra<F>) -> Self {
        Self::trivial(lam, "1", Parity::Even)
    }

    pub fn pi_unit(lam: &LambdaAlgebra<F>) -> Self {
        Self::trivial(lam, "Pi1", Parity::Odd)
    }

    /// `Λ` as its own left regular module, the projective cover of `1`.
    pub fn lambda(lam: &LambdaAlgebra<F>) -> Self {
        SFObject::from_module("Lambda", AlgModule::regular(lam.algebra.clone())).expect("graded")
    }

    pub fn pi_lambda(lam: &LambdaAlgebra<F>) -> Self {
        SFObject::from_module("PiLambda", AlgModule::regular(lam.algebra.clone()).parity_shift())
            .expect("graded")
    }

    pub fn t() -> Self {
        SFObject::sector_one("T", vec![Parity::Even])
    }

    pub fn pi_t() -> Self {
        SFObject::sector_one("PiT", vec![Parity::Odd])
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn space(&self) -> SuperSpace {
        let odd = self.parity.iter().filter(|p| **p == Parity::Odd).count();
        SuperSpace::new(self.dim() - odd, odd)
    }

    pub fn parity_shift(&self) -> Self {
        SFObject {
            name: format!("Pi({})", self.name),
            sector: self.sector,
            parity: self.parity.iter().map(|p| p.add(Parity::Odd)).collect(),
            module: self.module.as_ref().map(|m| m.parity_shift()),
        }
    }

    /// Checks the sector invariants and, in sector 0, the module axioms.
    pub fn verify(&self) -> Result<()> {
        match (self.sector, &self.module) {
            (0, Some(m)) => {
                if m.dim() != self.dim() {
                    return Err(Error::DimensionMismatch("module and space dimensions".into()));
                }
                m.verify()
            }
            (1, None) => Ok(()),
            _ => Err(Error::Invalid("sector 0 needs an action, sector 1 none".into())),
        }
    }

    fn generator_matrices(&self, lam: &LambdaAlgebra<F>) -> Vec<Matrix<F>> {
        let m = self.module.as_ref().expect("sector 0");
        (1..=lam.generators()).map(|j| m.action[lam.generator_index(j)].clone()).collect()
    }
}

/// Pairs `(i, j)` ordered even-first, then lexicographically; with their parities.
fn tensor_pairs(x: &[Parity], y: &[Parity]) -> (Vec<(usize, usize)>, Vec<Parity>) {
    let mut pairs = Vec::with_capacity(x.len() * y.len());
    for target in [Parity::Even, Parity::Odd] {
        for (i, p) in x.iter().enumerate() {
            for (j, q) in y.iter().enumerate() {
                if p.add(*q) == target {
                    pairs.push((i, j));
                }
            }
        }
    }
    let parity = pairs.iter().map(|&(i, j)| x[i].add(y[j])).collect();
    (pairs, parity)
}

fn pair_index(pairs: &[(usize, usize)], cols: usize) -> Vec<usize> {
    let rows = pairs.iter().map(|p| p.0).max().map_or(0, |m| m + 1);
    let mut index = vec![usize::MAX; rows * cols];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i * cols + j] = k;
    }
    index
}

/// `ρ(a)(v ⊗ w) = ρ_X(a)v ⊗ w + (−1)^{|v|} v ⊗ ρ_Y(a)w` on the pair basis.
fn diagonal_generator<F: Field>(
    gx: &Matrix<F>,
    gy: &Matrix<F>,
    xp: &[Parity],
    pairs: &[(usize, usize)],
    index: &[usize],
    ny: usize,
) -> Matrix<F> {
    let n = pairs.len();
    let mut m: Matrix<F> = Matrix::zeros(n, n);
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for i2 in 0..gx.rows() {
            let c = gx.get(i2, i);
            if !c.is_zero() {
                let row = index[i2 * ny + j];
                let v = m.get(row, col).add_ref(c);
                m.set(row, col, v);
            }
        }
        let odd = xp[i] == Parity::Odd;
        for j2 in 0..gy.rows() {
            let c = gy.get(j2, j);
            if !c.is_zero() {
                let row = index[i * ny + j2];
                let v = if odd { m.get(row, col).sub_ref(c) } else { m.get(row, col).add_ref(c) };
                m.set(row, col, v);
            }
        }
    }
    m
}

/// Dense entries stored for the action on an object of dimension `dim`.
pub(crate) fn check_budget<F: Field>(lam: &LambdaAlgebra<F>, dim: usize, max_dim: usize) -> Result<()> {
    let need = (lam.dim() as u128) * (dim as u128) * (dim as u128);
    let budget = (max_dim as u128) * (max_dim as u128);
    if need > budget {
        return Err(Error::ResourceCap(format!(
            "action on a {dim}-dimensional object needs {need} dense entries, cap is {max_dim}^2"
        )));
    }
    Ok(())
}

/// The tensor product `X * Y` of `SF`, by sector.
///
/// * `00`: `X ⊗ Y` with the diagonal action through the coproduct;
/// * `01`, `10`: the super tensor product, sector 1;
/// * `11`: `Λ ⊗ X ⊗ Y` with `Λ` acting on the left factor, sector 0.
pub fn sf_tensor<F: Field>(lam: &LambdaAlgebra<F>, x: &SFObject<F>, y: &SFObject<F>) -> Result<SFObject<F>> {
    sf_tensor_capped(lam, x, y, usize::MAX >> 1)
}

pub fn sf_tensor_capped<F: Field>(
    lam: &LambdaAlgebra<F>,
    x: &SFObject<F>,
    y: &SFObject<F>,
    max_dim: usize,
) -> Result<SFObject<F>> {
    for o in [x, y] {
        if let Some(m) = &o.module {
            if m.algebra.dim() != lam.dim() || m.algebra.field != lam.algebra.field {
                return Err(Error::Invalid(format!("{} lives over a different Λ", o.name)));
            }
        }
    }
    let name = format!("{}*{}", x.name, y.name);
    match (x.sector, y.sector) {
        (0, 0) => {
            let (pairs, parity) = tensor_pairs(&x.parity, &y.parity);
            let n = pairs.len();
            check_budget(lam, n, max_dim)?;
            let index = pair_index(&pairs, y.dim());
            let (gx, gy) = (x.generator_matrices(lam), y.generator_matrices(lam));
            let gens: Vec<Matrix<F>> = gx
                .iter()
                .zip(&gy)
                .map(|(a, b)| diagonal_generator(a, b, &x.parity, &pairs, &index, y.dim()))
                .collect();
            let action = lam.extend_action(&gens, n);
            let module = AlgModule::new(lam.algebra.clone(), n, action, Some(parity))?;
            SFObject::from_module(name, module)
        }
        (0, 1) | (1, 0) => {
            let (_, parity) = tensor_pairs(&x.parity, &y.parity);
            Ok(SFObject::sector_one(name, parity))
        }
        _ => {
            let (_, inner) = tensor_pairs(&x.parity, &y.parity);
            let lp: Vec<Parity> = (0..lam.dim()).map(|i| lam.algebra.parity_of(i)).collect();
            let (pairs, parity) = tensor_pairs(&lp, &inner);
            let n = pairs.len();
            check_budget(lam, n, max_dim)?;
            let index = pair_index(&pairs, inner.len());
            let zero = Matrix::zeros(inner.len(), inner.len());
            let gens: Vec<Matrix<F>> = (1..=lam.generators())
                .map(|j| {
                    let left = lam.algebra.left_mult_matrix(&lam.algebra.basis_vector(lam.generator_index(j)));
                    diagonal_generator(&left, &zero, &lp, &pairs, &index, inner.len())
                })
                .collect();
            let action = lam.extend_action(&gens, n);
            let module = AlgModule::new(lam.algebra.clone(), n, action, Some(parity))?;
            SFObject::from_module(name, module)
        }
    }
}

/// Even morphisms `x → y`: intertwiners in sector 0, parity-preserving maps in sector 1.
pub fn sf_hom_basis<F: Field>(x: &SFObject<F>, y: &SFObject<F>) -> Result<Vec<Matrix<F>>> {
    if x.sector != y.sector {
        return Ok(Vec::new());
    }
    match (&x.module, &y.module) {
        (Some(m), Some(n)) => crate::assoc::hom_basis(m, n),
        _ => {
            let mut out = Vec::new();
            for (r, p) in y.parity.iter().enumerate() {
                for (c, q) in x.parity.iter().enumerate() {
                    if p == q {
                        let mut h = Matrix::zeros(y.dim(), x.dim());
                        h.set(r, c, F::one());
                        out.push(h);
                    }
                }
            }
            Ok(out)
        }
    }
}
