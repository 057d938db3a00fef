use std::collections::BTreeMap;
use std::sync::Arc;

use crate::assoc::{cartan_matrix, hom_basis, matrix_span_algebra, primitive_idempotents, AlgModule};
use crate::error::{Error, Result};
use crate::exact::{unit_vector, Field, Matrix, SpanCoords};
use crate::frobform::{higman_basis, CentralForm};
use crate::superlin::Parity;

use super::fusion::IRR;
use super::lambda::LambdaAlgebra;
use super::modular::{sf_cartan, sf_modular_data};
use super::object::SFObject;
use super::trace::{right_multiplication, sf_modified_trace};

/// The components `(φ_U)_{P_V}`; absent pairs are zero.
#[derive(Clone, Debug)]
pub struct PhiTable<F: Field> {
    /// `(φ_1)_Λ = R_{c·top}`.
    pub c: F,
    /// `(φ_{Π1})_{ΠΛ} = R_{c_pi·top}`.
    pub c_pi: F,
    /// `c_pi / c`, solved rather than assumed.
    pub pi_sign: F,
    pub b: BTreeMap<String, F>,
    pub entries: BTreeMap<(String, String), Matrix<F>>,
}

impl<F: Field> PhiTable<F> {
    /// `(φ_U)_{P_V}` as a matrix on `P_V`.
    pub fn component(&self, u: &str, v: &str, dim: usize) -> Matrix<F> {
        self.entries
            .get(&(u.to_string(), v.to_string()))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(dim, dim))
    }
}

/// Solves the scalars of `(φ_1)_Λ` and `(φ_{Π1})_{ΠΛ}` from `t_{P}((φ)_{P}) = b_T·t₀`.
pub fn sf_phi_table<F: Field>(lam: &LambdaAlgebra<F>, t0: &F) -> Result<PhiTable<F>> {
    if t0.is_zero() {
        return Err(Error::Invalid("t0 must be nonzero".into()));
    }
    let data = sf_modular_data::<F>(lam.n);
    let b_t = data.b["T"].clone();
    let target = b_t.mul_ref(t0);
    let top = right_multiplication(lam, &lam.top_vector());
    let solve = |p: &SFObject<F>| -> Result<F> {
        let t = sf_modified_trace(lam, p, &top, t0)?;
        let inv = t.inv().ok_or_else(|| Error::DegenerateForm("trace of the top multiplication vanishes".into()))?;
        Ok(target.mul_ref(&inv))
    };
    let c = solve(&SFObject::lambda(lam))?;
    let c_pi = solve(&SFObject::pi_lambda(lam))?;
    let pi_sign = c_pi.mul_ref(&c.inv().expect("nonzero"));
    let mut entries = BTreeMap::new();
    entries.insert(("1".to_string(), "1".to_string()), top.scale(&c));
    entries.insert(("Pi1".to_string(), "Pi1".to_string()), top.scale(&c_pi));
    for q in ["T", "PiT"] {
        entries.insert((q.to_string(), q.to_string()), Matrix::identity(1).scale(&data.b[q]));
    }
    Ok(PhiTable {
        c,
        c_pi,
        pi_sign,
        b: data.b,
        entries,
    })
}

/// Outcome of comparing `tr_{Hom(G,M)}(− ∘ x)` with `t_G((φ_M)_G ∘ x)/(b_T t₀)`.
#[derive(Clone, Debug)]
pub struct TraceVsTg<F: Field> {
    pub end_dim: usize,
    /// Per simple `M`: residuals over a basis of `Hom(G, M)`.
    pub residuals: BTreeMap<String, Vec<F>>,
    pub hom_dims: BTreeMap<String, usize>,
    pub all_zero: bool,
    pub cartan_matches: bool,
    pub end_cartan: Vec<Vec<usize>>,
    pub higman_dim: usize,
    pub pi_sign: F,
}

/// `G = Λ ⊕ ΠΛ ⊕ T ⊕ ΠT`: sector-0 part as a module, sector-1 part as `k^{1|1}`.
struct Generator<F: Field> {
    g0: SFObject<F>,
    d0: usize,
}

impl<F: Field> Generator<F> {
    fn new(lam: &LambdaAlgebra<F>) -> Self {
        let m = AlgModule::regular(lam.algebra.clone());
        let g0 = SFObject::from_module("Lambda+PiLambda", m.direct_sum(&m.parity_shift())).expect("graded");
        let d0 = g0.dim();
        Generator { g0, d0 }
    }

    fn dim(&self) -> usize {
        self.d0 + 2
    }

    /// Embeds a sector-0 block and a 2×2 sector-1 block.
    fn embed(&self, m0: Option<&Matrix<F>>, m1: Option<&Matrix<F>>) -> Matrix<F> {
        let z0 = Matrix::zeros(self.d0, self.d0);
        let z1 = Matrix::zeros(2, 2);
        Matrix::block_diag(&[m0.unwrap_or(&z0), m1.unwrap_or(&z1)])
    }

    fn blocks(&self, x: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
        let s0: Vec<usize> = (0..self.d0).collect();
        let s1 = vec![self.d0, self.d0 + 1];
        (x.submatrix(&s0, &s0), x.submatrix(&s1, &s1))
    }

    fn trace(&self, lam: &LambdaAlgebra<F>, x: &Matrix<F>, t0: &F) -> Result<F> {
        let (x0, x1) = self.blocks(x);
        let dl = lam.dim();
        let gens = vec![unit_vector(self.d0, 0), unit_vector(self.d0, dl)];
        let t_0 = super::trace::sf_modified_trace_with(lam, &self.g0, &gens, &x0, t0)?;
        let sector1 = SFObject::sector_one("T+PiT", vec![Parity::Even, Parity::Odd]);
        let t_1 = sf_modified_trace(lam, &sector1, &x1, t0)?;
        Ok(t_0 + t_1)
    }

    fn end_basis(&self) -> Result<Vec<Matrix<F>>> {
        let m = self.g0.module.as_ref().expect("sector 0");
        let mut basis: Vec<Matrix<F>> = hom_basis(m, m)?.iter().map(|h| self.embed(Some(h), None)).collect();
        for k in 0..2 {
            let mut e = Matrix::zeros(2, 2);
            e.set(k, k, F::one());
            basis.push(self.embed(None, Some(&e)));
        }
        Ok(basis)
    }

    /// Basis of `Hom(G, M)` as `1 × dim G` matrices.
    fn hom_to_simple(&self, lam: &LambdaAlgebra<F>, label: &str) -> Result<Vec<Matrix<F>>> {
        let n = self.dim();
        match label {
            "1" | "Pi1" => {
                let simple = if label == "1" { SFObject::unit(lam) } else { SFObject::pi_unit(lam) };
                let hs = hom_basis(self.g0.module.as_ref().expect("sector 0"), simple.module.as_ref().expect("sector 0"))?;
                Ok(hs
                    .into_iter()
                    .map(|h| Matrix::from_fn(1, n, |_, c| if c < self.d0 { h.get(0, c).clone() } else { F::zero() }))
                    .collect())
            }
            _ => {
                let col = if label == "T" { self.d0 } else { self.d0 + 1 };
                let mut h = Matrix::zeros(1, n);
                h.set(0, col, F::one());
                Ok(vec![h])
            }
        }
    }

    /// `(φ_M)_G`, block-diagonal over the summands of `G`.
    fn phi(&self, table: &PhiTable<F>, label: &str, dl: usize) -> Matrix<F> {
        let lam_block = table.component(label, "1", dl);
        let pi_block = table.component(label, "Pi1", dl);
        let m0 = Matrix::block_diag(&[&lam_block, &pi_block]);
        let mut m1 = Matrix::zeros(2, 2);
        m1.set(0, 0, table.component(label, "T", 1).get(0, 0).clone());
        m1.set(1, 1, table.component(label, "PiT", 1).get(0, 0).clone());
        self.embed(Some(&m0), Some(&m1))
    }
}

/// Checks `tr_{Hom(G,M)}(h ↦ h∘x) = t_G((φ_M)_G ∘ x)/(b_T t₀)` over a basis of `E = End(G)`.
///
/// Also compares the Cartan matrix of `E` with [`sf_cartan`] and computes the
/// dimension of the Higman ideal of `(E, t_G)`.
pub fn sf_check_trace_vs_tg<F: Field>(lam: &LambdaAlgebra<F>, t0: &F) -> Result<TraceVsTg<F>> {
    let table = sf_phi_table(lam, t0)?;
    let g = Generator::new(lam);
    let basis = g.end_basis()?;
    let denom = table.b["T"].mul_ref(t0).inv().expect("nonzero");
    let mut residuals = BTreeMap::new();
    let mut hom_dims = BTreeMap::new();
    let mut all_zero = true;
    for label in IRR {
        let homs = g.hom_to_simple(lam, label)?;
        let flat: Vec<Vec<F>> = homs.iter().map(|h| h.entries().to_vec()).collect();
        let coords = SpanCoords::new(&flat).ok_or_else(|| Error::Invalid("dependent hom basis".into()))?;
        let phi = g.phi(&table, label, lam.dim());
        let mut res = Vec::with_capacity(basis.len());
        for x in &basis {
            let mut lhs = F::zero();
            for (k, h) in homs.iter().enumerate() {
                let c = coords
                    .coords_checked((h * x).entries())
                    .ok_or_else(|| Error::Invalid("Hom(G, M) not closed under precomposition".into()))?;
                lhs = lhs.add_ref(&c[k]);
            }
            let rhs = g.trace(lam, &(&phi * x), t0)?.mul_ref(&denom);
            let r = lhs - rhs;
            all_zero &= r.is_zero();
            res.push(r);
        }
        hom_dims.insert(label.to_string(), homs.len());
        residuals.insert(label.to_string(), res);
    }

    let field = lam.algebra.field;
    let e = Arc::new(matrix_span_algebra(field, &basis)?);
    let idems = primitive_idempotents(&e)?;
    let end_cartan = cartan_matrix(&e, &idems)?;
    let mut ours: Vec<Vec<u64>> = end_cartan.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect();
    let mut printed = sf_cartan(lam.n);
    for m in [&mut ours, &mut printed] {
        for r in m.iter_mut() {
            r.sort();
        }
        m.sort();
    }
    let form_values = basis.iter().map(|x| g.trace(lam, x, t0)).collect::<Result<Vec<F>>>()?;
    let form = CentralForm::new(e, form_values)?;
    let higman_dim = higman_basis(&form)?.len();
    Ok(TraceVsTg {
        end_dim: basis.len(),
        residuals,
        hom_dims,
        all_zero,
        cartan_matches: ours == printed,
        end_cartan,
        higman_dim,
        pi_sign: table.pi_sign,
    })
}
