use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::{Field, Matrix, RowSpace};
use crate::superlin::Parity;

use super::fusion::{FusionTable, IRR};
use super::lambda::LambdaAlgebra;

/// The printed modular data of `SF` for a given `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct SFModularData<F: Field> {
    pub n: usize,
    pub j: Vec<String>,
    pub irrproj: Vec<String>,
    pub btilde: Matrix<F>,
    pub stilde: Matrix<F>,
    pub ctilde: Matrix<F>,
    pub b: BTreeMap<String, F>,
    pub cartan: Vec<Vec<u64>>,
    pub dual: BTreeMap<String, String>,
}

fn pow2<F: Field>(e: i64) -> F {
    let p = F::from_i64(1i64 << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.inv().expect("nonzero")
    }
}

/// The Cartan matrix `C_{UV} = [P_U : V]` in the order `1, Π1, T, ΠT`.
pub fn sf_cartan(n: usize) -> Vec<Vec<u64>> {
    let c = 1u64 << (2 * n - 1);
    vec![vec![c, c, 0, 0], vec![c, c, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
}

/// Graded dimensions of the layers `rad^k Λ / rad^{k+1} Λ`, computed from products.
pub fn radical_layers<F: Field>(lam: &LambdaAlgebra<F>) -> Vec<(usize, usize)> {
    let a = &lam.algebra;
    let d = lam.dim();
    let gens: Vec<usize> = (1..=lam.generators()).map(|j| lam.generator_index(j)).collect();
    let graded_dims = |vs: &[Vec<F>]| {
        let mut even = RowSpace::new(d);
        let mut odd = RowSpace::new(d);
        for v in vs {
            let mut e = vec![F::zero(); d];
            let mut o = vec![F::zero(); d];
            for (i, x) in v.iter().enumerate() {
                match a.parity_of(i) {
                    Parity::Even => e[i] = x.clone(),
                    Parity::Odd => o[i] = x.clone(),
                }
            }
            even.insert(e);
            odd.insert(o);
        }
        (even.rank(), odd.rank())
    };
    let mut power: Vec<Vec<F>> = (0..d).map(|i| a.basis_vector(i)).collect();
    let mut layers = Vec::new();
    while !power.is_empty() {
        let mut next = RowSpace::new(d);
        for x in &power {
            for &g in &gens {
                next.insert(a.mul_basis_left(g, x));
            }
        }
        let next = next.basis();
        let (e0, o0) = graded_dims(&power);
        let (e1, o1) = graded_dims(&next);
        layers.push((e0 - e1, o0 - o1));
        power = next;
    }
    layers
}

/// The Cartan matrix rebuilt from the composition factors of `Λ` and `ΠΛ`.
pub fn cartan_from_composition_series<F: Field>(lam: &LambdaAlgebra<F>) -> Vec<Vec<u64>> {
    let (even, odd) = radical_layers(lam)
        .into_iter()
        .fold((0u64, 0u64), |(e, o), (de, dod)| (e + de as u64, o + dod as u64));
    vec![vec![even, odd, 0, 0], vec![odd, even, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
}

/// `B̃`, `S̃`, `C̃`, `b` as printed, with `J = {1, T, ΠT}`.
pub fn sf_modular_data<F: Field>(n: usize) -> SFModularData<F> {
    let n_i = n as i64;
    let half = pow2::<F>(-1);
    let s = pow2::<F>(n_i - 1);
    let t = pow2::<F>(n_i);
    let z = F::zero;
    let stilde = Matrix::from_rows(vec![
        vec![z(), s.clone(), -s],
        vec![t.clone(), half.clone(), half.clone()],
        vec![-t, half.clone(), half],
    ])
    .expect("square");
    let btilde = Matrix::from_i64_rows(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let bt = pow2::<F>(-n_i - 1);
    let b = [("T".to_string(), bt.clone()), ("PiT".to_string(), -bt)].into_iter().collect();
    SFModularData {
        n,
        j: vec!["1".into(), "T".into(), "PiT".into()],
        irrproj: vec!["T".into(), "PiT".into()],
        btilde,
        stilde,
        ctilde: Matrix::identity(3),
        b,
        cartan: sf_cartan(n),
        dual: IRR.iter().map(|s| (s.to_string(), s.to_string())).collect(),
    }
}

impl<F: Field> SFModularData<F> {
    /// Packages the printed data with a fusion table as an auditable dataset.
    pub fn to_dataset(&self, fusion: &FusionTable, t0: F) -> Result<crate::audit::ModularDataSet<F>> {
        let fusion = fusion
            .iter()
            .map(|((u, v), ws)| {
                let ws = ws.iter().map(|(w, m)| (w.clone(), F::from_i64(*m as i64))).collect();
                ((u.clone(), v.clone()), ws)
            })
            .collect();
        crate::audit::ModularDataSet::new(
            IRR.iter().map(|s| s.to_string()).collect(),
            self.dual.clone(),
            self.cartan.iter().map(|r| r.iter().map(|&c| c as i64).collect()).collect(),
            self.j.clone(),
            self.irrproj.clone(),
            self.btilde.clone(),
            self.stilde.clone(),
            self.ctilde.clone(),
            self.b.clone(),
            fusion,
            t0,
        )
    }
}
