use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::{frac, Field, GaussianRational, Matrix};
use crate::sfcat::{sf_fusion_closed_form, sf_modular_data, FusionTable};

use super::dataset::{Fusion, ModularDataSet};

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The toric code: `ℤ/2 × ℤ/2` fusion, `S̃ = s/2` for the character table `s`, `b_Q = 2`.
pub fn toric_code_dataset<F: Field>() -> ModularDataSet<F> {
    let irr = labels(&["1", "e", "m", "f"]);
    // 1 = (0,0), e = (1,0), m = (0,1), f = (1,1)
    let bits = [(0u8, 0u8), (1, 0), (0, 1), (1, 1)];
    let chi = |a: usize, b: usize| {
        let s = bits[a].0 * bits[b].1 + bits[a].1 * bits[b].0;
        if s.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    let half = F::from_i64(2).inv().expect("char 0");
    let stilde = Matrix::from_fn(4, 4, |a, b| F::from_i64(chi(a, b)).mul_ref(&half));
    let mut fusion = Fusion::new();
    for (u, bu) in bits.iter().enumerate() {
        for (v, bv) in bits.iter().enumerate() {
            let w = bits.iter().position(|bw| bw.0 == bu.0 ^ bv.0 && bw.1 == bu.1 ^ bv.1).expect("group");
            fusion.insert((irr[u].clone(), irr[v].clone()), [(irr[w].clone(), F::one())].into_iter().collect());
        }
    }
    let ident = (0..4).map(|r| (0..4).map(|c| i64::from(r == c)).collect()).collect();
    ModularDataSet::new(
        irr.clone(),
        irr.iter().map(|l| (l.clone(), l.clone())).collect(),
        ident,
        irr.clone(),
        irr.clone(),
        Matrix::identity(4),
        stilde,
        Matrix::identity(4),
        irr.iter().map(|l| (l.clone(), F::from_i64(2))).collect(),
        fusion,
        F::one(),
    )
    .expect("valid toric data")
}

/// The printed `SF` data with a given fusion table and the expected `4^{N−1}t₀` Hopf link at `(T, 1)`.
pub fn sf_dataset_with_fusion<F: Field>(n: usize, t0: F, fusion: &FusionTable) -> Result<ModularDataSet<F>> {
    let expected = F::from_i64(1i64 << (2 * (n - 1))).mul_ref(&t0);
    sf_modular_data::<F>(n)
        .to_dataset(fusion, t0)?
        .with_hopf_expectation("T", "1", expected)
}

/// [`sf_dataset_with_fusion`] with the closed-form fusion of projective covers.
pub fn sf_printed_dataset<F: Field>(n: usize, t0: F) -> Result<ModularDataSet<F>> {
    sf_dataset_with_fusion(n, t0, &sf_fusion_closed_form(n))
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix<GaussianRational>, Matrix<GaussianRational>) {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| GaussianRational::from_i64(rng.gen_range(-3..=3)));
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// A random dataset satisfying `S̃² = C̃` and the product rule by construction.
///
/// `C̃` is a random involutive permutation (the duality); `S̃` is conjugate to
/// `±1` on its `+1`-eigenspace and to `±i` on its `−1`-eigenspace; `b` is random;
/// `M` is solved from the product rule, so it need not be integral.
pub fn synthetic_modular_dataset(seed: u64) -> ModularDataSet<GaussianRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=5);
    let irr: Vec<String> = (0..n).map(|k| format!("U{k}")).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut dual: Vec<usize> = (0..n).collect();
    let pairs = rng.gen_range(0..=n / 2);
    for p in 0..pairs {
        let (a, b) = (order[2 * p], order[2 * p + 1]);
        dual[a] = b;
        dual[b] = a;
    }

    // eigenvectors of the permutation: +1 first, then −1
    let g = |k: i64| GaussianRational::from_i64(k);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for a in 0..n {
        let b = dual[a];
        if a == b {
            plus.push((0..n).map(|r| g(i64::from(r == a))).collect::<Vec<_>>());
        } else if a < b {
            plus.push((0..n).map(|r| g(i64::from(r == a) + i64::from(r == b))).collect());
            minus.push((0..n).map(|r| g(i64::from(r == a) - i64::from(r == b))).collect());
        }
    }
    let (np, nm) = (plus.len(), minus.len());
    let cols: Vec<Vec<GaussianRational>> = plus.into_iter().chain(minus).collect();
    let q = Matrix::from_columns(&cols, n).expect("shape");
    let q_inv = q.inverse().expect("eigenbasis");
    let i = crate::exact::imaginary_unit();
    let mut blocks = Vec::new();
    for (size, unit) in [(np, g(1)), (nm, i)] {
        if size == 0 {
            continue;
        }
        let (r, r_inv) = random_invertible(&mut rng, size);
        let d = Matrix::from_fn(size, size, |a, b| {
            if a != b {
                g(0)
            } else if rng.gen_bool(0.5) {
                unit.clone()
            } else {
                -unit.clone()
            }
        });
        blocks.push(&(&r * &d) * &r_inv);
    }
    let block_refs: Vec<&Matrix<GaussianRational>> = blocks.iter().collect();
    let stilde = &(&q * &Matrix::block_diag(&block_refs)) * &q_inv;
    let ctilde = Matrix::from_fn(n, n, |a, b| g(i64::from(dual[a] == b)));
    let s_inv = stilde.inverse().expect("S̃² = C̃ is invertible");

    let mut irrproj: Vec<String> = irr.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if irrproj.is_empty() {
        irrproj.push(irr[rng.gen_range(0..n)].clone());
    }
    let b: BTreeMap<String, GaussianRational> = irrproj
        .iter()
        .map(|l| {
            let mut num = 0;
            while num == 0 {
                num = rng.gen_range(-5..=5);
            }
            let den = rng.gen_range(1..=4);
            (l.clone(), frac::<GaussianRational>(num, den))
        })
        .collect();

    let mut fusion = Fusion::new();
    for u in 0..n {
        for v in 0..n {
            let target: Vec<GaussianRational> = (0..n)
                .map(|a| match b.get(&irr[a]) {
                    Some(ba) => ba.mul_ref(stilde.get(u, a)).mul_ref(stilde.get(v, a)),
                    None => g(0),
                })
                .collect();
            let row: BTreeMap<String, GaussianRational> = (0..n)
                .map(|w| {
                    let m = (0..n).fold(g(0), |acc, a| acc.add_ref(&target[a].mul_ref(s_inv.get(a, w))));
                    (irr[w].clone(), m)
                })
                .filter(|(_, m)| *m != g(0))
                .collect();
            fusion.insert((irr[u].clone(), irr[v].clone()), row);
        }
    }
    let ident = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    ModularDataSet::new(
        irr.clone(),
        (0..n).map(|a| (irr[a].clone(), irr[dual[a]].clone())).collect(),
        ident,
        irr.clone(),
        irrproj,
        Matrix::identity(n),
        stilde,
        ctilde,
        b,
        fusion,
        g(1),
    )
    .expect("valid synthetic data")
}
