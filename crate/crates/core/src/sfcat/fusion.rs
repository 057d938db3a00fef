use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::assoc::decompose_local_free;
use crate::error::Result;
use crate::exact::{Field, Rational};

use super::lambda::LambdaAlgebra;
use super::object::{sf_tensor_capped, SFObject};

/// Simple objects in table order; `P_U` is the projective cover of `U`.
pub const IRR: [&str; 4] = ["1", "Pi1", "T", "PiT"];

/// `M_{UV}^W`, keyed by `(U, V)` and then `W`; zero multiplicities are omitted.
pub type FusionTable = BTreeMap<(String, String), BTreeMap<String, u64>>;

/// `P_1 = Λ`, `P_{Π1} = ΠΛ`, `P_T = T`, `P_{ΠT} = ΠT`.
pub fn projective_covers<F: Field>(lam: &LambdaAlgebra<F>) -> Vec<(String, SFObject<F>)> {
    vec![
        ("1".into(), SFObject::lambda(lam)),
        ("Pi1".into(), SFObject::pi_lambda(lam)),
        ("T".into(), SFObject::t()),
        ("PiT".into(), SFObject::pi_t()),
    ]
}

/// Multiplicities of `P_W` in a projective object, with generator witnesses in sector 0.
pub fn decompose_projective<F: Field>(lam: &LambdaAlgebra<F>, p: &SFObject<F>) -> Result<BTreeMap<String, u64>> {
    let (even, odd, labels) = match &p.module {
        Some(m) => {
            let d = decompose_local_free(m, &lam.radical())?;
            (d.even, d.odd, ("1", "Pi1"))
        }
        None => {
            let s = p.space();
            (s.even_dim, s.odd_dim, ("T", "PiT"))
        }
    };
    let mut out = BTreeMap::new();
    if even > 0 {
        out.insert(labels.0.to_string(), even as u64);
    }
    if odd > 0 {
        out.insert(labels.1.to_string(), odd as u64);
    }
    Ok(out)
}

/// Fusion of projective covers by brute-force decomposition of every `P_U * P_V`.
///
/// `max_dim` bounds the dense action storage to `max_dim²` entries.
pub fn sf_fusion(n: usize, max_dim: usize) -> Result<FusionTable> {
    let lam = LambdaAlgebra::<Rational>::structure(n)?;
    let covers = projective_covers(&lam);
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (0..4).map(move |v| (u, v))).collect();
    let results: Vec<Result<((String, String), BTreeMap<String, u64>)>> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let prod = sf_tensor_capped(&lam, &covers[u].1, &covers[v].1, max_dim)?;
            let m = decompose_projective(&lam, &prod)?;
            Ok(((IRR[u].to_string(), IRR[v].to_string()), m))
        })
        .collect();
    results.into_iter().collect()
}

/// The closed form: `P_a * P_b` for `a, b ∈ {1, Π1}` is `2^{2N−1}(Λ ⊕ ΠΛ)`, and so on.
pub fn sf_fusion_closed_form(n: usize) -> FusionTable {
    let c = 1u64 << (2 * n - 1);
    let mut table = FusionTable::new();
    for u in IRR {
        for v in IRR {
            let local = |x: &str| x == "1" || x == "Pi1";
            let entry: Vec<(&str, u64)> = match (local(u), local(v)) {
                (true, true) => vec![("1", c), ("Pi1", c)],
                (true, false) | (false, true) => vec![("T", c), ("PiT", c)],
                (false, false) => vec![(if u == v { "1" } else { "Pi1" }, 1)],
            };
            table.insert(
                (u.to_string(), v.to_string()),
                entry.into_iter().map(|(w, m)| (w.to_string(), m)).collect(),
            );
        }
    }
    table
}

/// `M_{UV}^W` with absent entries read as zero.
pub fn multiplicity(table: &FusionTable, u: &str, v: &str, w: &str) -> u64 {
    table
        .get(&(u.to_string(), v.to_string()))
        .and_then(|m| m.get(w))
        .copied()
        .unwrap_or(0)
}
