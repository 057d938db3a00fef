use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, RowSpace};
use crate::superlin::Parity;

use super::idempotents::primitive_idempotents;
use super::module::{endo_from_coords, endomorphism_algebra, hom_basis};
use super::AlgModule;

/// `m ≅ A^a ⊕ (ΠA)^b` over a graded local algebra, with generator witnesses.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFreeDecomposition<F: Field> {
    pub even: usize,
    pub odd: usize,
    /// Homogeneous free generators, even ones first.
    pub generators: Vec<Vec<F>>,
}

/// Elements of `radical` spanning it modulo `radical²`, split into homogeneous parts.
fn radical_generators<F: Field>(m: &AlgModule<F>, radical: &[Vec<F>]) -> Vec<Vec<F>> {
    let a = &m.algebra;
    let mut span = a.product_span(radical, radical);
    let mut gens = Vec::new();
    for r in radical {
        for part in homogeneous_parts_alg(a, r) {
            if span.insert(part.clone()) {
                gens.push(part);
            }
        }
    }
    gens
}

fn homogeneous_parts_alg<F: Field>(a: &super::Algebra<F>, v: &[F]) -> Vec<Vec<F>> {
    if !a.is_graded() {
        return vec![v.to_vec()];
    }
    let mut even = vec![F::zero(); v.len()];
    let mut odd = vec![F::zero(); v.len()];
    for (i, x) in v.iter().enumerate() {
        match a.parity_of(i) {
            Parity::Even => even[i] = x.clone(),
            Parity::Odd => odd[i] = x.clone(),
        }
    }
    vec![even, odd]
}

/// Free-module test over a graded local algebra with the given radical basis.
pub fn decompose_local_free<F: Field>(m: &AlgModule<F>, radical: &[Vec<F>]) -> Result<LocalFreeDecomposition<F>> {
    let a = &m.algebra;
    let n = m.dim();
    if radical.len() + 1 != a.dim() {
        return Err(Error::Invalid("algebra is not local with a one-dimensional simple".into()));
    }
    let gens: Vec<Matrix<F>> = radical_generators(m, radical).iter().map(|g| m.act(g)).collect();

    // rad·m = Σ_g g·m, graded because the generators are homogeneous
    let mut rad_m = RowSpace::new(n);
    for g in &gens {
        for c in 0..n {
            rad_m.insert(g.column(c));
        }
    }

    // homogeneous basis vectors of m completing rad·m, even ones first
    let mut order: Vec<usize> = (0..n).filter(|&i| m.parity_of(i) == Parity::Even).collect();
    order.extend((0..n).filter(|&i| m.parity_of(i) == Parity::Odd));
    let mut span = rad_m.clone();
    let mut generators = Vec::new();
    let mut even = 0;
    for i in order {
        let v = crate::exact::unit_vector(n, i);
        if span.insert(v.clone()) {
            if m.parity_of(i) == Parity::Even {
                even += 1;
            }
            generators.push(v);
        }
    }
    let odd = generators.len() - even;
    if n != generators.len() * a.dim() {
        return Err(Error::NotProjective(format!(
            "dimension {n} is not {} times the algebra dimension {}",
            generators.len(),
            a.dim()
        )));
    }
    let images = m.span_of_images(&m.action, &generators);
    if images.rank() != n {
        return Err(Error::NotProjective(format!(
            "lifted generators span only {} of {n} dimensions",
            images.rank()
        )));
    }
    Ok(LocalFreeDecomposition { even, odd, generators })
}

/// Column-space basis of an even idempotent, split into homogeneous vectors.
fn image_basis<F: Field>(m: &AlgModule<F>, e: &Matrix<F>) -> (Vec<Vec<F>>, Option<Vec<Parity>>) {
    let n = m.dim();
    let mut basis = Vec::new();
    let mut parity = Vec::new();
    for p in [Parity::Even, Parity::Odd] {
        let mut s = RowSpace::new(n);
        for c in (0..n).filter(|&c| m.parity_of(c) == p) {
            s.insert(e.column(c));
        }
        for v in s.reduced_basis() {
            basis.push(v);
            parity.push(p);
        }
    }
    (basis, m.is_graded().then_some(parity))
}

/// Whether `x ≅ y` for indecomposable `x`, by the mutual hom criterion.
pub fn isomorphic_indecomposables<F: Field>(x: &AlgModule<F>, y: &AlgModule<F>) -> Result<bool> {
    if x.dim() != y.dim() {
        return Ok(false);
    }
    let there = hom_basis(x, y)?;
    let back = hom_basis(y, x)?;
    for f in &there {
        for g in &back {
            if (g * f).inverse().is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Decomposes `m` into indecomposables and labels them against `candidates`.
///
/// Returns `(label, multiplicity)` in candidate order, omitting zero multiplicities.
pub fn decompose_module<F: Field>(
    m: &AlgModule<F>,
    candidates: &[(String, AlgModule<F>)],
) -> Result<Vec<(String, usize)>> {
    let summands = indecomposable_summands(m)?;
    let mut counts = vec![0usize; candidates.len()];
    for s in &summands {
        let mut matched = false;
        for (k, (_, c)) in candidates.iter().enumerate() {
            if isomorphic_indecomposables(s, c)? {
                counts[k] += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            return Err(Error::UnmatchedSummand(format!(
                "summand of dimension {} matches no candidate",
                s.dim()
            )));
        }
    }
    Ok(candidates
        .iter()
        .zip(counts)
        .filter(|(_, n)| *n > 0)
        .map(|((l, _), n)| (l.clone(), n))
        .collect())
}

/// Indecomposable summands of `m` cut out by primitive idempotents of `End(m)`.
pub fn indecomposable_summands<F: Field>(m: &AlgModule<F>) -> Result<Vec<AlgModule<F>>> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let (end, basis) = endomorphism_algebra(m)?;
    let idems = primitive_idempotents(&end)?;
    idems
        .elements
        .iter()
        .map(|e| {
            let em = endo_from_coords(&basis, e, m.dim());
            let (b, parity) = image_basis(m, &em);
            m.restrict(&b, parity)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{fixtures, radical_char0};
    use crate::exact::{FieldSpec, Rational};
    use std::sync::Arc;

    #[test]
    fn regular_exterior_module_is_free_of_rank_one() {
        let a = Arc::new(fixtures::exterior_algebra::<Rational>(2, FieldSpec::Rational, true));
        let rad = radical_char0(&a).unwrap();
        let d = decompose_local_free(&AlgModule::regular(a), &rad).unwrap();
        assert_eq!((d.even, d.odd), (1, 0));
    }

    #[test]
    fn trivial_module_is_not_projective() {
        let a = Arc::new(fixtures::exterior_algebra::<Rational>(2, FieldSpec::Rational, true));
        let rad = radical_char0(&a).unwrap();
        let mut action = vec![Matrix::zeros(1, 1); 4];
        action[0] = Matrix::identity(1);
        let triv = AlgModule::new(a, 1, action, Some(vec![Parity::Even])).unwrap();
        triv.verify().unwrap();
        assert!(matches!(decompose_local_free(&triv, &rad), Err(Error::NotProjective(_))));
    }

    #[test]
    fn split_product_regular_module() {
        let a = Arc::new(fixtures::split_product::<Rational>(2));
        let reg = AlgModule::regular(a.clone());
        let s1 = reg.restrict(&[a.basis_vector(0)], None).unwrap();
        let s2 = reg.restrict(&[a.basis_vector(1)], None).unwrap();
        let got = decompose_module(&reg, &[("S1".into(), s1), ("S2".into(), s2)]).unwrap();
        assert_eq!(got, vec![("S1".into(), 1), ("S2".into(), 1)]);
    }

    #[test]
    fn triangular_regular_module() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        let reg = AlgModule::regular(a.clone());
        let p1 = reg.restrict(&[a.basis_vector(0)], None).unwrap();
        let p2 = reg.restrict(&[a.basis_vector(1), a.basis_vector(2)], None).unwrap();
        let got = decompose_module(&reg, &[("P1".into(), p1), ("P2".into(), p2)]).unwrap();
        assert_eq!(got, vec![("P1".into(), 1), ("P2".into(), 1)]);
    }

    #[test]
    fn unmatched_summand() {
        let a = Arc::new(fixtures::upper_triangular::<Rational>());
        let reg = AlgModule::regular(a.clone());
        let p1 = reg.restrict(&[a.basis_vector(0)], None).unwrap();
        assert!(matches!(
            decompose_module(&reg, &[("P1".into(), p1)]),
            Err(Error::UnmatchedSummand(_))
        ));
    }

    #[test]
    fn local_free_agrees_with_general_decomposition() {
        let a = Arc::new(fixtures::exterior_algebra::<Rational>(2, FieldSpec::Rational, true));
        let rad = radical_char0(&a).unwrap();
        let reg = AlgModule::regular(a.clone());
        let m = reg.direct_sum(&reg.parity_shift()).direct_sum(&reg);
        let fast = decompose_local_free(&m, &rad).unwrap();
        let slow = decompose_module(
            &m,
            &[("L".into(), reg.clone()), ("PiL".into(), reg.parity_shift())],
        )
        .unwrap();
        assert_eq!((fast.even, fast.odd), (2, 1));
        assert_eq!(slow, vec![("L".into(), 2), ("PiL".into(), 1)]);
    }
}
