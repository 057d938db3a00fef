use crate::assoc::decompose_local_free;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, SpanCoords};
use crate::superlin::Parity;

use super::lambda::LambdaAlgebra;
use super::object::SFObject;

fn supertrace_by_parity<F: Field>(parity: &[Parity], f: &Matrix<F>) -> F {
    let mut s = F::zero();
    for (i, p) in parity.iter().enumerate() {
        match p {
            Parity::Even => s = s.add_ref(f.get(i, i)),
            Parity::Odd => s = s.sub_ref(f.get(i, i)),
        }
    }
    s
}

fn check_even<F: Field>(p: &SFObject<F>, f: &Matrix<F>) -> Result<()> {
    if f.rows() != p.dim() || f.cols() != p.dim() {
        return Err(Error::DimensionMismatch(format!("endomorphism of a {}-dimensional object", p.dim())));
    }
    for r in 0..p.dim() {
        for c in 0..p.dim() {
            if p.parity[r] != p.parity[c] && !f.get(r, c).is_zero() {
                return Err(Error::Invalid("endomorphism is not even".into()));
            }
        }
    }
    if let Some(m) = &p.module {
        for k in m.generator_indices() {
            if &m.action[k] * f != f * &m.action[k] {
                return Err(Error::Invalid("map does not commute with the action".into()));
            }
        }
    }
    Ok(())
}

/// Parity of a homogeneous vector.
pub(crate) fn vector_parity<F: Field>(parity: &[Parity], v: &[F]) -> Result<Parity> {
    let mut seen = None;
    for (x, p) in v.iter().zip(parity) {
        if !x.is_zero() {
            match seen {
                None => seen = Some(*p),
                Some(q) if q != *p => return Err(Error::Invalid("generator is not homogeneous".into())),
                _ => {}
            }
        }
    }
    seen.ok_or_else(|| Error::Invalid("zero generator".into()))
}

/// The modified trace of an even endomorphism of a projective object.
///
/// Sector 1: `t₀·str(f)`. Sector 0: the object is presented as free over `Λ` on
/// homogeneous generators `g_k`; writing `f(g_k) = Σ_{S,l} c_{S,l}·ρ(e_S)g_l`,
/// the value is `t₀·Σ_k (−1)^{|g_k|} β^{-2} c_{top,k}`.
pub fn sf_modified_trace<F: Field>(lam: &LambdaAlgebra<F>, p: &SFObject<F>, f: &Matrix<F>, t0: &F) -> Result<F> {
    if p.sector == 1 {
        check_even(p, f)?;
        return Ok(t0.mul_ref(&supertrace_by_parity(&p.parity, f)));
    }
    let m = p.module.as_ref().ok_or_else(|| Error::Invalid("sector-0 object without action".into()))?;
    let d = decompose_local_free(m, &lam.radical())?;
    sf_modified_trace_with(lam, p, &d.generators, f, t0)
}

/// [`sf_modified_trace`] for a caller-chosen free generating set.
pub fn sf_modified_trace_with<F: Field>(
    lam: &LambdaAlgebra<F>,
    p: &SFObject<F>,
    generators: &[Vec<F>],
    f: &Matrix<F>,
    t0: &F,
) -> Result<F> {
    check_even(p, f)?;
    let m = p.module.as_ref().ok_or_else(|| Error::Invalid("sector-1 objects have no presentation".into()))?;
    let beta = lam.beta_sq_inv()?;
    let dl = lam.dim();
    if generators.len() * dl != p.dim() {
        return Err(Error::NotProjective("generator count does not match the dimension".into()));
    }
    let mut columns = Vec::with_capacity(p.dim());
    for g in generators {
        for s in 0..dl {
            columns.push(m.action[s].mul_vec(g));
        }
    }
    let phi = SpanCoords::new(&columns)
        .ok_or_else(|| Error::NotProjective("generators do not present a free module".into()))?;
    let mut total = F::zero();
    for (k, g) in generators.iter().enumerate() {
        let c = phi.coords(&f.mul_vec(g));
        let top = &c[k * dl + lam.top()];
        match vector_parity(&p.parity, g)? {
            Parity::Even => total = total.add_ref(top),
            Parity::Odd => total = total.sub_ref(top),
        }
    }
    Ok(t0.mul_ref(&beta.mul_ref(&total)))
}

/// Right multiplication `x ↦ x·a` on `Λ` (or `ΠΛ`), a module endomorphism.
pub fn right_multiplication<F: Field>(lam: &LambdaAlgebra<F>, a: &[F]) -> Matrix<F> {
    lam.algebra.right_mult_matrix(a)
}
