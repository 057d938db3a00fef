//! Central forms, copairings, the τ-map, Higman and Reynolds ideals, and
//! trace extension to projective modules.

use std::sync::Arc;

use crate::assoc::{cartan_matrix, center, hom_basis, primitive_idempotents, radical_char0, AlgModule, Algebra, IdempotentSet};
use crate::error::{Error, Result};
use crate::exact::{combine, dot, Field, Matrix, RowSpace, SpanCoords};

/// A linear functional `ε` on an algebra, given by its values on the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralForm<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub coords: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormCheck<F: Field> {
    pub central: bool,
    pub nondegenerate: bool,
    pub gram: Matrix<F>,
}

impl<F: Field> CentralForm<F> {
    pub fn new(algebra: Arc<Algebra<F>>, coords: Vec<F>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "form has {} values, algebra dimension is {}",
                coords.len(),
                algebra.dim()
            )));
        }
        Ok(CentralForm { algebra, coords })
    }

    pub fn eval(&self, a: &[F]) -> F {
        dot(&self.coords, a)
    }

    /// `G_ij = ε(b_i b_j)`.
    pub fn gram(&self) -> Matrix<F> {
        let a = &self.algebra;
        Matrix::from_fn(a.dim(), a.dim(), |i, j| {
            a.basis_product(i, j)
                .iter()
                .fold(F::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&self.coords[*k])))
        })
    }

    /// `ζ(z) = ε(z · −)`.
    pub fn twisted(&self, z: &[F]) -> CentralForm<F> {
        let coords = (0..self.algebra.dim())
            .map(|k| self.eval(&self.algebra.mul_basis_right(z, k)))
            .collect();
        CentralForm {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    pub fn check(&self) -> FormCheck<F> {
        let gram = self.gram();
        let central = gram == gram.transpose();
        let nondegenerate = gram.rank() == gram.rows();
        FormCheck {
            central,
            nondegenerate,
            gram,
        }
    }

    fn require_symmetric(&self) -> Result<Matrix<F>> {
        let c = self.check();
        if !c.central {
            return Err(Error::NotCentral("ε(ab) != ε(ba) for some basis pair".into()));
        }
        c.gram
            .inverse()
            .ok_or_else(|| Error::DegenerateForm("Gram matrix is singular".into()))
    }
}

pub fn check_central_form<F: Field>(f: &CentralForm<F>) -> FormCheck<F> {
    f.check()
}

/// `γ = Σ_ij H_ij b_i ⊗ b_j` with `H` the inverse Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Copairing<F: Field> {
    pub matrix: Matrix<F>,
    /// `(γ′, γ″)` pairs: `b_i ⊗ Σ_j H_ij b_j`.
    pub terms: Vec<(Vec<F>, Vec<F>)>,
}

impl<F: Field> Copairing<F> {
    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }
}

pub fn copairing<F: Field>(f: &CentralForm<F>) -> Result<Copairing<F>> {
    let h = f.require_symmetric()?;
    let a = &f.algebra;
    let d = a.dim();
    let terms: Vec<(Vec<F>, Vec<F>)> = (0..d).map(|i| (a.basis_vector(i), h.row(i).to_vec())).collect();
    // resolution: Σ ε(a γ′) γ″ = a = Σ γ′ ε(γ″ a) for all basis a
    for k in 0..d {
        let bk = a.basis_vector(k);
        let left = terms
            .iter()
            .fold(vec![F::zero(); d], |acc, (g1, g2)| {
                let s = f.eval(&a.mul(&bk, g1));
                add_scaled(acc, &s, g2)
            });
        let right = terms
            .iter()
            .fold(vec![F::zero(); d], |acc, (g1, g2)| {
                let s = f.eval(&a.mul(g2, &bk));
                add_scaled(acc, &s, g1)
            });
        if left != bk || right != bk {
            return Err(Error::Invalid("copairing fails the resolution identity".into()));
        }
    }
    let c = Copairing { matrix: h, terms };
    if !c.is_symmetric() {
        return Err(Error::Invalid("copairing is not symmetric".into()));
    }
    Ok(c)
}

fn add_scaled<F: Field>(mut acc: Vec<F>, s: &F, v: &[F]) -> Vec<F> {
    if s.is_zero() {
        return acc;
    }
    for (x, y) in acc.iter_mut().zip(v) {
        if !y.is_zero() {
            *x = x.add_ref(&s.mul_ref(y));
        }
    }
    acc
}

fn tau_with<F: Field>(a: &Algebra<F>, h: &Matrix<F>, x: &[F]) -> Vec<F> {
    let d = a.dim();
    let mut out = vec![F::zero(); d];
    for i in 0..d {
        let bx = a.mul_basis_left(i, x);
        if bx.iter().all(|v| v.is_zero()) {
            continue;
        }
        for j in 0..d {
            let hij = h.get(i, j);
            if hij.is_zero() {
                continue;
            }
            out = add_scaled(out, hij, &a.mul_basis_right(&bx, j));
        }
    }
    out
}

fn is_central<F: Field>(a: &Algebra<F>, z: &[F]) -> bool {
    (0..a.dim()).all(|k| a.mul_basis_right(z, k) == a.mul_basis_left(k, z))
}

/// `τ(x) = Σ γ′ x γ″`; the result is checked to be central.
pub fn tau<F: Field>(f: &CentralForm<F>, x: &[F]) -> Result<Vec<F>> {
    let h = f.require_symmetric()?;
    let t = tau_with(&f.algebra, &h, x);
    if !is_central(&f.algebra, &t) {
        return Err(Error::Invalid("τ produced a non-central element".into()));
    }
    Ok(t)
}

/// Basis of `Hig(A) = im τ`.
pub fn higman_basis<F: Field>(f: &CentralForm<F>) -> Result<Vec<Vec<F>>> {
    let h = f.require_symmetric()?;
    let a = &f.algebra;
    let s = RowSpace::from_vectors(a.dim(), (0..a.dim()).map(|k| tau_with(a, &h, &a.basis_vector(k))));
    Ok(s.reduced_basis())
}

/// Basis of `Rey(A) = {z ∈ Z(A) : z·r = 0 for r in the radical}`.
pub fn reynolds_basis<F: Field>(a: &Algebra<F>, radical: &[Vec<F>]) -> Vec<Vec<F>> {
    let z = center(a);
    if z.is_empty() {
        return z;
    }
    let d = a.dim();
    let mut eqs = RowSpace::new(z.len());
    for r in radical {
        let products: Vec<Vec<F>> = z.iter().map(|zm| a.mul(zm, r)).collect();
        for k in 0..d {
            eqs.insert(products.iter().map(|p| p[k].clone()).collect());
        }
    }
    let sols = eqs.null_space();
    let s = RowSpace::from_vectors(d, sols.iter().map(|c| combine(c, &z, d)));
    s.reduced_basis()
}

/// `χ_M(b_i) = tr ρ_M(b_i)`.
pub fn character_form<F: Field>(m: &AlgModule<F>, algebra: Arc<Algebra<F>>) -> CentralForm<F> {
    CentralForm {
        algebra,
        coords: m.action.iter().map(Matrix::trace).collect(),
    }
}

/// Right projective modules `e_U A` (as left `A^op`-modules) and their simple tops.
pub fn right_projectives_and_simples<F: Field>(
    a: &Algebra<F>,
    idems: &IdempotentSet<F>,
    radical: &[Vec<F>],
) -> Result<(Vec<AlgModule<F>>, Vec<AlgModule<F>>)> {
    let reg = AlgModule::right_regular(a);
    let mut projectives = Vec::new();
    let mut simples = Vec::new();
    for e in idems.representatives() {
        let span = RowSpace::from_vectors(a.dim(), (0..a.dim()).map(|k| a.mul_basis_right(e, k)));
        let basis = span.reduced_basis();
        let p = reg.restrict(&basis, None)?;
        let coords = SpanCoords::new(&basis).expect("independent");
        // e·rad inside e A, in coordinates of the chosen basis
        let erad = RowSpace::from_vectors(basis.len(), radical.iter().map(|r| coords.coords(&a.mul(e, r))));
        let top = p.quotient(&erad.reduced_basis())?;
        projectives.push(p);
        simples.push(top);
    }
    Ok((projectives, simples))
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealReport<F: Field> {
    pub dim_center: usize,
    pub dim_reynolds: usize,
    pub dim_higman: usize,
    pub center: Vec<Vec<F>>,
    pub reynolds: Vec<Vec<F>>,
    pub higman: Vec<Vec<F>>,
    pub simple_characters: Vec<Vec<F>>,
    pub projective_characters: Vec<Vec<F>>,
    pub cartan: Vec<Vec<usize>>,
    pub cartan_rank: usize,
    pub semisimple: bool,
    pub chain_holds: bool,
    pub zeta_higman_is_projective_span: bool,
    pub zeta_reynolds_is_character_span: bool,
    pub projective_span_equals_character_span: bool,
    pub higman_dim_equals_cartan_rank: bool,
}

fn span_of_forms<F: Field>(d: usize, forms: impl IntoIterator<Item = Vec<F>>) -> RowSpace<F> {
    RowSpace::from_vectors(d, forms)
}

/// The ideal chain `Z ⊃ Rey ⊃ Hig` and its images under `ζ`.
pub fn ideal_report<F: Field>(
    f: &CentralForm<F>,
    simples: &[AlgModule<F>],
    projectives: &[AlgModule<F>],
) -> Result<IdealReport<F>> {
    let a = f.algebra.clone();
    let d = a.dim();
    f.require_symmetric()?;
    let rad = radical_char0(&a)?;
    let z = center(&a);
    let rey = reynolds_basis(&a, &rad);
    let hig = higman_basis(f)?;

    let zs = RowSpace::from_vectors(d, z.iter().cloned());
    let reys = RowSpace::from_vectors(d, rey.iter().cloned());
    let higs = RowSpace::from_vectors(d, hig.iter().cloned());
    let chain_holds = zs.contains_space(&reys) && reys.contains_space(&higs);

    let simple_chars: Vec<Vec<F>> = simples.iter().map(|m| character_form(m, a.clone()).coords).collect();
    let proj_chars: Vec<Vec<F>> = projectives.iter().map(|m| character_form(m, a.clone()).coords).collect();
    let r_span = span_of_forms(d, simple_chars.iter().cloned());
    let i_span = span_of_forms(d, proj_chars.iter().cloned());
    let zeta_hig = span_of_forms(d, hig.iter().map(|h| f.twisted(h).coords));
    let zeta_rey = span_of_forms(d, rey.iter().map(|r| f.twisted(r).coords));

    let idems = primitive_idempotents(&a)?;
    let cartan = cartan_matrix(&a, &idems)?;
    let cartan_rank = Matrix::<F>::from_fn(cartan.len(), cartan.len(), |i, j| F::from_i64(cartan[i][j] as i64)).rank();

    Ok(IdealReport {
        dim_center: z.len(),
        dim_reynolds: rey.len(),
        dim_higman: hig.len(),
        higman_dim_equals_cartan_rank: hig.len() == cartan_rank,
        semisimple: rad.is_empty(),
        chain_holds,
        zeta_higman_is_projective_span: zeta_hig.same_space(&i_span),
        zeta_reynolds_is_character_span: zeta_rey.same_space(&r_span),
        projective_span_equals_character_span: i_span.same_space(&r_span),
        center: z,
        reynolds: rey,
        higman: hig,
        simple_characters: simple_chars,
        projective_characters: proj_chars,
        cartan,
        cartan_rank,
    })
}

/// [`ideal_report`] with simples and projectives computed from idempotents.
pub fn ideal_report_auto<F: Field>(f: &CentralForm<F>) -> Result<IdealReport<F>> {
    let a = &f.algebra;
    let rad = radical_char0(a)?;
    let idems = primitive_idempotents(a)?;
    let (projectives, simples) = right_projectives_and_simples(a, &idems, &rad)?;
    ideal_report(f, &simples, &projectives)
}

/// Trace functional on `End(P_U)` for one indecomposable projective.
#[derive(Clone, Debug)]
pub struct ProjectiveTrace<F: Field> {
    pub label: String,
    pub module: AlgModule<F>,
    pub hom_basis: Vec<Matrix<F>>,
    /// `t(h_k)` for each hom basis element.
    pub values: Vec<F>,
}

impl<F: Field> ProjectiveTrace<F> {
    pub fn eval(&self, g: &Matrix<F>) -> Result<F> {
        let flat: Vec<Vec<F>> = self.hom_basis.iter().map(|h| h.entries().to_vec()).collect();
        let coords = SpanCoords::new(&flat)
            .and_then(|c| c.coords_checked(g.entries()))
            .ok_or_else(|| Error::Invalid(format!("not an endomorphism of {}", self.label)))?;
        Ok(dot(&coords, &self.values))
    }
}

/// A family of traces on the indecomposable projectives.
#[derive(Clone, Debug)]
pub struct TraceAssignment<F: Field> {
    pub traces: Vec<ProjectiveTrace<F>>,
}

/// One summand `P_U → P → P_U` of a projective in a chosen decomposition.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub label: String,
    pub embed: Matrix<F>,
    pub project: Matrix<F>,
}

impl<F: Field> TraceAssignment<F> {
    pub fn get(&self, label: &str) -> Option<&ProjectiveTrace<F>> {
        self.traces.iter().find(|t| t.label == label)
    }

    /// Traces `t_{e_U A}(g) = ε(g(e_U))` induced by a symmetric form.
    pub fn from_symmetric_form(f: &CentralForm<F>, idems: &IdempotentSet<F>) -> Result<Self> {
        f.require_symmetric()?;
        let a = &f.algebra;
        let reg = AlgModule::right_regular(a);
        let mut traces = Vec::new();
        for (label, e) in idems.labels.iter().zip(idems.representatives()) {
            let basis = RowSpace::from_vectors(a.dim(), (0..a.dim()).map(|k| a.mul_basis_right(e, k))).reduced_basis();
            let module = reg.restrict(&basis, None)?;
            let coords = SpanCoords::new(&basis).expect("independent");
            let e_local = coords.coords(e);
            let hb = hom_basis(&module, &module)?;
            let values = hb
                .iter()
                .map(|g| f.eval(&combine(&g.mul_vec(&e_local), &basis, a.dim())))
                .collect();
            traces.push(ProjectiveTrace {
                label: label.clone(),
                module,
                hom_basis: hb,
                values,
            });
        }
        Ok(TraceAssignment { traces })
    }
}

/// `t_P(f) = Σ t_{P_U}(p_{Uα} ∘ f ∘ j_{Uα})` over a decomposition of `P`.
pub fn extend_trace<F: Field>(t: &TraceAssignment<F>, summands: &[Summand<F>], f: &Matrix<F>) -> Result<F> {
    let n = f.rows();
    let mut total = Matrix::zeros(n, n);
    for (i, s) in summands.iter().enumerate() {
        for (j, r) in summands.iter().enumerate() {
            let pj = s.project.try_mul(&r.embed)?;
            let ok = if i == j { pj.is_identity() } else { pj.is_zero() };
            if !ok {
                return Err(Error::NotProjective("embeddings and projections are not a decomposition".into()));
            }
        }
        total = total.add(&s.embed.try_mul(&s.project)?);
    }
    if !total.is_identity() {
        return Err(Error::NotProjective("summands do not exhaust the module".into()));
    }
    let mut acc = F::zero();
    for s in summands {
        let trace = t
            .get(&s.label)
            .ok_or_else(|| Error::NotProjective(format!("no trace for {}", s.label)))?;
        acc = acc.add_ref(&trace.eval(&s.project.try_mul(f)?.try_mul(&s.embed)?)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::fixtures;
    use crate::exact::{q, Rational};

    fn kx2_form(e1: i64, ex: i64) -> CentralForm<Rational> {
        CentralForm::new(Arc::new(fixtures::truncated_polynomial()), vec![q(e1, 1), q(ex, 1)]).unwrap()
    }

    fn m2_trace() -> CentralForm<Rational> {
        let a = Arc::new(fixtures::matrix_algebra::<Rational>(2));
        let coords = vec![q(1, 1), q(0, 1), q(0, 1), q(1, 1)];
        CentralForm::new(a, coords).unwrap()
    }

    #[test]
    fn form_checks() {
        let c = kx2_form(0, 1).check();
        assert!(c.central && c.nondegenerate);
        let c = kx2_form(1, 0).check();
        assert!(c.central && !c.nondegenerate);
        assert_eq!(c.gram, Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]));
        let c = m2_trace().check();
        assert!(c.central && c.nondegenerate);
    }

    #[test]
    fn copairings() {
        let g = copairing(&kx2_form(0, 1)).unwrap();
        assert_eq!(g.matrix, Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        let g = copairing(&m2_trace()).unwrap();
        // γ = Σ E_ij ⊗ E_ji: H pairs E_ij with E_ji
        assert_eq!(g.matrix.get(1, 2), &q(1, 1));
        assert_eq!(g.matrix.get(0, 0), &q(1, 1));
        assert!(g.is_symmetric());
        assert!(matches!(copairing(&kx2_form(1, 0)), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn tau_values() {
        let f = kx2_form(0, 1);
        assert_eq!(tau(&f, &[q(1, 1), q(0, 1)]).unwrap(), vec![q(0, 1), q(2, 1)]);
        assert_eq!(tau(&f, &[q(0, 1), q(1, 1)]).unwrap(), vec![q(0, 1), q(0, 1)]);
        let m = m2_trace();
        assert_eq!(tau(&m, &m.algebra.basis_vector(0)).unwrap(), m.algebra.unit.clone());
    }

    #[test]
    fn higman_and_reynolds() {
        let f = kx2_form(0, 1);
        let x = vec![vec![q(0, 1), q(1, 1)]];
        assert_eq!(higman_basis(&f).unwrap(), x);
        let rad = radical_char0(&f.algebra).unwrap();
        assert_eq!(reynolds_basis(&f.algebra, &rad), x);
        let m = m2_trace();
        assert_eq!(higman_basis(&m).unwrap().len(), 1);
        assert_eq!(reynolds_basis(&m.algebra, &[]).len(), 1);
        let t2 = fixtures::upper_triangular::<Rational>();
        let rad = radical_char0(&t2).unwrap();
        assert!(reynolds_basis(&t2, &rad).is_empty());
    }

    #[test]
    fn characters() {
        let a = Arc::new(fixtures::truncated_polynomial::<Rational>());
        let chi = character_form(&AlgModule::regular(a.clone()), a.clone());
        assert_eq!(chi.coords, vec![q(2, 1), q(0, 1)]);
        assert!(chi.check().central);
        let m = Arc::new(fixtures::matrix_algebra::<Rational>(2));
        let nat = AlgModule::regular(m.clone())
            .restrict(&[m.basis_vector(0), m.basis_vector(2)], None)
            .unwrap();
        let chi = character_form(&nat, m);
        assert_eq!(chi.coords[0], q(1, 1));
        assert_eq!(chi.coords[1], q(0, 1));
    }

    #[test]
    fn truncated_polynomial_report() {
        let r = ideal_report_auto(&kx2_form(0, 1)).unwrap();
        assert_eq!((r.dim_center, r.dim_reynolds, r.dim_higman), (2, 1, 1));
        assert!(!r.semisimple);
        assert!(r.projective_span_equals_character_span);
        assert!(r.chain_holds && r.zeta_higman_is_projective_span && r.zeta_reynolds_is_character_span);
        assert_eq!(r.cartan_rank, 1);
        // χ_A = 2 χ_k
        assert_eq!(r.projective_characters, vec![vec![q(2, 1), q(0, 1)]]);
        assert_eq!(r.simple_characters, vec![vec![q(1, 1), q(0, 1)]]);
    }

    #[test]
    fn matrix_algebra_report() {
        let r = ideal_report_auto(&m2_trace()).unwrap();
        assert_eq!((r.dim_center, r.dim_reynolds, r.dim_higman), (1, 1, 1));
        assert!(r.semisimple);
    }

    #[test]
    fn triangular_algebra_has_no_symmetric_form() {
        // centrality forces ε(E12) = 0; then b_{E12} pairs to zero with everything
        let t2 = Arc::new(fixtures::upper_triangular::<Rational>());
        for (x, y) in [(1, 1), (1, 2), (3, -1)] {
            let f = CentralForm::new(t2.clone(), vec![q(x, 1), q(0, 1), q(y, 1)]).unwrap();
            let c = f.check();
            assert!(c.central && !c.nondegenerate);
            assert!(ideal_report_auto(&f).is_err());
        }
    }

    #[test]
    fn extended_traces() {
        let f = kx2_form(0, 1);
        let idems = primitive_idempotents(&f.algebra).unwrap();
        let t = TraceAssignment::from_symmetric_form(&f, &idems).unwrap();
        let q_label = t.traces[0].label.clone();
        let id2 = Matrix::<Rational>::identity(2);
        let zero2 = Matrix::<Rational>::zeros(2, 2);
        let j1 = id2.vstack(&zero2).unwrap();
        let j2 = zero2.vstack(&id2).unwrap();
        let summands = vec![
            Summand { label: q_label.clone(), embed: j1.clone(), project: j1.transpose() },
            Summand { label: q_label.clone(), embed: j2.clone(), project: j2.transpose() },
        ];
        // t on End(Q) evaluated at the identity equals ε(1) = 0 here; use X instead
        let x_endo = t.traces[0].module.action[1].clone();
        let tq_x = t.traces[0].eval(&x_endo).unwrap();
        assert_eq!(tq_x, q(1, 1));
        let blk = Matrix::block_diag(&[&x_endo, &x_endo]);
        assert_eq!(extend_trace(&t, &summands, &blk).unwrap(), q(2, 1));
        let swap = Matrix::from_fn(4, 4, |r, c| if (r + 2) % 4 == c { q(1, 1) } else { q(0, 1) });
        assert_eq!(extend_trace(&t, &summands, &swap).unwrap(), q(0, 1));
    }

    #[test]
    fn twisted_form_gives_same_higman_span() {
        let f = kx2_form(0, 1);
        // z = 1 + X is central and invertible
        let g = f.twisted(&[q(1, 1), q(1, 1)]);
        let a = RowSpace::from_vectors(2, higman_basis(&f).unwrap());
        let b = RowSpace::from_vectors(2, higman_basis(&g).unwrap());
        assert!(a.same_space(&b));
    }
}
