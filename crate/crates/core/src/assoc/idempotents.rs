use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{combine, Field, Matrix, RowSpace};

use super::algebra::radical_char0;
use super::Algebra;

/// A complete set of orthogonal primitive idempotents grouped by simple module.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentSet<F: Field> {
    /// All idempotents; they sum to one.
    pub elements: Vec<Vec<F>>,
    /// Class index of each element (isomorphism class of `A e`).
    pub class_of: Vec<usize>,
    /// One label per class, in order of first appearance.
    pub labels: Vec<String>,
}

impl<F: Field> IdempotentSet<F> {
    /// The first idempotent of every class.
    pub fn representatives(&self) -> Vec<&Vec<F>> {
        (0..self.labels.len())
            .map(|c| {
                let k = self.class_of.iter().position(|&x| x == c).expect("nonempty class");
                &self.elements[k]
            })
            .collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        (0..self.labels.len())
            .map(|c| self.class_of.iter().filter(|&&x| x == c).count())
            .collect()
    }

    /// Sum of all idempotents equals the unit.
    pub fn is_complete(&self, a: &Algebra<F>) -> bool {
        combine(&vec![F::one(); self.elements.len()], &self.elements, a.dim()) == a.unit
    }
}

/// Arithmetic in `A / rad` on canonical representatives.
struct Quotient<'a, F: Field> {
    a: &'a Algebra<F>,
    rad: RowSpace<F>,
}

impl<F: Field> Quotient<'_, F> {
    fn reduce(&self, v: Vec<F>) -> Vec<F> {
        self.rad.reduce(v)
    }

    fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.reduce(self.a.mul(x, y))
    }

    fn is_zero(&self, v: &[F]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    /// Reduced echelon basis of `x Ā y`.
    fn sandwich(&self, x: &[F], y: &[F]) -> Vec<Vec<F>> {
        let mut s = RowSpace::new(self.a.dim());
        for k in 0..self.a.dim() {
            let xb = self.a.mul_basis_right(x, k);
            s.insert(self.reduce(self.a.mul(&xb, y)));
        }
        s.reduced_basis()
    }

    /// Minimal polynomial of `x` inside the corner algebra with unit `e`.
    fn minimal_polynomial(&self, x: &[F], e: &[F]) -> Vec<F> {
        let d = self.a.dim();
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            let m = Matrix::from_columns(&powers, d).expect("shape");
            if let Some(c) = m.solve(&next).expect("shape") {
                // x^k = Σ c_i x^i  =>  t^k − Σ c_i t^i
                let mut poly: Vec<F> = c.into_iter().map(|v| -v).collect();
                poly.push(F::one());
                return poly;
            }
            powers.push(next);
        }
    }

    /// Splits `e` into primitive idempotents of `Ā`.
    fn split(&self, e: Vec<F>, out: &mut Vec<Vec<F>>) -> Result<()> {
        let corner = self.sandwich(&e, &e);
        if corner.len() <= 1 {
            out.push(e);
            return Ok(());
        }
        let line = RowSpace::from_vectors(self.a.dim(), vec![e.clone()]);
        let mut candidates: Vec<Vec<F>> = corner.clone();
        for i in 0..corner.len() {
            for j in i + 1..corner.len() {
                let sum: Vec<F> = corner[i].iter().zip(&corner[j]).map(|(x, y)| x.add_ref(y)).collect();
                let diff: Vec<F> = corner[i].iter().zip(&corner[j]).map(|(x, y)| x.sub_ref(y)).collect();
                candidates.push(sum);
                candidates.push(diff);
            }
        }
        let mut first_poly = None;
        for x in candidates.iter().filter(|x| !line.contains(x)) {
            let poly = self.minimal_polynomial(x, &e);
            let roots = F::roots(&poly)?;
            if let Some(lambda) = roots.first() {
                let u: Vec<F> = x
                    .iter()
                    .zip(&e)
                    .map(|(xi, ei)| xi.sub_ref(&lambda.mul_ref(ei)))
                    .collect();
                let g = self.left_identity_of_right_ideal(&u, &corner)?;
                let rest: Vec<F> = e.iter().zip(&g).map(|(x, y)| x.sub_ref(y)).collect();
                self.split(g, out)?;
                return self.split(rest, out);
            }
            first_poly.get_or_insert(poly);
        }
        let poly = first_poly.unwrap_or_default();
        Err(Error::NotSplit(format!(
            "semisimple block of dimension {} has no eigenvalue in the field; minimal polynomial coefficients (constant first): [{}]",
            corner.len(),
            poly.iter().map(Field::render).collect::<Vec<_>>().join(", ")
        )))
    }

    /// The idempotent generator `g` of the right ideal `u·(eĀe)`.
    fn left_identity_of_right_ideal(&self, u: &[F], corner: &[Vec<F>]) -> Result<Vec<F>> {
        let d = self.a.dim();
        let ideal = RowSpace::from_vectors(d, corner.iter().map(|y| self.mul(u, y))).reduced_basis();
        // g = Σ c_k i_k with g·i_l = i_l for every l
        let r = ideal.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let products: Vec<Vec<Vec<F>>> = ideal
            .iter()
            .map(|ik| ideal.iter().map(|il| self.mul(ik, il)).collect())
            .collect();
        for (l, il) in ideal.iter().enumerate() {
            for coord in 0..d {
                rows.push((0..r).map(|k| products[k][l][coord].clone()).collect::<Vec<F>>());
                rhs.push(il[coord].clone());
            }
        }
        let m = Matrix::from_rows(rows)?;
        let c = m
            .solve(&rhs)?
            .ok_or_else(|| Error::NotSplit("right ideal without an idempotent generator".into()))?;
        Ok(combine(&c, &ideal, d))
    }
}

fn newton_lift<F: Field>(a: &Algebra<F>, mut x: Vec<F>) -> Result<Vec<F>> {
    for _ in 0..64 {
        let x2 = a.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = a.mul(&x2, &x);
        x = x2
            .iter()
            .zip(&x3)
            .map(|(p, q)| F::from_i64(3).mul_ref(p).sub_ref(&F::from_i64(2).mul_ref(q)))
            .collect();
    }
    Err(Error::Invalid("idempotent lifting did not stabilise".into()))
}

/// Primitive idempotents given a basis of the radical (any characteristic).
pub fn primitive_idempotents_with_radical<F: Field>(a: &Algebra<F>, radical: &[Vec<F>]) -> Result<IdempotentSet<F>> {
    let q = Quotient {
        a,
        rad: RowSpace::from_vectors(a.dim(), radical.iter().cloned()),
    };
    let mut bars = Vec::new();
    q.split(q.reduce(a.unit.clone()), &mut bars)?;

    // classes: ē_i ~ ē_j iff ē_i Ā ē_j ≠ 0
    let mut class_of: Vec<usize> = Vec::with_capacity(bars.len());
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..bars.len() {
        let found = reps.iter().position(|&r| {
            (0..a.dim()).any(|k| !q.is_zero(&q.mul(&a.mul_basis_right(&bars[r], k), &bars[i])))
        });
        match found {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(i);
            }
        }
    }

    // lift sequentially inside f A f with f = 1 − Σ previous lifts
    let mut f = a.unit.clone();
    let mut elements = Vec::with_capacity(bars.len());
    for (i, bar) in bars.iter().enumerate() {
        let e = if i + 1 == bars.len() {
            f.clone()
        } else {
            let x = a.mul(&a.mul(&f, bar), &f);
            newton_lift(a, x)?
        };
        f = f.iter().zip(&e).map(|(x, y)| x.sub_ref(y)).collect();
        elements.push(e);
    }
    let labels = (0..reps.len()).map(|c| format!("U{c}")).collect();
    Ok(IdempotentSet {
        elements,
        class_of,
        labels,
    })
}

/// Complete orthogonal primitive idempotents over a field of characteristic zero.
pub fn primitive_idempotents<F: Field>(a: &Algebra<F>) -> Result<IdempotentSet<F>> {
    let rad = radical_char0(a)?;
    primitive_idempotents_with_radical(a, &rad)
}

/// `C_{UV} = dim e_U A e_V` over class representatives.
pub fn cartan_matrix<F: Field>(a: &Algebra<F>, idems: &IdempotentSet<F>) -> Result<Vec<Vec<usize>>> {
    if !idems.is_complete(a) {
        return Err(Error::IncompleteIdempotents("idempotents do not sum to the unit".into()));
    }
    let reps = idems.representatives();
    Ok(reps
        .iter()
        .map(|eu| reps.iter().map(|ev| a.sandwich_span(eu, ev).rank()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::fixtures;
    use crate::exact::{q, Rational};

    fn check_set(a: &Algebra<Rational>, s: &IdempotentSet<Rational>) {
        assert!(s.is_complete(a));
        for (i, e) in s.elements.iter().enumerate() {
            assert_eq!(&a.mul(e, e), e);
            for (j, f) in s.elements.iter().enumerate() {
                if i != j {
                    assert!(a.mul(e, f).iter().all(Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn split_product() {
        let a = fixtures::split_product::<Rational>(2);
        let s = primitive_idempotents(&a).unwrap();
        check_set(&a, &s);
        assert_eq!(s.elements, vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]);
        assert_eq!(cartan_matrix(&a, &s).unwrap(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn upper_triangular() {
        let a = fixtures::upper_triangular::<Rational>();
        let s = primitive_idempotents(&a).unwrap();
        check_set(&a, &s);
        assert_eq!(s.elements, vec![a.basis_vector(0), a.basis_vector(2)]);
        assert_eq!(cartan_matrix(&a, &s).unwrap(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn local_algebra() {
        let a = fixtures::truncated_polynomial::<Rational>();
        let s = primitive_idempotents(&a).unwrap();
        assert_eq!(s.elements, vec![a.unit.clone()]);
        assert_eq!(cartan_matrix(&a, &s).unwrap(), vec![vec![2]]);
    }

    #[test]
    fn matrix_algebra_has_one_class() {
        let a = fixtures::matrix_algebra::<Rational>(3);
        let s = primitive_idempotents(&a).unwrap();
        check_set(&a, &s);
        assert_eq!(s.elements.len(), 3);
        assert_eq!(s.labels.len(), 1);
        assert_eq!(cartan_matrix(&a, &s).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn non_split_quotient_is_reported() {
        let a = fixtures::gaussian_field_over_q();
        assert!(matches!(primitive_idempotents(&a), Err(Error::NotSplit(_))));
    }

    #[test]
    fn incomplete_set_is_rejected() {
        let a = fixtures::split_product::<Rational>(2);
        let s = IdempotentSet {
            elements: vec![vec![q(1, 1), q(0, 1)]],
            class_of: vec![0],
            labels: vec!["U0".into()],
        };
        assert!(matches!(cartan_matrix(&a, &s), Err(Error::IncompleteIdempotents(_))));
    }

    #[test]
    fn prime_field_group_algebra_is_local() {
        let a = fixtures::group_algebra_cyclic_mod_p(3);
        // radical = augmentation ideal, spanned by g^k − 1
        let one = a.unit.clone();
        let rad: Vec<_> = (1..3)
            .map(|k| a.basis_vector(k).into_iter().zip(&one).map(|(x, y)| x - y.clone()).collect())
            .collect();
        let s = primitive_idempotents_with_radical(&a, &rad).unwrap();
        assert_eq!(s.elements, vec![one]);
        assert_eq!(cartan_matrix(&a, &s).unwrap(), vec![vec![3]]);
    }
}
