//! Commutative rings by structure constants: Grothendieck rings and Condition P.

use std::collections::BTreeMap;

use crate::assoc::{radical_char0, Algebra};
use crate::error::{Error, Result};
use crate::exact::{Field, FieldSpec, Scalar};

/// A projective class, either a basis label or an explicit combination.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveClass<F: Field> {
    pub label: String,
    pub coords: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommRing<F: Field> {
    pub ring: Algebra<F>,
    pub projectives: Vec<ProjectiveClass<F>>,
    pub dual: Option<BTreeMap<String, String>>,
}

impl<F: Field> CommRing<F> {
    pub fn new(
        ring: Algebra<F>,
        projectives: Vec<ProjectiveClass<F>>,
        dual: Option<BTreeMap<String, String>>,
    ) -> Result<Self> {
        if projectives.iter().any(|p| p.coords.len() != ring.dim()) {
            return Err(Error::DimensionMismatch("projective class length".into()));
        }
        let report = ring.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(format!("ring is not associative/unital: {}", report.violations.join("; "))));
        }
        if !ring.is_commutative() {
            return Err(Error::Invalid("ring is not commutative".into()));
        }
        Ok(CommRing {
            ring,
            projectives,
            dual,
        })
    }

    /// Coordinates of a basis label.
    pub fn label(&self, name: &str) -> Option<Vec<F>> {
        let i = self.ring.basis_names.iter().position(|n| n == name)?;
        Some(self.ring.basis_vector(i))
    }

    /// A projective class named by a basis label.
    pub fn projective_label(&self, name: &str) -> Result<ProjectiveClass<F>> {
        let coords = self
            .label(name)
            .ok_or_else(|| Error::Invalid(format!("unknown label {name}")))?;
        Ok(ProjectiveClass {
            label: name.into(),
            coords,
        })
    }
}

/// `x` is nilpotent iff its multiplication matrix is; `x^dim = 0` decides it.
pub fn ring_element_power_nilpotent<F: Field>(r: &CommRing<F>, x: &[F]) -> bool {
    r.ring.left_mult_matrix(x).is_nilpotent()
}

/// The first declared projective class that is not nilpotent.
pub fn condition_p<F: Field>(r: &CommRing<F>) -> Option<&ProjectiveClass<F>> {
    r.projectives
        .iter()
        .find(|p| !ring_element_power_nilpotent(r, &p.coords))
}

/// Trace-form criterion for semisimplicity (characteristic zero).
pub fn ring_semisimple<F: Field>(r: &CommRing<F>) -> Result<bool> {
    r.ring.require_char0("semisimplicity via the trace form")?;
    let g = r.ring.trace_form_gram();
    Ok(g.rank() == g.rows())
}

/// A nonzero nilpotent element, if one exists (characteristic zero).
pub fn nilpotent_witness<F: Field>(r: &CommRing<F>) -> Result<Option<Vec<F>>> {
    Ok(radical_char0(&r.ring)?.into_iter().next())
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `Gr_ℚ(SF)` on `[1], [Π1], [T], [ΠT]` with projective classes of `Λ, ΠΛ, T, ΠT`.
pub fn sf_grothendieck<F: Field>(n: u32) -> CommRing<F> {
    let (one, pi1, t, pit) = (0, 1, 2, 3);
    let c = F::from_i64(1i64 << (2 * n - 1));
    let u = F::one();
    let mut e = vec![
        (one, one, one, u.clone()),
        (one, pi1, pi1, u.clone()),
        (one, t, t, u.clone()),
        (one, pit, pit, u.clone()),
        (pi1, pi1, one, u.clone()),
        (pi1, t, pit, u.clone()),
        (pi1, pit, t, u.clone()),
    ];
    for (x, y) in [(t, t), (t, pit), (pit, pit)] {
        e.push((x, y, one, c.clone()));
        e.push((x, y, pi1, c.clone()));
    }
    let sym: Vec<_> = e.iter().filter(|(i, j, _, _)| i != j).map(|(i, j, k, v)| (*j, *i, *k, v.clone())).collect();
    e.extend(sym);
    let ring = Algebra::new(
        F::one().field_spec(),
        names(&["1", "Pi1", "T", "PiT"]),
        e,
        vec![u.clone(), F::zero(), F::zero(), F::zero()],
        None,
    )
    .expect("well-formed");
    // composition factors of Λ: 2^{2N−1} copies each of 1 and Π1
    let lam = vec![c.clone(), c.clone(), F::zero(), F::zero()];
    let projectives = vec![
        ProjectiveClass { label: "P1".into(), coords: lam.clone() },
        ProjectiveClass { label: "PPi1".into(), coords: lam },
        ProjectiveClass { label: "T".into(), coords: ring.basis_vector(t) },
        ProjectiveClass { label: "PiT".into(), coords: ring.basis_vector(pit) },
    ];
    let dual = ["1", "Pi1", "T", "PiT"].iter().map(|s| (s.to_string(), s.to_string())).collect();
    CommRing::new(ring, projectives, Some(dual)).expect("valid ring")
}

/// Grothendieck data of `k[ℤ/p]` over `𝔽_p`: one simple `[k]`, projective `p·[k] = 0`.
pub fn cyclic_p_grothendieck(p: u64) -> Result<CommRing<Scalar>> {
    let spec = FieldSpec::prime(p)?;
    let one = Scalar::Mod { value: 1, p };
    let ring = Algebra::new(spec, names(&["k"]), vec![(0, 0, 0, one.clone())], vec![one], None)?;
    let proj = ProjectiveClass {
        label: "P".into(),
        coords: vec![Scalar::modp(p as i64, p)],
    };
    CommRing::new(ring, vec![proj], None)
}

/// The group ring `ℚ[ℤ/2]` with every class declared projective.
pub fn group_ring_z2<F: Field>() -> CommRing<F> {
    let u = F::one();
    let ring = Algebra::new(
        F::one().field_spec(),
        names(&["e", "g"]),
        vec![(0, 0, 0, u.clone()), (0, 1, 1, u.clone()), (1, 0, 1, u.clone()), (1, 1, 0, u.clone())],
        vec![u.clone(), F::zero()],
        None,
    )
    .expect("well-formed");
    let projectives = vec![ProjectiveClass { label: "e".into(), coords: ring.basis_vector(0) }];
    CommRing::new(ring, projectives, None).expect("valid ring")
}

/// `ℚ[X]/⟨X²⟩` as a ring, unit declared projective.
pub fn dual_numbers<F: Field>() -> CommRing<F> {
    let ring = crate::assoc::fixtures::truncated_polynomial::<F>();
    let projectives = vec![ProjectiveClass { label: "1".into(), coords: ring.basis_vector(0) }];
    CommRing::new(ring, projectives, None).expect("valid ring")
}
