use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

/// `M_{UV}^W` keyed by `(U, V)`, then `W`.
pub type Fusion<F> = BTreeMap<(String, String), BTreeMap<String, F>>;

/// An expected Hopf-link value `hopf_link_value(A, X) = value`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfExpectation<F: Field> {
    pub a: String,
    pub x: String,
    pub value: F,
}

/// Modular data of a finite tensor category as used by the identity auditor.
///
/// Rows and columns follow the order of `irr` (for `Btilde` rows, `cartan`)
/// and of `j` (for `Btilde` columns, `Stilde`, `Ctilde`).
#[derive(Clone, Debug, PartialEq)]
pub struct ModularDataSet<F: Field> {
    pub irr: Vec<String>,
    pub dual: BTreeMap<String, String>,
    pub cartan: Vec<Vec<i64>>,
    pub j: Vec<String>,
    pub irrproj: Vec<String>,
    pub btilde: Matrix<F>,
    pub stilde: Matrix<F>,
    pub ctilde: Matrix<F>,
    pub b: BTreeMap<String, F>,
    pub fusion: Fusion<F>,
    pub t0: F,
    pub hopf_link_expected: Vec<HopfExpectation<F>>,
}

impl<F: Field> ModularDataSet<F> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        irr: Vec<String>,
        dual: BTreeMap<String, String>,
        cartan: Vec<Vec<i64>>,
        j: Vec<String>,
        irrproj: Vec<String>,
        btilde: Matrix<F>,
        stilde: Matrix<F>,
        ctilde: Matrix<F>,
        b: BTreeMap<String, F>,
        fusion: Fusion<F>,
        t0: F,
    ) -> Result<Self> {
        let d = ModularDataSet {
            irr,
            dual,
            cartan,
            j,
            irrproj,
            btilde,
            stilde,
            ctilde,
            b,
            fusion,
            t0,
            hopf_link_expected: Vec::new(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn with_hopf_expectation(mut self, a: &str, x: &str, value: F) -> Result<Self> {
        self.j_index(a)?;
        self.irr_index(x)?;
        self.hopf_link_expected.push(HopfExpectation {
            a: a.into(),
            x: x.into(),
            value,
        });
        Ok(self)
    }

    pub fn irr_index(&self, label: &str) -> Result<usize> {
        self.irr
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("unknown simple {label}")))
    }

    pub fn j_index(&self, label: &str) -> Result<usize> {
        self.j
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("{label} is not in J")))
    }

    /// The tensor unit: the first simple in `irr`.
    pub fn unit(&self) -> &str {
        &self.irr[0]
    }

    /// `Ĉ` as a field-valued matrix over `Irr × Irr`.
    pub fn cartan_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.irr.len(), self.irr.len(), |r, c| F::from_i64(self.cartan[r][c]))
    }

    /// `M_{UV}^W`; absent `W` reads as zero, an absent pair `(U, V)` is an error.
    pub fn multiplicity(&self, u: &str, v: &str, w: &str) -> Result<F> {
        let row = self
            .fusion
            .get(&(u.to_string(), v.to_string()))
            .ok_or_else(|| Error::Invalid(format!("missing fusion data for ({u}, {v})")))?;
        Ok(row.get(w).cloned().unwrap_or_else(F::zero))
    }

    /// Whether every fusion entry is a nonnegative integer.
    pub fn fusion_is_integral(&self) -> bool {
        self.fusion.values().flat_map(|m| m.values()).all(|x| {
            x.to_rational()
                .is_some_and(|q| q.is_integer() && q >= num_rational::BigRational::from_integer(0.into()))
        })
    }

    pub fn validate(&self) -> Result<()> {
        let (ni, nj) = (self.irr.len(), self.j.len());
        let irr: BTreeSet<&String> = self.irr.iter().collect();
        if ni == 0 || irr.len() != ni {
            return Err(Error::Invalid("irr must be a nonempty list of distinct labels".into()));
        }
        let js: BTreeSet<&String> = self.j.iter().collect();
        if js.len() != nj || !js.is_subset(&irr) {
            return Err(Error::Invalid("J must be distinct labels from irr".into()));
        }
        if !self.irrproj.iter().all(|l| js.contains(l)) {
            return Err(Error::Invalid("irrproj must be a subset of J".into()));
        }
        let shape = |m: &Matrix<F>, r: usize, c: usize, name: &str| {
            if m.rows() != r || m.cols() != c {
                Err(Error::DimensionMismatch(format!("{name} must be {r}x{c}, got {}x{}", m.rows(), m.cols())))
            } else {
                Ok(())
            }
        };
        shape(&self.btilde, ni, nj, "Btilde")?;
        shape(&self.stilde, nj, nj, "Stilde")?;
        shape(&self.ctilde, nj, nj, "Ctilde")?;
        if self.cartan.len() != ni || self.cartan.iter().any(|r| r.len() != ni) {
            return Err(Error::DimensionMismatch(format!("cartan must be {ni}x{ni}")));
        }
        for l in &self.irr {
            let d = self
                .dual
                .get(l)
                .ok_or_else(|| Error::Invalid(format!("dual missing for {l}")))?;
            if self.dual.get(d) != Some(l) {
                return Err(Error::Invalid(format!("dual is not an involution at {l}")));
            }
        }
        for (r, a) in self.j.iter().enumerate() {
            for (c, b) in self.j.iter().enumerate() {
                let expected = if &self.dual[a] == b { F::one() } else { F::zero() };
                if self.ctilde.get(r, c) != &expected {
                    return Err(Error::Invalid("Ctilde does not match the duality on J".into()));
                }
            }
        }
        let keys: BTreeSet<&String> = self.b.keys().collect();
        let proj: BTreeSet<&String> = self.irrproj.iter().collect();
        if keys != proj {
            return Err(Error::Invalid("b must be given exactly on irrproj".into()));
        }
        if self.b.values().any(|x| x.is_zero()) {
            return Err(Error::Invalid("b values must be nonzero".into()));
        }
        for ((u, v), ws) in &self.fusion {
            if !irr.contains(u) || !irr.contains(v) || ws.keys().any(|w| !irr.contains(w)) {
                return Err(Error::Invalid(format!("fusion entry ({u}, {v}) uses unknown labels")));
            }
        }
        Ok(())
    }
}
