use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

use super::dataset::ModularDataSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub at: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub verdict: Verdict,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    pub details: BTreeMap<String, Value>,
}

impl Section {
    fn new() -> Self {
        Section {
            verdict: Verdict::Pass,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    fn record(&mut self, at: &[&str], ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            self.verdict = Verdict::Fail;
            self.witnesses.push(Witness {
                at: at.iter().map(|s| s.to_string()).collect(),
                lhs: lhs(),
                rhs: rhs(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn render_matrix<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| Value::String(m.get(r, c).render())).collect()))
            .collect(),
    )
}

/// A formal combination `Σ c_A φ_A`, zero terms dropped.
fn render_combination<F: Field>(coeffs: &[F], labels: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| format!("({})phi_{l}", c.render()))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `σ(U) = Σ_B (B̃S̃)_{UB} φ_{P_B}`: rows of `B̃·S̃`.
fn sigma<F: Field>(d: &ModularDataSet<F>) -> Matrix<F> {
    &d.btilde * &d.stilde
}

fn b_of<F: Field>(d: &ModularDataSet<F>, a: &str) -> F {
    d.b.get(a).cloned().unwrap_or_else(F::zero)
}

/// `S̃·S̃ = C̃`, with the computed square attached.
pub fn s_squared_check<F: Field>(d: &ModularDataSet<F>) -> Section {
    let sq = &d.stilde * &d.stilde;
    let mut s = Section::new();
    for (r, a) in d.j.iter().enumerate() {
        for (c, b) in d.j.iter().enumerate() {
            let (l, rt) = (sq.get(r, c), d.ctilde.get(r, c));
            s.record(&[a, b], l == rt, || l.render(), || rt.render());
        }
    }
    s.details.insert("square".into(), render_matrix(&sq));
    s
}

/// `Σ_W M_{UV}^W B̃_{WX} = Σ_{Q ∈ IrrProj} b_Q (B̃S̃)_{UQ} (B̃S̃)_{VQ} (S̃C̃)_{QX}` on `Irr × Irr × J`.
pub fn verlinde_check<F: Field>(d: &ModularDataSet<F>) -> Result<Section> {
    let bs = sigma(d);
    let sc = &d.stilde * &d.ctilde;
    let proj: Vec<(usize, F)> = d
        .irrproj
        .iter()
        .map(|q| Ok((d.j_index(q)?, b_of(d, q))))
        .collect::<Result<_>>()?;
    let mut s = Section::new();
    for (ui, u) in d.irr.iter().enumerate() {
        for (vi, v) in d.irr.iter().enumerate() {
            let m: Vec<F> = d.irr.iter().map(|w| d.multiplicity(u, v, w)).collect::<Result<_>>()?;
            for (xi, x) in d.j.iter().enumerate() {
                let lhs = m
                    .iter()
                    .enumerate()
                    .fold(F::zero(), |acc, (wi, c)| acc.add_ref(&c.mul_ref(d.btilde.get(wi, xi))));
                let rhs = proj.iter().fold(F::zero(), |acc, (qi, bq)| {
                    let t = bq.mul_ref(bs.get(ui, *qi)).mul_ref(bs.get(vi, *qi)).mul_ref(sc.get(*qi, xi));
                    acc.add_ref(&t)
                });
                s.record(&[u, v, x], lhs == rhs, || lhs.render(), || rhs.render());
            }
        }
    }
    Ok(s)
}

/// The product rule `σ(U)σ(V) = Σ_W M_{UV}^W σ(W)` in the algebra
/// `φ_A φ_B = δ_{AB} [A ∈ IrrProj] b_A φ_A`.
pub fn product_rule_check<F: Field>(d: &ModularDataSet<F>) -> Result<Section> {
    let mut s = Section::new();
    for (u, v, lhs, rhs) in product_rule_terms(d)? {
        let ok = lhs == rhs;
        s.record(&[&u, &v], ok, || render_combination(&lhs, &d.j), || render_combination(&rhs, &d.j));
    }
    Ok(s)
}

type ProductTerm<F> = (String, String, Vec<F>, Vec<F>);

/// Both sides of the product rule for every pair, as coefficient vectors over `J`.
fn product_rule_terms<F: Field>(d: &ModularDataSet<F>) -> Result<Vec<ProductTerm<F>>> {
    let bs = sigma(d);
    let nj = d.j.len();
    let mut out = Vec::new();
    for (ui, u) in d.irr.iter().enumerate() {
        for (vi, v) in d.irr.iter().enumerate() {
            let lhs: Vec<F> = (0..nj)
                .map(|a| b_of(d, &d.j[a]).mul_ref(bs.get(ui, a)).mul_ref(bs.get(vi, a)))
                .collect();
            let mut rhs = vec![F::zero(); nj];
            for (wi, w) in d.irr.iter().enumerate() {
                let m = d.multiplicity(u, v, w)?;
                if m.is_zero() {
                    continue;
                }
                for (a, r) in rhs.iter_mut().enumerate() {
                    *r = r.add_ref(&m.mul_ref(bs.get(wi, a)));
                }
            }
            out.push((u.clone(), v.clone(), lhs, rhs));
        }
    }
    Ok(out)
}

/// `b_Q Σ_{B ∈ J} S̃_{AB} Ĉ_{BX} t₀` for an explicit reference `Q ∈ IrrProj`.
pub fn hopf_link_value_with_reference<F: Field>(d: &ModularDataSet<F>, a: &str, x: &str, q: &str) -> Result<F> {
    if !d.irrproj.iter().any(|p| p == q) {
        return Err(Error::Invalid(format!("{q} is not in irrproj")));
    }
    let ai = d.j_index(a)?;
    let xi = d.irr_index(x)?;
    let mut sum = F::zero();
    for (bi, b) in d.j.iter().enumerate() {
        let c = d.cartan[d.irr_index(b)?][xi];
        if c != 0 {
            sum = sum.add_ref(&d.stilde.get(ai, bi).mul_ref(&F::from_i64(c)));
        }
    }
    Ok(b_of(d, q).mul_ref(&sum).mul_ref(&d.t0))
}

/// [`hopf_link_value_with_reference`] with `Q` the first element of `irrproj`.
pub fn hopf_link_value<F: Field>(d: &ModularDataSet<F>, a: &str, x: &str) -> Result<F> {
    let q = d
        .irrproj
        .first()
        .ok_or_else(|| Error::Invalid("irrproj is empty".into()))?;
    hopf_link_value_with_reference(d, a, x, q)
}

/// Compares Hopf-link values against the dataset's declared expectations.
pub fn hopf_link_check<F: Field>(d: &ModularDataSet<F>) -> Result<Section> {
    let mut s = Section::new();
    let mut values = BTreeMap::new();
    for e in &d.hopf_link_expected {
        let got = hopf_link_value(d, &e.a, &e.x)?;
        values.insert(format!("{},{}", e.a, e.x), Value::String(got.render()));
        s.record(&[&e.a, &e.x], got == e.value, || got.render(), || e.value.render());
    }
    s.details.insert("values".into(), Value::Object(values.into_iter().collect()));
    if let Some(q) = d.irrproj.first() {
        s.details.insert("reference".into(), Value::String(q.clone()));
    }
    Ok(s)
}

/// `M_{UV}^{1} = Ĉ_{V*, U}` for all `U, V`.
pub fn m1_cartan_check<F: Field>(d: &ModularDataSet<F>) -> Result<Section> {
    let unit = d.unit().to_string();
    let mut s = Section::new();
    for (ui, u) in d.irr.iter().enumerate() {
        for v in &d.irr {
            let lhs = d.multiplicity(u, v, &unit)?;
            let vd = d.irr_index(&d.dual[v])?;
            let rhs = F::from_i64(d.cartan[vd][ui]);
            s.record(&[u, v], lhs == rhs, || lhs.render(), || rhs.render());
        }
    }
    Ok(s)
}

/// `rank Ĉ` against the number of independent `B̃` columns and `|J|`.
pub fn rank_check<F: Field>(d: &ModularDataSet<F>) -> Section {
    let rc = d.cartan_matrix().rank();
    let rb = d.btilde.rank();
    let mut s = Section::new();
    s.record(&["rank_cartan", "rank_btilde"], rc == rb, || rc.to_string(), || rb.to_string());
    s.record(&["rank_btilde", "J"], rb == d.j.len(), || rb.to_string(), || d.j.len().to_string());
    s.details.insert("rank_cartan".into(), json!(rc));
    s.details.insert("rank_btilde".into(), json!(rb));
    s.details.insert("higman_dim".into(), json!(d.j.len()));
    s
}

/// Diagnostic rescaling `b ↦ c·b` that would make the product rule hold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rescaling {
    /// The solved multiplier, rendered; absent when no single value works.
    pub multiplier: Option<String>,
    /// Two constraints demanding different multipliers (or an impossible one).
    pub inconsistent: Option<(Witness, Witness)>,
    pub rescaled_b: BTreeMap<String, String>,
    pub verdicts_after: BTreeMap<String, Verdict>,
    /// Sections that pass only after rescaling.
    pub restored: Vec<String>,
    /// Sections that pass before and fail after rescaling.
    pub conflicts: Vec<String>,
    pub hopf_link_after: BTreeMap<String, String>,
}

/// The multiplier `c` alone, or the pair of constraints that rules it out.
pub fn solve_b_multiplier<F: Field>(d: &ModularDataSet<F>) -> Result<std::result::Result<F, (Witness, Witness)>> {
    let mut found: Option<(F, Witness)> = None;
    for (u, v, lhs, rhs) in product_rule_terms(d)? {
        for (a, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
            let w = Witness {
                at: vec![u.clone(), v.clone(), d.j[a].clone()],
                lhs: l.render(),
                rhs: r.render(),
            };
            if l.is_zero() {
                if !r.is_zero() {
                    return Ok(Err((w.clone(), w)));
                }
                continue;
            }
            let c = r.mul_ref(&l.inv().expect("nonzero"));
            match &found {
                None => found = Some((c, w)),
                Some((c0, w0)) if *c0 != c => return Ok(Err((w0.clone(), w))),
                _ => {}
            }
        }
    }
    Ok(Ok(found.map_or_else(F::one, |(c, _)| c)))
}

fn verdicts<F: Field>(d: &ModularDataSet<F>) -> Result<BTreeMap<String, Section>> {
    let mut out = BTreeMap::new();
    out.insert("s_squared".to_string(), s_squared_check(d));
    out.insert("product_rule".to_string(), product_rule_check(d)?);
    out.insert("verlinde".to_string(), verlinde_check(d)?);
    out.insert("hopf_link".to_string(), hopf_link_check(d)?);
    out.insert("m1_cartan".to_string(), m1_cartan_check(d)?);
    out.insert("rank".to_string(), rank_check(d));
    Ok(out)
}

/// Solves for a single `b`-multiplier and re-runs every section under it.
pub fn rescale_solver<F: Field>(d: &ModularDataSet<F>) -> Result<Rescaling> {
    let before = verdicts(d)?;
    let c = match solve_b_multiplier(d)? {
        Ok(c) => c,
        Err(pair) => {
            return Ok(Rescaling {
                multiplier: None,
                inconsistent: Some(pair),
                rescaled_b: BTreeMap::new(),
                verdicts_after: BTreeMap::new(),
                restored: Vec::new(),
                conflicts: Vec::new(),
                hopf_link_after: BTreeMap::new(),
            })
        }
    };
    let mut scaled = d.clone();
    for v in scaled.b.values_mut() {
        *v = v.mul_ref(&c);
    }
    let after = verdicts(&scaled)?;
    let mut restored = Vec::new();
    let mut conflicts = Vec::new();
    for (name, s) in &after {
        match (before[name].passed(), s.passed()) {
            (false, true) => restored.push(name.clone()),
            (true, false) => conflicts.push(name.clone()),
            _ => {}
        }
    }
    let hopf_link_after = scaled
        .hopf_link_expected
        .iter()
        .map(|e| Ok((format!("{},{}", e.a, e.x), hopf_link_value(&scaled, &e.a, &e.x)?.render())))
        .collect::<Result<_>>()?;
    Ok(Rescaling {
        multiplier: Some(c.render()),
        inconsistent: None,
        rescaled_b: scaled.b.iter().map(|(k, v)| (k.clone(), v.render())).collect(),
        verdicts_after: after.iter().map(|(k, s)| (k.clone(), s.verdict)).collect(),
        restored,
        conflicts,
        hopf_link_after,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub passed: Vec<String>,
    pub failed: Vec<String>,
    pub fusion_integral: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub sections: BTreeMap<String, Section>,
    /// Present only when the product rule or the Verlinde identity fails.
    pub rescaling: Option<Rescaling>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn verdict(&self, section: &str) -> Option<Verdict> {
        self.sections.get(section).map(|s| s.verdict)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed.is_empty()
    }
}

/// Every section, plus the rescaling diagnostic when it applies.
pub fn full_audit<F: Field>(d: &ModularDataSet<F>) -> Result<AuditReport> {
    let sections = verdicts(d)?;
    let rescaling = if sections["product_rule"].passed() && sections["verlinde"].passed() {
        None
    } else {
        Some(rescale_solver(d)?)
    };
    let (passed, failed): (Vec<_>, Vec<_>) = sections.iter().partition(|(_, s)| s.passed());
    let summary = Summary {
        passed: passed.into_iter().map(|(k, _)| k.clone()).collect(),
        failed: failed.into_iter().map(|(k, _)| k.clone()).collect(),
        fusion_integral: d.fusion_is_integral(),
    };
    Ok(AuditReport {
        sections,
        rescaling,
        summary,
    })
}
