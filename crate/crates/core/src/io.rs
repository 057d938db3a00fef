//! JSON ingestion and export for algebras, modules, central forms, rings and
//! modular datasets. Scalars are strings in the canonical grammar; JSON
//! integers are accepted wherever a scalar or multiplicity is expected.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::assoc::{AlgModule, Algebra};
use crate::audit::{Fusion, ModularDataSet};
use crate::error::{Error, Result};
use crate::exact::{parse_as, parse_scalar, Field, FieldSpec, GaussianRational, Matrix, Rational, Scalar};
use crate::frobform::CentralForm;
use crate::grring::{CommRing, ProjectiveClass};
use crate::superlin::Parity;

/// A parser from scalar text into a concrete field.
pub type ScalarParser<'a, F> = &'a dyn Fn(&str) -> Result<F>;

/// An algebra whose field is only known at run time.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Rational(Algebra<Rational>),
    Gaussian(Algebra<GaussianRational>),
    Prime(Algebra<Scalar>),
}

#[derive(Clone, Debug)]
pub enum AnyRing {
    Rational(CommRing<Rational>),
    Gaussian(CommRing<GaussianRational>),
    Prime(CommRing<Scalar>),
}

#[derive(Clone, Debug)]
pub enum AnyDataSet {
    Rational(ModularDataSet<Rational>),
    Gaussian(ModularDataSet<GaussianRational>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| invalid(format!("missing key `{key}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| invalid(format!("`{what}` must be an array")))
}

fn index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| invalid(format!("`{what}` must be a nonnegative integer")))
}

fn label(v: &Value, what: &str) -> Result<String> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| invalid(format!("`{what}` must be a string")))
}

fn labels(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?.iter().map(|x| label(x, what)).collect()
}

/// A scalar given as a string, or as a JSON integer.
pub fn scalar<F>(v: &Value, parse: ScalarParser<F>) -> Result<F> {
    match v {
        Value::String(s) => parse(s),
        Value::Number(n) if n.is_i64() => parse(&n.to_string()),
        _ => Err(invalid(format!("expected a scalar string, got {v}"))),
    }
}

pub fn scalars<F>(v: &Value, what: &str, parse: ScalarParser<F>) -> Result<Vec<F>> {
    array(v, what)?.iter().map(|x| scalar(x, parse)).collect()
}

fn dense_matrix<F>(v: &Value, what: &str, parse: ScalarParser<F>) -> Result<Matrix<F>>
where
    F: Field,
{
    let rows = array(v, what)?
        .iter()
        .map(|r| scalars(r, what, parse))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows)
}

fn parity_list(v: &Value, n: usize) -> Result<Vec<Parity>> {
    let p = array(v, "parity")?
        .iter()
        .map(|x| match x.as_u64() {
            Some(0) => Ok(Parity::Even),
            Some(1) => Ok(Parity::Odd),
            _ => Err(invalid("parity entries must be 0 or 1")),
        })
        .collect::<Result<Vec<_>>>()?;
    if p.len() != n {
        return Err(Error::DimensionMismatch(format!("parity list has {} entries, expected {n}", p.len())));
    }
    Ok(p)
}

/// `{"kind": "rational" | "gaussian_rational" | "prime_field", "p": ...}`.
pub fn field_spec_from_value(v: &Value) -> Result<FieldSpec> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| invalid("field kind must be a string"))?;
    match kind {
        "rational" | "Q" => Ok(FieldSpec::Rational),
        "gaussian_rational" | "Q(i)" => Ok(FieldSpec::GaussianRational),
        "prime_field" | "F_p" | "prime" => {
            let p = field(v, "p")?.as_u64().ok_or_else(|| invalid("p must be an integer"))?;
            FieldSpec::prime(p)
        }
        other => Err(invalid(format!("unknown field kind {other}"))),
    }
}

pub fn field_spec_to_value(spec: FieldSpec) -> Value {
    match spec {
        FieldSpec::PrimeField(p) => json!({"kind": spec.kind(), "p": p}),
        _ => json!({"kind": spec.kind()}),
    }
}

/// An algebra from its JSON object, scalars parsed by `parse`.
pub fn algebra_from_value<F: Field>(v: &Value, spec: FieldSpec, parse: ScalarParser<F>) -> Result<Algebra<F>> {
    let dim = index(field(v, "dim")?, "dim")?;
    let basis = match v.get("basis") {
        Some(b) => labels(b, "basis")?,
        None => (0..dim).map(|k| format!("b{k}")).collect(),
    };
    if basis.len() != dim {
        return Err(Error::DimensionMismatch(format!("{} basis names for dimension {dim}", basis.len())));
    }
    let unit = scalars(field(v, "unit")?, "unit", parse)?;
    let mut entries = Vec::new();
    for t in array(field(v, "mult")?, "mult")? {
        let t = array(t, "mult entry")?;
        if t.len() != 4 {
            return Err(invalid("mult entries are [i, j, k, scalar]"));
        }
        entries.push((index(&t[0], "i")?, index(&t[1], "j")?, index(&t[2], "k")?, scalar(&t[3], parse)?));
    }
    let parity = v.get("parity").map(|p| parity_list(p, dim)).transpose()?;
    let mut a = Algebra::new(spec, basis, entries, unit, parity)?;
    if let Some(g) = v.get("generators") {
        let gens = array(g, "generators")?.iter().map(|x| index(x, "generators")).collect::<Result<Vec<_>>>()?;
        if gens.iter().any(|&g| g >= dim) {
            return Err(invalid("generator index out of range"));
        }
        a = a.with_generators(gens);
    }
    Ok(a)
}

fn parser_for(spec: FieldSpec) -> impl Fn(&str) -> Result<Scalar> {
    move |t| parse_scalar(t, spec)
}

/// Loads an algebra, choosing the concrete field from its `field` entry.
pub fn load_algebra(v: &Value) -> Result<AnyAlgebra> {
    let spec = field_spec_from_value(field(v, "field")?)?;
    Ok(match spec {
        FieldSpec::Rational => AnyAlgebra::Rational(algebra_from_value(v, spec, &parse_as::<Rational>)?),
        FieldSpec::GaussianRational => AnyAlgebra::Gaussian(algebra_from_value(v, spec, &parse_as::<GaussianRational>)?),
        FieldSpec::PrimeField(_) => AnyAlgebra::Prime(algebra_from_value(v, spec, &parser_for(spec))?),
    })
}

pub fn algebra_to_value<F: Field>(a: &Algebra<F>) -> Value {
    let mult: Vec<Value> = a
        .structure_constants()
        .map(|(i, j, k, c)| json!([i, j, k, c.render()]))
        .collect();
    let mut m = Map::new();
    m.insert("field".into(), field_spec_to_value(a.field));
    m.insert("dim".into(), json!(a.dim()));
    m.insert("basis".into(), json!(a.basis_names));
    m.insert("unit".into(), Value::Array(a.unit.iter().map(|c| Value::String(c.render())).collect()));
    m.insert("mult".into(), Value::Array(mult));
    if let Some(p) = &a.parity {
        m.insert("parity".into(), Value::Array(p.iter().map(|x| json!(x.bit())).collect()));
    }
    if let Some(g) = &a.generators {
        m.insert("generators".into(), json!(g));
    }
    Value::Object(m)
}

/// `{"coords": [...]}` over a given algebra.
pub fn form_from_value<F: Field>(v: &Value, algebra: Arc<Algebra<F>>, parse: ScalarParser<F>) -> Result<CentralForm<F>> {
    CentralForm::new(algebra, scalars(field(v, "coords")?, "coords", parse)?)
}

/// A module over a given algebra: sparse `[r, c, scalar]` triples per basis element.
pub fn module_from_value<F: Field>(v: &Value, algebra: Arc<Algebra<F>>, parse: ScalarParser<F>) -> Result<AlgModule<F>> {
    let dim = index(field(v, "dim")?, "dim")?;
    let mut action = Vec::new();
    for m in array(field(v, "action")?, "action")? {
        let mut mat = Matrix::zeros(dim, dim);
        for t in array(m, "action matrix")? {
            let t = array(t, "action entry")?;
            if t.len() != 3 {
                return Err(invalid("action entries are [r, c, scalar]"));
            }
            let (r, c) = (index(&t[0], "r")?, index(&t[1], "c")?);
            if r >= dim || c >= dim {
                return Err(invalid("action entry out of range"));
            }
            mat.set(r, c, scalar(&t[2], parse)?);
        }
        action.push(mat);
    }
    let parity = v.get("parity").map(|p| parity_list(p, dim)).transpose()?;
    let m = AlgModule::new(algebra, dim, action, parity)?;
    m.verify()?;
    Ok(m)
}

fn ring_from_value<F: Field>(v: &Value, spec: FieldSpec, parse: ScalarParser<F>) -> Result<CommRing<F>> {
    let ring = algebra_from_value(v, spec, parse)?;
    let mut projectives = Vec::new();
    for p in array(field(v, "projectives")?, "projectives")? {
        let class = match p {
            Value::String(l) => {
                let i = ring
                    .basis_names
                    .iter()
                    .position(|n| n == l)
                    .ok_or_else(|| invalid(format!("unknown projective label {l}")))?;
                ProjectiveClass { label: l.clone(), coords: ring.basis_vector(i) }
            }
            _ => ProjectiveClass {
                label: label(field(p, "label")?, "label")?,
                coords: scalars(field(p, "coords")?, "coords", parse)?,
            },
        };
        projectives.push(class);
    }
    let dual = match v.get("dual") {
        Some(Value::Object(m)) => Some(
            m.iter()
                .map(|(k, x)| Ok((k.clone(), label(x, "dual")?)))
                .collect::<Result<BTreeMap<_, _>>>()?,
        ),
        Some(_) => return Err(invalid("dual must be an object")),
        None => None,
    };
    CommRing::new(ring, projectives, dual)
}

/// Ring JSON: algebra JSON plus `projectives` (labels or `{label, coords}`) and `dual`.
pub fn load_ring(v: &Value) -> Result<AnyRing> {
    let spec = field_spec_from_value(field(v, "field")?)?;
    Ok(match spec {
        FieldSpec::Rational => AnyRing::Rational(ring_from_value(v, spec, &parse_as::<Rational>)?),
        FieldSpec::GaussianRational => AnyRing::Gaussian(ring_from_value(v, spec, &parse_as::<GaussianRational>)?),
        FieldSpec::PrimeField(_) => AnyRing::Prime(ring_from_value(v, spec, &parser_for(spec))?),
    })
}

pub fn ring_to_value<F: Field>(r: &CommRing<F>) -> Value {
    let mut v = algebra_to_value(&r.ring);
    let projectives: Vec<Value> = r
        .projectives
        .iter()
        .map(|p| json!({"label": p.label, "coords": p.coords.iter().map(|c| c.render()).collect::<Vec<_>>()}))
        .collect();
    v["projectives"] = Value::Array(projectives);
    if let Some(d) = &r.dual {
        v["dual"] = json!(d);
    }
    v
}

fn dataset_from_value<F: Field>(v: &Value, parse: ScalarParser<F>) -> Result<ModularDataSet<F>> {
    let irr = labels(field(v, "irr")?, "irr")?;
    let dual = match field(v, "dual")? {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| Ok((k.clone(), label(x, "dual")?)))
            .collect::<Result<BTreeMap<_, _>>>()?,
        _ => return Err(invalid("dual must be an object")),
    };
    let cartan = array(field(v, "cartan")?, "cartan")?
        .iter()
        .map(|r| {
            array(r, "cartan")?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| invalid("cartan entries must be integers")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let b = match field(v, "b")? {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| Ok((k.clone(), scalar(x, parse)?)))
            .collect::<Result<BTreeMap<_, _>>>()?,
        _ => return Err(invalid("b must be an object")),
    };
    let mut fusion = Fusion::new();
    match field(v, "fusion")? {
        Value::Object(m) => {
            for (key, ws) in m {
                let (u, w) = key
                    .split_once(',')
                    .ok_or_else(|| invalid(format!("fusion key `{key}` must read `U,V`")))?;
                let row = match ws {
                    Value::Object(ws) => ws
                        .iter()
                        .map(|(w, x)| Ok((w.clone(), scalar(x, parse)?)))
                        .collect::<Result<BTreeMap<_, _>>>()?,
                    _ => return Err(invalid("fusion rows must be objects")),
                };
                fusion.insert((u.trim().to_string(), w.trim().to_string()), row);
            }
        }
        _ => return Err(invalid("fusion must be an object")),
    }
    let mut d = ModularDataSet::new(
        irr,
        dual,
        cartan,
        labels(field(v, "J")?, "J")?,
        labels(field(v, "irrproj")?, "irrproj")?,
        dense_matrix(field(v, "Btilde")?, "Btilde", parse)?,
        dense_matrix(field(v, "Stilde")?, "Stilde", parse)?,
        dense_matrix(field(v, "Ctilde")?, "Ctilde", parse)?,
        b,
        fusion,
        scalar(field(v, "t0")?, parse)?,
    )?;
    if let Some(h) = v.get("hopf_link_expected") {
        for e in array(h, "hopf_link_expected")? {
            let a = label(field(e, "A")?, "A")?;
            let x = label(field(e, "X")?, "X")?;
            d = d.with_hopf_expectation(&a, &x, scalar(field(e, "value")?, parse)?)?;
        }
    }
    Ok(d)
}

/// Loads a dataset over ℚ, or over ℚ(i) when some scalar needs `i`.
pub fn load_dataset(v: &Value) -> Result<AnyDataSet> {
    match dataset_from_value(v, &parse_as::<Rational>) {
        Ok(d) => Ok(AnyDataSet::Rational(d)),
        Err(Error::ImaginaryOutsideGaussian(_)) | Err(Error::FieldMismatch(_)) => {
            Ok(AnyDataSet::Gaussian(dataset_from_value(v, &parse_as::<GaussianRational>)?))
        }
        Err(e) => Err(e),
    }
}

fn matrix_to_value<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| Value::String(m.get(r, c).render())).collect()))
            .collect(),
    )
}

pub fn dataset_to_value<F: Field>(d: &ModularDataSet<F>) -> Value {
    let fusion: Map<String, Value> = d
        .fusion
        .iter()
        .map(|((u, v), ws)| {
            let row: Map<String, Value> = ws.iter().map(|(w, m)| (w.clone(), Value::String(m.render()))).collect();
            (format!("{u},{v}"), Value::Object(row))
        })
        .collect();
    let mut out = json!({
        "irr": d.irr,
        "dual": d.dual,
        "cartan": d.cartan,
        "J": d.j,
        "irrproj": d.irrproj,
        "Btilde": matrix_to_value(&d.btilde),
        "Stilde": matrix_to_value(&d.stilde),
        "Ctilde": matrix_to_value(&d.ctilde),
        "b": d.b.iter().map(|(k, x)| (k.clone(), Value::String(x.render()))).collect::<Map<_, _>>(),
        "fusion": Value::Object(fusion),
        "t0": d.t0.render(),
    });
    if !d.hopf_link_expected.is_empty() {
        out["hopf_link_expected"] = Value::Array(
            d.hopf_link_expected
                .iter()
                .map(|e| json!({"A": e.a, "X": e.x, "value": e.value.render()}))
                .collect(),
        );
    }
    out
}
