//! Structured reports and their JSON / markdown serialization.
//!
//! Reports are `serde_json::Value` trees whose scalars are canonical strings.
//! JSON output has sorted keys. Markdown renders nested objects as sections,
//! scalar fields as a two-column table, matrices as tables in row order, and
//! arrays of flat objects as one table row per element.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::assoc::{cartan_matrix, center, primitive_idempotents, primitive_idempotents_with_radical, radical_char0, Algebra};
use crate::error::Result;
use crate::exact::{Field, Matrix};
use crate::frobform::{check_central_form, ideal_report_auto, CentralForm};
use crate::grring::{condition_p, nilpotent_witness, ring_semisimple, CommRing};
use crate::sfcat::{
    cartan_from_composition_series, right_multiplication, sf_cartan, sf_check_trace_vs_tg, sf_modified_trace,
    sf_modular_data, sf_phi_table, FusionTable, LambdaAlgebra, SFObject, IRR,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

/// Serializes a report; identical input yields identical bytes.
pub fn emit(report: &Value, format: Format, title: &str) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&sort_keys(report)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Markdown => to_markdown(report, title),
    }
}

fn sort_keys(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            let mut out = Map::new();
            for k in keys {
                out.insert(k.clone(), sort_keys(&m[k]));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.iter().map(sort_keys).collect()),
        other => other.clone(),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace('|', "\\|"),
        Value::Null => String::new(),
        Value::Array(a) => a.iter().map(cell).collect::<Vec<_>>().join(", "),
        Value::Object(_) => serde_json::to_string(v).expect("serializable").replace('|', "\\|"),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        _ => true,
    }
}

fn table(out: &mut String, headers: &[String], rows: &[Vec<String>]) {
    out.push_str(&format!("| {} |\n", headers.join(" | ")));
    out.push_str(&format!("|{}\n", " --- |".repeat(headers.len())));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out.push('\n');
}

fn render_md(out: &mut String, v: &Value, level: usize, title: &str) {
    let hashes = "#".repeat(level.min(6));
    out.push_str(&format!("{hashes} {title}\n\n"));
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            let flat: Vec<Vec<String>> = keys
                .iter()
                .filter(|k| is_flat(&m[k.as_str()]))
                .map(|k| vec![k.to_string(), cell(&m[k.as_str()])])
                .collect();
            if !flat.is_empty() {
                table(out, &["key".into(), "value".into()], &flat);
            }
            for k in keys.iter().filter(|k| !is_flat(&m[k.as_str()])) {
                render_md(out, &m[k.as_str()], level + 1, k);
            }
        }
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(is_flat))) => {
            let width = rows.iter().map(|r| r.as_array().map_or(0, Vec::len)).max().unwrap_or(0);
            let mut headers = vec!["row".to_string()];
            headers.extend((0..width).map(|c| c.to_string()));
            let body: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut line = vec![i.to_string()];
                    line.extend(r.as_array().expect("row").iter().map(cell));
                    line.resize(width + 1, String::new());
                    line
                })
                .collect();
            table(out, &headers, &body);
        }
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| r.as_object().is_some_and(|o| o.values().all(is_flat))) => {
            let mut headers: Vec<String> = rows
                .iter()
                .flat_map(|r| r.as_object().expect("object").keys().cloned())
                .collect();
            headers.sort();
            headers.dedup();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| headers.iter().map(|h| r.get(h).map_or_else(String::new, cell)).collect())
                .collect();
            table(out, &headers, &body);
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                render_md(out, x, level + 1, &i.to_string());
            }
        }
        other => out.push_str(&format!("{}\n\n", cell(other))),
    }
}

pub fn to_markdown(v: &Value, title: &str) -> String {
    let mut out = String::new();
    render_md(&mut out, v, 1, title);
    out
}

/// Renders a vector of scalars.
pub fn vector_value<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.render())).collect())
}

pub fn matrix_value<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_value(m.row(r))).collect())
}

fn vectors_value<F: Field>(vs: &[Vec<F>]) -> Value {
    Value::Array(vs.iter().map(|v| vector_value(v)).collect())
}

/// Structure, radical, idempotents, Cartan matrix and (with a form) the ideal chain.
pub fn algebra_report<F: Field>(a: &Algebra<F>, form: Option<&[F]>, declared_radical: Option<&[Vec<F>]>) -> Result<Value> {
    let mut r = Map::new();
    let validation = a.validate();
    r.insert("field".into(), json!(a.field.kind()));
    r.insert("characteristic".into(), json!(a.characteristic()));
    r.insert("dim".into(), json!(a.dim()));
    r.insert("basis".into(), json!(a.basis_names));
    r.insert("valid".into(), json!(validation.is_valid()));
    r.insert("violations".into(), json!(validation.violations));
    if !validation.is_valid() {
        return Ok(Value::Object(r));
    }
    let z = center(a);
    r.insert("center".into(), json!({"dim": z.len(), "basis": vectors_value(&z)}));
    let radical = match declared_radical {
        Some(rad) => Some(rad.to_vec()),
        None if a.characteristic() == 0 => Some(radical_char0(a)?),
        None => None,
    };
    let Some(rad) = radical else {
        r.insert("radical".into(), json!("not computed in positive characteristic without a declared basis"));
        return Ok(Value::Object(r));
    };
    r.insert("radical".into(), json!({"dim": rad.len(), "basis": vectors_value(&rad)}));
    r.insert("semisimple".into(), json!(rad.is_empty()));
    let idems = if declared_radical.is_some() {
        primitive_idempotents_with_radical(a, &rad)?
    } else {
        primitive_idempotents(a)?
    };
    let cartan = cartan_matrix(a, &idems)?;
    // integers reduced into the algebra's field, so the rank is that of the image in k
    let one = a.unit.iter().find(|u| !u.is_zero()).map(|u| u.mul_ref(&u.inv().expect("nonzero")));
    let one = one.unwrap_or_else(F::one);
    let cm = Matrix::<F>::from_fn(cartan.len(), cartan.len(), |i, j| F::from_i64(cartan[i][j] as i64).mul_ref(&one));
    r.insert(
        "idempotents".into(),
        json!({
            "count": idems.elements.len(),
            "labels": idems.labels,
            "classes": idems.class_of,
            "elements": vectors_value(&idems.elements),
        }),
    );
    r.insert("cartan".into(), json!({"matrix": cartan, "rank": cm.rank()}));
    if let Some(coords) = form {
        let f = CentralForm::new(Arc::new(a.clone()), coords.to_vec())?;
        let check = check_central_form(&f);
        let mut fr = Map::new();
        fr.insert("coords".into(), vector_value(coords));
        fr.insert("central".into(), json!(check.central));
        fr.insert("nondegenerate".into(), json!(check.nondegenerate));
        fr.insert("gram".into(), matrix_value(&check.gram));
        if check.central && check.nondegenerate {
            let ideal = ideal_report_auto(&f)?;
            fr.insert(
                "ideals".into(),
                json!({
                    "center": {"dim": ideal.dim_center, "basis": vectors_value(&ideal.center)},
                    "reynolds": {"dim": ideal.dim_reynolds, "basis": vectors_value(&ideal.reynolds)},
                    "higman": {"dim": ideal.dim_higman, "basis": vectors_value(&ideal.higman)},
                    "chain_holds": ideal.chain_holds,
                    "higman_dim_equals_cartan_rank": ideal.higman_dim_equals_cartan_rank,
                    "zeta_higman_is_projective_span": ideal.zeta_higman_is_projective_span,
                    "zeta_reynolds_is_character_span": ideal.zeta_reynolds_is_character_span,
                    "projective_span_equals_character_span": ideal.projective_span_equals_character_span,
                    "simple_characters": vectors_value(&ideal.simple_characters),
                    "projective_characters": vectors_value(&ideal.projective_characters),
                }),
            );
        }
        r.insert("form".into(), Value::Object(fr));
    }
    Ok(Value::Object(r))
}

pub fn fusion_value(table: &FusionTable) -> Value {
    let m: Map<String, Value> = table
        .iter()
        .map(|((u, v), ws)| (format!("{u},{v}"), json!(ws)))
        .collect();
    Value::Object(m)
}

fn cartan_value(c: &[Vec<u64>]) -> Value {
    json!(c)
}

/// Cartan matrix, trace values on the projective covers, and the printed modular data.
pub fn sf_report<F: Field>(lam: &LambdaAlgebra<F>, t0: &F) -> Result<Value> {
    let n = lam.n;
    let printed = sf_cartan(n);
    let recomputed = cartan_from_composition_series(lam);
    let top = right_multiplication(lam, &lam.top_vector());
    let id = Matrix::identity(1);
    let traces = json!({
        "Lambda(R_top)": sf_modified_trace(lam, &SFObject::lambda(lam), &top, t0)?.render(),
        "PiLambda(R_top)": sf_modified_trace(lam, &SFObject::pi_lambda(lam), &top, t0)?.render(),
        "T(id)": sf_modified_trace(lam, &SFObject::t(), &id, t0)?.render(),
        "PiT(id)": sf_modified_trace(lam, &SFObject::pi_t(), &id, t0)?.render(),
    });
    let data = sf_modular_data::<F>(n);
    Ok(json!({
        "N": n,
        "beta_sq_inv": lam.beta_sq_inv()?.render(),
        "t0": t0.render(),
        "irr": IRR,
        "cartan": {
            "printed": cartan_value(&printed),
            "from_composition_series": cartan_value(&recomputed),
            "agree": printed == recomputed,
        },
        "traces": traces,
        "modular_data": {
            "J": data.j,
            "irrproj": data.irrproj,
            "Btilde": matrix_value(&data.btilde),
            "Stilde": matrix_value(&data.stilde),
            "Ctilde": matrix_value(&data.ctilde),
            "b": data.b.iter().map(|(k, v)| (k.clone(), Value::String(v.render()))).collect::<Map<_, _>>(),
        },
    }))
}

pub fn phi_report<F: Field>(lam: &LambdaAlgebra<F>, t0: &F) -> Result<Value> {
    let t = sf_phi_table(lam, t0)?;
    let entries: Map<String, Value> = t
        .entries
        .iter()
        .map(|((u, v), m)| (format!("{u},{v}"), matrix_value(m)))
        .collect();
    Ok(json!({
        "N": lam.n,
        "c": t.c.render(),
        "c_pi": t.c_pi.render(),
        "pi_sign": t.pi_sign.render(),
        "b": t.b.iter().map(|(k, v)| (k.clone(), Value::String(v.render()))).collect::<Map<_, _>>(),
        "components": entries,
    }))
}

pub fn trace_vs_tg_report<F: Field>(lam: &LambdaAlgebra<F>, t0: &F) -> Result<Value> {
    let r = sf_check_trace_vs_tg(lam, t0)?;
    let residuals: Map<String, Value> = r
        .residuals
        .iter()
        .map(|(k, v)| (k.clone(), json!({"zero": v.iter().all(|x| x.is_zero()), "values": vector_value(v)})))
        .collect();
    Ok(json!({
        "N": lam.n,
        "end_dim": r.end_dim,
        "hom_dims": r.hom_dims,
        "residuals": residuals,
        "all_zero": r.all_zero,
        "end_cartan": r.end_cartan,
        "cartan_matches": r.cartan_matches,
        "higman_dim": r.higman_dim,
        "pi_sign": r.pi_sign.render(),
    }))
}

pub fn condition_p_report<F: Field>(r: &CommRing<F>) -> Value {
    match condition_p(r) {
        Some(p) => json!({"holds": true, "witness": {"label": p.label, "coords": vector_value(&p.coords)}}),
        None => json!({"holds": false, "witness": null}),
    }
}

pub fn semisimple_report<F: Field>(r: &CommRing<F>) -> Result<Value> {
    let s = ring_semisimple(r)?;
    let w = nilpotent_witness(r)?;
    Ok(json!({
        "semisimple": s,
        "nilpotent_witness": w.map(|v| vector_value(&v)),
        "basis": r.ring.basis_names,
    }))
}
