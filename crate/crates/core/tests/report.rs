use fftc::audit::{full_audit, toric_code_dataset};
use fftc::report::{emit, sf_report, Format};
use fftc::sfcat::lambda_algebra;
use fftc::{Field, GaussianRational, Rational};
use serde_json::{json, Value};

fn scalars(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|x| scalars(x, out)),
        Value::Object(m) => m.values().for_each(|x| scalars(x, out)),
        _ => {}
    }
}

fn sample() -> Value {
    let i = GaussianRational::imaginary_unit().unwrap();
    let lam = lambda_algebra(1, i).unwrap();
    sf_report(&lam, &GaussianRational::from_i64(3)).unwrap()
}

#[test]
fn emission_is_deterministic() {
    let r = sample();
    for f in [Format::Json, Format::Markdown] {
        assert_eq!(emit(&r, f, "sf"), emit(&sample(), f, "sf"));
    }
}

#[test]
fn json_keys_are_sorted() {
    let v = json!({"zeta": 1, "alpha": {"b": 2, "a": 1}});
    assert_eq!(
        emit(&v, Format::Json, "x"),
        "{\n  \"alpha\": {\n    \"a\": 1,\n    \"b\": 2\n  },\n  \"zeta\": 1\n}\n"
    );
}

#[test]
fn empty_report_is_a_valid_document() {
    let e = emit(&json!({}), Format::Json, "empty");
    assert_eq!(serde_json::from_str::<Value>(&e).unwrap(), json!({}));
    assert_eq!(emit(&json!({}), Format::Markdown, "empty"), "# empty\n\n");
}

#[test]
fn markdown_keeps_exact_scalars() {
    let r = sample();
    let md = emit(&r, Format::Markdown, "sf");
    let mut all = Vec::new();
    scalars(&r, &mut all);
    for s in all {
        assert!(md.contains(&s), "{s} missing");
    }
    assert!(md.contains("| Lambda(R_top) | 3*i |"));
}

#[test]
fn matrix_rows_keep_order() {
    let md = emit(&json!({"m": [["1", "2"], ["3", "4"]]}), Format::Markdown, "t");
    assert!(md.contains("| 0 | 1 | 2 |\n| 1 | 3 | 4 |"));
}

#[test]
fn audit_report_serializes() {
    let r = full_audit(&toric_code_dataset::<Rational>()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let text = emit(&v, Format::Json, "audit");
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    assert!(emit(&v, Format::Markdown, "audit").contains("## sections"));
}
