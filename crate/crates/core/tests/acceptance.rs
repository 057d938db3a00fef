//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fftc::assoc::fixtures::truncated_polynomial;
use fftc::audit::{
    full_audit, hopf_link_value, m1_cartan_check, sf_dataset_with_fusion, sf_printed_dataset, synthetic_modular_dataset,
    toric_code_dataset, Verdict,
};
use fftc::exact::{frac, imaginary_unit, RowSpace};
use fftc::frobform::{ideal_report_auto, CentralForm};
use fftc::grring::{condition_p, cyclic_p_grothendieck, ring_element_power_nilpotent, ring_semisimple, sf_grothendieck};
use fftc::sfcat::*;
use fftc::superlin::Parity;
use fftc::{Field, GaussianRational, Matrix, Rational};

type G = GaussianRational;
type Q = Rational;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    outcome(false, detail)
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took >= limit {
        o.ok = false;
    }
    o.detail = format!("{} ({:.2?}, limit {:?})", o.detail, took, limit);
    o
}

fn criterion_1() -> Outcome {
    let a = Arc::new(truncated_polynomial::<Q>());
    let f = match CentralForm::new(a.clone(), vec![Q::from_i64(0), Q::from_i64(1)]) {
        Ok(f) => f,
        Err(e) => return fail(e.to_string()),
    };
    let r = match ideal_report_auto(&f) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let chi_k = &r.simple_characters[0];
    let doubled: Vec<Q> = chi_k.iter().map(|x| x.clone() * Q::from_i64(2)).collect();
    let x_span = RowSpace::from_vectors(2, vec![a.basis_vector(1)]);
    let checks = [
        ("chi_A = 2 chi_k", r.projective_characters.len() == 1 && r.projective_characters[0] == doubled),
        ("I(A) = R(A)", r.projective_span_equals_character_span),
        ("non-semisimple", !r.semisimple),
        ("Hig = span{X}", RowSpace::from_vectors(2, r.higman.clone()).same_space(&x_span)),
        ("Rey = span{X}", RowSpace::from_vectors(2, r.reynolds.clone()).same_space(&x_span)),
        ("rank C = 1 = dim Hig", r.cartan_rank == 1 && r.dim_higman == 1),
    ];
    summarize(&checks)
}

fn summarize(checks: &[(&str, bool)]) -> Outcome {
    let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if bad.is_empty() {
        outcome(true, checks.iter().map(|(n, _)| *n).collect::<Vec<_>>().join("; "))
    } else {
        fail(format!("failed: {}", bad.join("; ")))
    }
}

fn criterion_2() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3usize {
        let c = 1u64 << (2 * n - 1);
        let printed = vec![vec![c, c, 0, 0], vec![c, c, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
        let got = sf_cartan(n);
        let m = Matrix::<Q>::from_fn(4, 4, |i, j| Q::from_i64(got[i][j] as i64));
        let lam = match LambdaAlgebra::<Q>::structure(n) {
            Ok(l) => l,
            Err(e) => return fail(e.to_string()),
        };
        checks.push(got == printed && m.rank() == 3 && cartan_from_composition_series(&lam) == got);
    }
    outcome(checks.iter().all(|&b| b), format!("N=1..3 block form, rank 3, composition series agree: {checks:?}"))
}

fn expected_n1_fusion() -> FusionTable {
    // Λ*Λ = 2Λ⊕2ΠΛ, Λ*T = 2T⊕2ΠT, T*T = Λ; Π shifts move the label parity
    let parity = |l: &str| l.starts_with("Pi") as u8;
    let local = |l: &str| l == "1" || l == "Pi1";
    let mut t = FusionTable::new();
    for u in IRR {
        for v in IRR {
            let row: BTreeMap<String, u64> = match (local(u), local(v)) {
                (true, true) => [("1".into(), 2), ("Pi1".into(), 2)].into(),
                (true, false) | (false, true) => [("T".into(), 2), ("PiT".into(), 2)].into(),
                (false, false) => {
                    let w = if (parity(u) + parity(v)) % 2 == 0 { "1" } else { "Pi1" };
                    [(w.into(), 1)].into()
                }
            };
            t.insert((u.to_string(), v.to_string()), row);
        }
    }
    t
}

fn criterion_3(tables: &mut BTreeMap<usize, FusionTable>) -> Outcome {
    let n1 = match sf_fusion(1, 4096) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let start = Instant::now();
    let n2 = match sf_fusion(2, 4096) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let took = start.elapsed();
    let ok1 = n1 == expected_n1_fusion();
    let ok2 = n2 == sf_fusion_closed_form(2) && multiplicity(&n2, "1", "1", "1") == 8;
    tables.insert(1, n1);
    tables.insert(2, n2);
    outcome(
        ok1 && ok2 && took < Duration::from_secs(60),
        format!("N=1 table matches the displayed products: {ok1}; N=2 closed form with 2^3: {ok2} (N=2 in {took:.2?}, limit 60s)"),
    )
}

fn criterion_4(tables: &BTreeMap<usize, FusionTable>) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = tables.len() == 2;
    for (n, t) in tables {
        let d = match sf_dataset_with_fusion::<G>(*n, G::from_i64(1), t) {
            Ok(d) => d,
            Err(e) => return fail(e.to_string()),
        };
        match m1_cartan_check(&d) {
            Ok(s) => {
                ok &= s.verdict == Verdict::Pass && s.checked == 16;
                parts.push(format!("N={n}: {} of {} pairs hold", s.checked - s.failures, s.checked));
            }
            Err(e) => return fail(e.to_string()),
        }
    }
    outcome(ok, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let t0: G = frac(3, 2);
    for n in 1..=2 {
        let lam = match lambda_algebra(n, default_beta_sq_inv::<G>(n).unwrap()) {
            Ok(l) => l,
            Err(e) => return fail(e.to_string()),
        };
        let b = lam.beta_sq_inv().unwrap().clone();
        let a = lam.algebra.clone();
        let l = SFObject::lambda(&lam);
        let pl = SFObject::pi_lambda(&lam);
        let mut ok = true;
        for k in (0..lam.dim()).filter(|&k| a.parity_of(k) == Parity::Even) {
            let lambda_k = if k == lam.top() { b.clone() } else { G::from_i64(0) };
            let r = right_multiplication(&lam, &a.basis_vector(k));
            ok &= sf_modified_trace(&lam, &l, &r, &t0).ok() == Some(t0.clone() * lambda_k.clone());
            ok &= sf_modified_trace(&lam, &pl, &r, &t0).ok() == Some(-(t0.clone() * lambda_k));
        }
        let id = Matrix::identity(1);
        ok &= sf_modified_trace(&lam, &SFObject::t(), &id, &t0).ok() == Some(t0.clone());
        ok &= sf_modified_trace(&lam, &SFObject::pi_t(), &id, &t0).ok() == Some(-t0.clone());
        checks.push((format!("displayed values N={n}"), ok));
    }
    let lam = lambda_algebra(1, imaginary_unit()).unwrap();
    let l = SFObject::lambda(&lam);
    let ll = match sf_tensor(&lam, &l, &l) {
        Ok(x) => x,
        Err(e) => return fail(e.to_string()),
    };
    let ps = [l, SFObject::pi_lambda(&lam), SFObject::t(), SFObject::pi_t(), ll];
    let (mut cyclic, mut full_rank, mut pairs) = (true, true, 0);
    for p in &ps {
        for q in &ps {
            let (Ok(pq), Ok(qp)) = (sf_hom_basis(p, q), sf_hom_basis(q, p)) else {
                return fail("hom basis");
            };
            let mut gram = Matrix::<G>::zeros(pq.len(), qp.len());
            for (i, f) in pq.iter().enumerate() {
                for (j, g) in qp.iter().enumerate() {
                    let x = sf_modified_trace(&lam, q, &(f * g), &t0);
                    let y = sf_modified_trace(&lam, p, &(g * f), &t0);
                    cyclic &= x.is_ok() && x == y;
                    gram.set(i, j, x.unwrap_or_else(|_| G::from_i64(0)));
                }
            }
            full_rank &= pq.len() == qp.len() && gram.rank() == pq.len();
            pairs += 1;
        }
    }
    checks.push((format!("cyclicity over {pairs} pairs"), cyclic));
    checks.push((format!("full-rank pairings over {pairs} pairs"), full_rank));
    let named: Vec<(&str, bool)> = checks.iter().map(|(n, b)| (n.as_str(), *b)).collect();
    summarize(&named)
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut values = Vec::new();
    for t0 in [G::from_i64(1), frac(5, 3)] {
        for n in 1..=4usize {
            let d = match sf_printed_dataset::<G>(n, t0.clone()) {
                Ok(d) => d,
                Err(e) => return fail(e.to_string()),
            };
            let v = hopf_link_value(&d, "T", "1");
            ok &= v.as_ref().ok() == Some(&(G::from_i64(1 << (2 * (n - 1))) * t0.clone()));
            values.push(v.map(|x| x.render()).unwrap_or_else(|e| e.to_string()));
        }
    }
    outcome(ok, format!("values for t0 = 1, 5/3 and N = 1..4: {}", values.join(", ")))
}

fn criterion_7() -> Outcome {
    let r = match full_audit(&toric_code_dataset::<Q>()) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let s = |k: &str| &r.sections[k];
    let ok = r.all_passed()
        && s("verlinde").checked == 64
        && s("s_squared").verdict == Verdict::Pass
        && s("product_rule").verdict == Verdict::Pass;
    outcome(ok, format!("verlinde {} triples exact, sections passed: {:?}", s("verlinde").checked, r.summary.passed))
}

fn criterion_8() -> Outcome {
    let (mut qualifying, mut triples, mut bad) = (0, 0, Vec::new());
    for seed in 0..128u64 {
        let d = synthetic_modular_dataset(seed);
        let r = match full_audit(&d) {
            Ok(r) => r,
            Err(e) => return fail(format!("seed {seed}: {e}")),
        };
        if r.sections["s_squared"].verdict == Verdict::Pass && r.sections["product_rule"].verdict == Verdict::Pass {
            qualifying += 1;
            triples += r.sections["verlinde"].checked;
            if r.sections["verlinde"].verdict != Verdict::Pass {
                bad.push(seed);
            }
        }
    }
    outcome(
        qualifying >= 100 && bad.is_empty(),
        format!("{qualifying} consistent datasets, {triples} triples, verlinde failures at seeds {bad:?}"),
    )
}

fn criterion_9() -> Outcome {
    let r = sf_grothendieck::<Q>(1);
    let w = vec![Q::from_i64(0), Q::from_i64(0), Q::from_i64(1), Q::from_i64(-1)];
    let checks = [
        ("char 0 SF returns a non-nilpotent projective", condition_p(&r).is_some()),
        ("F_p[Z/p] returns none for p = 2, 3, 5", [2, 3, 5].iter().all(|&p| cyclic_p_grothendieck(p).map(|g| condition_p(&g).is_none()).unwrap_or(false))),
        ("[T]-[PiT] is a nonzero nilpotent", ring_element_power_nilpotent(&r, &w)),
        ("Gr(SF) non-semisimple", ring_semisimple(&r).ok() == Some(false)),
    ];
    summarize(&checks)
}

fn criterion_10() -> Outcome {
    let expected = [
        ("s_squared", Verdict::Fail),
        ("product_rule", Verdict::Fail),
        ("verlinde", Verdict::Fail),
        ("hopf_link", Verdict::Pass),
        ("m1_cartan", Verdict::Pass),
        ("rank", Verdict::Pass),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3usize {
        let d = match sf_printed_dataset::<G>(n, G::from_i64(1)) {
            Ok(d) => d,
            Err(e) => return fail(e.to_string()),
        };
        let r = match full_audit(&d) {
            Ok(r) => r,
            Err(e) => return fail(e.to_string()),
        };
        if n == 1 {
            ok &= r.sections.len() == expected.len() && expected.iter().all(|(k, v)| r.verdict(k) == Some(*v));
        }
        let Some(resc) = &r.rescaling else { return fail("no rescaling diagnostic") };
        let want = (1u64 << (2 * n + 2)).to_string();
        ok &= resc.multiplier.as_deref() == Some(want.as_str()) && resc.conflicts.contains(&"hopf_link".to_string());
        notes.push(format!("N={n}: multiplier {:?}, conflicts {:?}", resc.multiplier, resc.conflicts));
    }
    outcome(ok, format!("N=1 verdict vector as expected; {}", notes.join("; ")))
}

fn criterion_11() -> Outcome {
    let lam = lambda_algebra(1, imaginary_unit()).unwrap();
    match sf_check_trace_vs_tg(&lam, &G::from_i64(1)) {
        Ok(r) => {
            let zero = |v: &Vec<G>| v.iter().all(|x| *x == G::from_i64(0));
            let keys: Vec<&String> = r.residuals.keys().collect();
            let ok = r.residuals.len() == 4 && r.residuals.values().all(zero) && r.all_zero;
            outcome(ok, format!("residuals zero for {keys:?}"))
        }
        Err(e) => fail(e.to_string()),
    }
}

fn main() {
    let mut tables = BTreeMap::new();
    let results = vec![
        timed(Duration::from_secs(1), criterion_1),
        timed(Duration::from_secs(5), criterion_2),
        criterion_3(&mut tables),
        criterion_4(&tables),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ];
    let mut failed = 0;
    for (k, r) in results.iter().enumerate() {
        println!("criterion {}: {} {}", k + 1, if r.ok { "PASS" } else { "FAIL" }, r.detail);
        failed += usize::from(!r.ok);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
