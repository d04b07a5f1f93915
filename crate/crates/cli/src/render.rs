//! Deterministic document rendering for the three output formats.
//!
//! Text prints polynomials in lexicographic-descending exponent order with
//! explicit signs and ASCII carets. JSON is compact, keys sorted, with
//! arbitrary-precision integers emitted as plain JSON numbers. CSV uses
//! fixed headers.

use num_bigint::BigInt;
use serde_json::{json, Value};

use chowkit_core::chow::ConstraintReport;
use chowkit_core::series::SymSeries;
use chowkit_core::toric::EulerChowSeries;
use chowkit_core::{EPoly, UniPoly};

use crate::Format;

/// Arbitrary-precision integer as a JSON number.
fn jnum(b: &BigInt) -> Value {
    let n: serde_json::Number = b.to_string().parse().expect("integer literal");
    Value::Number(n)
}

fn finish_json(v: Value) -> String {
    let mut out = v.to_string();
    out.push('\n');
    out
}

/// Terms in descending lexicographic order, matching the text rendering.
fn epoly_terms_desc(e: &EPoly) -> Vec<(&(u32, u32), &BigInt)> {
    let mut terms: Vec<_> = e.terms().collect();
    terms.reverse();
    terms
}

fn epoly_terms_json(e: &EPoly) -> Value {
    Value::Array(
        epoly_terms_desc(e)
            .into_iter()
            .map(|(&(p, q), c)| json!({ "p": p, "q": q, "coeff": jnum(c) }))
            .collect(),
    )
}

fn epoly_terms_csv(e: &EPoly, out: &mut String) {
    out.push_str("p,q,coeff\n");
    for (&(p, q), c) in epoly_terms_desc(e) {
        out.push_str(&format!("{},{},{}\n", p, q, c));
    }
}

pub fn epoly(e: &EPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", e),
        Format::Json => finish_json(json!({ "terms": epoly_terms_json(e) })),
        Format::Csv => {
            let mut out = String::new();
            epoly_terms_csv(e, &mut out);
            out
        }
    }
}

pub fn unipoly(p: &UniPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", p),
        Format::Json => {
            let coeffs: Vec<Value> = p
                .coeffs()
                .map(|(&k, c)| json!({ "k": k, "coeff": jnum(c) }))
                .collect();
            finish_json(json!({ "coeffs": coeffs }))
        }
        Format::Csv => {
            let mut out = String::from("k,coeff\n");
            for (&k, c) in p.coeffs() {
                out.push_str(&format!("{},{}\n", k, c));
            }
            out
        }
    }
}

pub fn scalar(name: &str, value: &BigInt, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", value),
        Format::Json => finish_json(json!({ name: jnum(value) })),
        Format::Csv => format!("{}\n{}\n", name, value),
    }
}

pub fn hodge_number(p: u32, q: u32, coeff: &BigInt, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", coeff),
        Format::Json => finish_json(json!({ "p": p, "q": q, "coeff": jnum(coeff) })),
        Format::Csv => format!("p,q,coeff\n{},{},{}\n", p, q, coeff),
    }
}

pub fn betti(p: &UniPoly, format: Format) -> String {
    let dense = p.dense_coeffs();
    match format {
        Format::Text => {
            let mut out = String::new();
            for (k, c) in dense.iter().enumerate() {
                out.push_str(&format!("beta_{} = {}\n", k, c));
            }
            out
        }
        Format::Json => finish_json(json!({ "betti": dense.iter().map(jnum).collect::<Vec<_>>() })),
        Format::Csv => {
            let mut out = String::from("k,betti\n");
            for (k, c) in dense.iter().enumerate() {
                out.push_str(&format!("{},{}\n", k, c));
            }
            out
        }
    }
}

pub fn chow_scalar(
    p: i64,
    d: i64,
    n: i64,
    name: &str,
    value: &BigInt,
    recursion_checked: bool,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = format!("{}\n", value);
            if recursion_checked {
                out.push_str("recursion: agree\n");
            }
            out
        }
        Format::Json => {
            let mut doc = json!({ "p": p, "d": d, "n": n, name: jnum(value) });
            if recursion_checked {
                doc["recursion"] = json!("agree");
            }
            finish_json(doc)
        }
        Format::Csv => {
            if recursion_checked {
                format!(
                    "p,d,n,{},recursion\n{},{},{},{},agree\n",
                    name, p, d, n, value
                )
            } else {
                format!("p,d,n,{}\n{},{},{},{}\n", name, p, d, n, value)
            }
        }
    }
}

pub fn chow2(
    p: i64,
    n: i64,
    e: &EPoly,
    report: Option<&ConstraintReport>,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = format!("{}\n", e);
            if let Some(report) = report {
                for check in &report.checks {
                    out.push_str(&format!("constraint {}: pass\n", check.name));
                }
            }
            out
        }
        Format::Json => {
            let mut doc = json!({ "p": p, "n": n, "terms": epoly_terms_json(e) });
            if let Some(report) = report {
                doc["constraints"] = Value::Array(
                    report
                        .checks
                        .iter()
                        .map(|c| json!({ "name": c.name, "passed": c.passed }))
                        .collect(),
                );
            }
            finish_json(doc)
        }
        Format::Csv => {
            let mut out = String::new();
            epoly_terms_csv(e, &mut out);
            out
        }
    }
}

pub fn sym_series(series: &SymSeries, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (d, e) in series.entries().iter().enumerate() {
                out.push_str(&format!("{}: {}\n", d, e));
            }
            out
        }
        Format::Json => {
            let entries: Vec<Value> = series
                .entries()
                .iter()
                .enumerate()
                .map(|(d, e)| json!({ "d": d, "terms": epoly_terms_json(e) }))
                .collect();
            finish_json(json!({ "dmax": series.dmax(), "entries": entries }))
        }
        Format::Csv => {
            let mut out = String::from("d,p,q,coeff\n");
            for (d, e) in series.entries().iter().enumerate() {
                for (&(p, q), c) in epoly_terms_desc(e) {
                    out.push_str(&format!("{},{},{},{}\n", d, p, q, c));
                }
            }
            out
        }
    }
}

fn class_text(class: &[i64]) -> String {
    let parts: Vec<String> = class.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn euler_chow(series: &EulerChowSeries, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (class, chi) in series.terms() {
                out.push_str(&format!("{} {}\n", class_text(class), chi));
            }
            out
        }
        Format::Json => {
            let terms: Vec<Value> = series
                .terms()
                .iter()
                .map(|(class, chi)| json!({ "class": class, "chi": jnum(chi) }))
                .collect();
            finish_json(json!({
                "p": series.p(),
                "rank": series.rank(),
                "bound": series.bound(),
                "degree_functional": series.degree_functional(),
                "terms": terms,
            }))
        }
        Format::Csv => {
            let mut out = String::from("class,chi\n");
            for (class, chi) in series.terms() {
                let parts: Vec<String> = class.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("{},{}\n", parts.join(" "), chi));
            }
            out
        }
    }
}

pub struct SweepRow {
    pub p: i64,
    pub d: i64,
    pub n: i64,
    pub chi: BigInt,
    pub dim: BigInt,
    pub kollar_bound: BigInt,
}

pub fn sweep(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("p d n chi dim kollar_bound\n");
            for r in rows {
                out.push_str(&format!(
                    "{} {} {} {} {} {}\n",
                    r.p, r.d, r.n, r.chi, r.dim, r.kollar_bound
                ));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "p": r.p,
                        "d": r.d,
                        "n": r.n,
                        "chi": jnum(&r.chi),
                        "dim": jnum(&r.dim),
                        "kollar_bound": jnum(&r.kollar_bound),
                    })
                })
                .collect();
            finish_json(json!({ "rows": rows }))
        }
        Format::Csv => {
            let mut out = String::from("p,d,n,chi,dim,kollar_bound\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.p, r.d, r.n, r.chi, r.dim, r.kollar_bound
                ));
            }
            out
        }
    }
}
