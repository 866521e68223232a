//! Browser bindings for three interactive operations: the Newton polyhedron
//! and log canonical threshold of a monomial ideal, its multiplier ideals,
//! and a generic link with the full check suite.
//!
//! Every export returns a JSON string. The plain Rust functions behind the
//! exports are public so they can be tested natively.

use genlink::linkage::{generic_link, run_link_checks, Annotations, CheckOutcome, Situation};
use genlink::{
    lct, multiplier_ideal, newton_polyhedron, parse_ring_file, projective_lct, Ideal, Monomial, MonomialIdeal,
    PrimeField, DEFAULT_PRIME,
};
use num_rational::Rational64;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest seed accepted from JavaScript numbers without loss.
const MAX_SAFE_SEED: f64 = 9_007_199_254_740_991.0;

#[derive(Serialize)]
struct FacetInfo {
    normal: Vec<i64>,
    rhs: i64,
    /// `Σ a_i / b`, the coefficient at which `(1,..,1)` reaches this facet.
    threshold: String,
}

#[derive(Serialize)]
struct NewtonInfo {
    vars: Vec<String>,
    generators: Vec<Vec<u32>>,
    facets: Vec<FacetInfo>,
    lct: String,
    projective_lct: Option<String>,
}

#[derive(Serialize)]
struct MultiplierInfo {
    c: String,
    generators: Vec<Vec<u32>>,
    display: Vec<String>,
    trivial: bool,
}

#[derive(Serialize)]
struct LinkInfo {
    situation: String,
    degrees: Vec<u64>,
    iv: Vec<String>,
    iy: Vec<String>,
    empty: bool,
    retries: usize,
    checks: Vec<CheckOutcome>,
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).expect("default prime")
}

fn monomial_ideal(vars: &str, gens: &str) -> Result<(Vec<String>, MonomialIdeal), String> {
    let names: Vec<String> = vars.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err("no variables".into());
    }
    let text = format!("ring R over Fp({DEFAULT_PRIME}) vars {}\nideal a = {gens}\n", names.join(" "));
    let file = parse_ring_file(&text).map_err(err)?.build(field()).map_err(err)?;
    let ideal = Ideal::new(&file.ring, file.first().1.to_vec());
    let m = ideal.as_monomial().ok_or("generators must be monomials")?;
    Ok((names, m))
}

fn show(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn exponents(m: &MonomialIdeal) -> Vec<Vec<u32>> {
    m.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

/// Facets, affine lct and (for two or more variables) projective lct.
pub fn newton_json(vars: &str, gens: &str) -> Result<String, String> {
    let (names, a) = monomial_ideal(vars, gens)?;
    let p = newton_polyhedron(&a).map_err(err)?;
    let info = NewtonInfo {
        generators: exponents(&a),
        facets: p
            .facets()
            .iter()
            .map(|f| FacetInfo {
                normal: f.normal.clone(),
                rhs: f.rhs,
                threshold: f.threshold().to_string(),
            })
            .collect(),
        lct: lct(&a).map_err(err)?.to_string(),
        projective_lct: if names.len() >= 2 {
            projective_lct(&a).ok().map(|q| q.to_string())
        } else {
            None
        },
        vars: names,
    };
    serde_json::to_string(&info).map_err(err)
}

/// Generators of `J(c·a)`; `c` is an integer or `p/q`.
pub fn multiplier_json(vars: &str, gens: &str, c: &str) -> Result<String, String> {
    let (names, a) = monomial_ideal(vars, gens)?;
    let c: Rational64 = c.trim().parse().map_err(|_| format!("{c:?} is not a rational number"))?;
    if c < Rational64::from_integer(0) {
        return Err("c must be nonnegative".into());
    }
    let j = multiplier_ideal(&a, c).map_err(err)?;
    let info = MultiplierInfo {
        c: c.to_string(),
        generators: exponents(&j),
        display: j.gens().iter().map(|g| show(g, &names)).collect(),
        trivial: j.is_unit(),
    };
    serde_json::to_string(&info).map_err(err)
}

/// One generic link of the first ideal in `file` (ideal-file grammar) over `F_32003`.
pub fn link_json(file: &str, situation: &str, seed: u64) -> Result<String, String> {
    let situation: Situation = situation.parse().map_err(err)?;
    let parsed = parse_ring_file(file).map_err(err)?.build(field()).map_err(err)?;
    let ix = Ideal::new(&parsed.ring, parsed.first().1.to_vec());
    let link = generic_link(&ix, situation, seed).map_err(err)?;
    let checks = run_link_checks(&ix, &link, &Annotations::default(), false).map_err(err)?;
    let gens = |i: &Ideal<PrimeField>| i.gens().iter().map(|g| g.to_string()).collect();
    let info = LinkInfo {
        situation: link.situation.to_string(),
        degrees: link.degrees.clone(),
        iv: gens(&link.iv),
        iy: if link.empty { vec!["1".into()] } else { gens(&link.iy) },
        empty: link.empty,
        retries: link.retries,
        checks,
    };
    serde_json::to_string(&info).map_err(err)
}

#[wasm_bindgen(js_name = newtonPolyhedron)]
pub fn newton_polyhedron_js(vars: &str, gens: &str) -> Result<String, JsError> {
    newton_json(vars, gens).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = multiplierIdeal)]
pub fn multiplier_ideal_js(vars: &str, gens: &str, c: &str) -> Result<String, JsError> {
    multiplier_json(vars, gens, c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = genericLink)]
pub fn generic_link_js(file: &str, situation: &str, seed: f64) -> Result<String, JsError> {
    if !(0.0..=MAX_SAFE_SEED).contains(&seed) || seed.fract() != 0.0 {
        return Err(JsError::new("seed must be a nonnegative integer below 2^53"));
    }
    link_json(file, situation, seed as u64).map_err(|e| JsError::new(&e))
}
