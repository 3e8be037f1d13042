//! WebAssembly bindings for the browser demo. Each operation has a plain Rust
//! version returning a JSON string, so it can be tested natively; the
//! `#[wasm_bindgen]` wrappers only convert errors into JS exceptions.

use hodge_core::moduli::{e_m3, e_n31_closed_chamber};
use hodge_core::rank2::e_triples21_chamber;
use hodge_core::{HodgeResult, TripleType};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Larger genera are fine natively but make the page unresponsive.
pub const MAX_GENUS: i64 = 12;

fn triple(g: i64, d1: i64, d2: i64, ranks: &str) -> Result<TripleType, String> {
    if !(2..=MAX_GENUS).contains(&g) {
        return Err(format!("genus must be between 2 and {MAX_GENUS}, got {g}"));
    }
    let t = match ranks {
        "31" => TripleType::rank31(g, d1, d2),
        "21" => TripleType::rank21(g, d1, d2),
        other => return Err(format!("ranks must be \"31\" or \"21\", got {other:?}")),
    };
    t.map_err(|e| e.to_string())
}

/// `h^{p,q}` as rows indexed by `p`, read off the polynomial coefficients.
fn diamond(h: &HodgeResult) -> Vec<Vec<String>> {
    (0..=h.dim)
        .map(|p| {
            (0..=h.dim)
                .map(|q| h.poly.coeff(p, q).to_string())
                .collect()
        })
        .collect()
}

fn describe(h: &HodgeResult) -> Value {
    let mut v = h.to_json();
    v["text"] = json!(h.poly.to_string());
    v["betti"] = json!(h
        .diagonal_coefficients()
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>());
    v["diamond"] = json!(diamond(h));
    v
}

/// The open chambers of the σ-range with their midpoints and critical values.
pub fn chambers_json(g: i64, d1: i64, d2: i64, ranks: &str) -> Result<String, String> {
    let t = triple(g, d1, d2, ranks)?;
    let range = t.sigma_range();
    let chambers: Vec<Value> = t
        .chambers()
        .iter()
        .enumerate()
        .map(|(i, (lo, hi))| {
            json!({
                "index": i + 1,
                "lower": lo.to_string(),
                "upper": hi.to_string(),
                "sigma": ((lo + hi) / 2).to_string(),
            })
        })
        .collect();
    Ok(json!({
        "triple": t.to_string(),
        "sigma_m": range.sigma_m.to_string(),
        "sigma_max": range.sigma_max.map(|s| s.to_string()),
        "criticals": range.criticals.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "chambers": chambers,
    })
    .to_string())
}

/// Hodge polynomial, Betti numbers and Hodge diamond of the triples moduli space
/// in the 1-based chamber `chamber`.
pub fn triples_json(
    g: i64,
    d1: i64,
    d2: i64,
    ranks: &str,
    chamber: usize,
) -> Result<String, String> {
    let t = triple(g, d1, d2, ranks)?;
    let h = if ranks == "31" {
        e_n31_closed_chamber(&t, chamber)
    } else {
        e_triples21_chamber(&t, chamber)
    }
    .map_err(|e| e.to_string())?;
    Ok(describe(&h).to_string())
}

/// Hodge polynomial, Betti numbers and Hodge diamond of the rank-3 moduli space.
pub fn m3_json(g: i64) -> Result<String, String> {
    if !(2..=MAX_GENUS).contains(&g) {
        return Err(format!("genus must be between 2 and {MAX_GENUS}, got {g}"));
    }
    let h = e_m3(g as u32).map_err(|e| e.to_string())?;
    Ok(describe(&h).to_string())
}

#[wasm_bindgen]
pub fn chambers(g: i32, d1: i32, d2: i32, ranks: &str) -> Result<String, JsError> {
    chambers_json(g.into(), d1.into(), d2.into(), ranks).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn triples(g: i32, d1: i32, d2: i32, ranks: &str, chamber: u32) -> Result<String, JsError> {
    triples_json(g.into(), d1.into(), d2.into(), ranks, chamber as usize)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn m3(g: i32) -> Result<String, JsError> {
    m3_json(g.into()).map_err(|e| JsError::new(&e))
}
