//! wasm-bindgen front end for the static explorer in `www/`.
//!
//! Every export returns a JSON string; errors surface as thrown JS `Error`s.
//! The `*_json` functions hold the logic so native tests can reach it.

use normcone::{NumericalSemigroup, ZariskiParams};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Keeps the heatmap cheap enough to redraw on every input event.
pub const GRID_MAX_A: u64 = 40;
pub const GRID_MAX_B: u64 = 240;
const HYPERSURFACE_MAX: (u64, u64, u64) = (500, 5_000, 8);
const SEMIGROUP_MAX_GENERATORS: usize = 12;
const SEMIGROUP_MAX_ENTRY: u64 = 5_000;

pub fn hypersurface_json(a: u64, b: u64, m: u64) -> Result<String, String> {
    let (max_a, max_b, max_m) = HYPERSURFACE_MAX;
    if a > max_a || b > max_b || m > max_m {
        return Err(format!("browser limits are a <= {max_a}, b <= {max_b}, m <= {max_m}"));
    }
    let p = ZariskiParams::build(a, b, m).map_err(|e| e.to_string())?;
    let report = p.analyze().map_err(|e| e.to_string())?;
    // exponents of the minimal monomials x^k y^(n_k), for the staircase plot
    let staircase: Vec<[u64; 2]> = (0..a).map(|k| [k, if k == 0 { 0 } else { p.n_k(k) }]).collect();
    let doc = json!({ "report": report, "staircase": staircase });
    Ok(doc.to_string())
}

pub fn parse_generators(text: &str) -> Result<Vec<u64>, String> {
    let gens = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| format!("`{t}` is not a positive integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.len() > SEMIGROUP_MAX_GENERATORS {
        return Err(format!("at most {SEMIGROUP_MAX_GENERATORS} generators in the browser"));
    }
    if let Some(&g) = gens.iter().find(|&&g| g > SEMIGROUP_MAX_ENTRY) {
        return Err(format!("generator {g} is above the browser limit {SEMIGROUP_MAX_ENTRY}"));
    }
    Ok(gens)
}

pub fn semigroup_json(text: &str) -> Result<String, String> {
    let gens = parse_generators(text)?;
    let s = NumericalSemigroup::build(&gens).map_err(|e| e.to_string())?;
    let report = s.analyze().map_err(|e| e.to_string())?;
    // membership strip up to a little past the conductor
    let width = (s.frobenius() + 1).max(0) as u64 + s.multiplicity();
    let members: Vec<bool> = (0..width as i64).map(|x| s.contains(x)).collect();
    Ok(json!({ "report": report, "members": members }).to_string())
}

/// Ring class of the normal tangent cone for every `2 <= a <= a_max`,
/// `a <= b <= b_max` (one variable `y`; the class does not depend on `m`).
/// Cells with `b < a` are `null`.
pub fn grid_json(a_max: u64, b_max: u64) -> Result<String, String> {
    if !(2..=GRID_MAX_A).contains(&a_max) || !(2..=GRID_MAX_B).contains(&b_max) {
        return Err(format!("need 2 <= a_max <= {GRID_MAX_A} and 2 <= b_max <= {GRID_MAX_B}"));
    }
    let rows: Vec<Vec<Option<serde_json::Value>>> = (2..=a_max)
        .map(|a| {
            (2..=b_max)
                .map(|b| {
                    let p = ZariskiParams::build(a, b, 1).ok()?;
                    let g = p.gorenstein_verdict();
                    Some(json!({
                        "gorenstein": g.gorenstein,
                        "class": g.ring_class.id(),
                        "max_emb": p.max_embedding_dimension(),
                        "r": p.normal_reduction_number(),
                    }))
                })
                .collect()
        })
        .collect();
    Ok(json!({ "a_max": a_max, "b_max": b_max, "rows": rows }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hypersurface_report(a: u32, b: u32, m: u32) -> Result<String, JsError> {
    js(hypersurface_json(a.into(), b.into(), m.into()))
}

#[wasm_bindgen]
pub fn semigroup_report(generators: &str) -> Result<String, JsError> {
    js(semigroup_json(generators))
}

#[wasm_bindgen]
pub fn gorenstein_grid(a_max: u32, b_max: u32) -> Result<String, JsError> {
    js(grid_json(a_max.into(), b_max.into()))
}
