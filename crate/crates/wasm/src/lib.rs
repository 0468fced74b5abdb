//! Browser bindings: each export takes plain numbers or strings and returns
//! a JSON string for the demo page in `www/`.

use kacpoly::asymptotics::verify_asymptotics;
use kacpoly::closedform::{a_one, a_one_rho_poly};
use kacpoly::hua::refine;
use kacpoly::Partition;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `|λ|` the page will request; keeps each call well under a second.
pub const MAX_NMAX: u32 = 6;

#[derive(Serialize)]
struct Row {
    lambda: String,
    polynomial: String,
    nonnegative: bool,
    at_one: String,
    closed_form: Option<String>,
}

#[derive(Serialize)]
struct Table {
    g: u32,
    rows: Vec<Row>,
    totals: Vec<String>,
}

fn to_js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(to_js)
}

pub fn refined_table_json(g: u32, nmax: u32) -> Result<String, String> {
    if !(1..=4).contains(&g) || !(1..=MAX_NMAX).contains(&nmax) {
        return Err(format!("need 1 <= g <= 4 and 1 <= nmax <= {MAX_NMAX}"));
    }
    let table = refine(g, nmax).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for entry in table.entries() {
        let closed = if g >= 2 {
            Some(a_one(2 * g - 2, &entry.partition).map_err(|e| e.to_string())?.to_string())
        } else {
            None
        };
        rows.push(Row {
            lambda: entry.partition.to_string(),
            polynomial: entry.value.render("q"),
            nonnegative: entry.is_nonnegative(),
            at_one: entry.at_one().map_err(|e| e.to_string())?.to_string(),
            closed_form: closed,
        });
    }
    let totals = (1..=nmax).filter_map(|n| table.total(n).map(|v| v.render("q"))).collect();
    serde_json::to_string(&Table { g, rows, totals }).map_err(|e| e.to_string())
}

/// `A_λ(q)` for every `|λ| <= nmax` at genus `g`.
#[wasm_bindgen]
pub fn refined_table(g: u32, nmax: u32) -> Result<String, JsError> {
    refined_table_json(g, nmax).map_err(to_js)
}

/// `A_λ(1)` at a given `ρ`, together with its polynomial in `ρ`.
#[wasm_bindgen]
pub fn closed_form(lambda: &str, rho: u32) -> Result<String, JsError> {
    #[derive(Serialize)]
    struct Out {
        lambda: String,
        rho: u32,
        value: String,
        rho_poly: String,
    }
    let partition: Partition = lambda.trim().parse().map_err(to_js)?;
    if partition.size() > 12 {
        return Err(JsError::new("keep |λ| <= 12"));
    }
    let value = a_one(rho, &partition).map_err(to_js)?;
    let poly = a_one_rho_poly(&partition).map_err(to_js)?;
    json(&Out { lambda: partition.to_string(), rho, value: value.to_string(), rho_poly: poly.render() })
}

/// The fitted and closed-form asymptotic constants, with the sample points.
#[wasm_bindgen]
pub fn asymptotics(a: f64, t: f64) -> Result<String, JsError> {
    json(&verify_asymptotics(a, t).map_err(to_js)?)
}
