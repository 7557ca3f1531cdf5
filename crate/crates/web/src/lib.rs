//! Browser bindings. Each export returns a JSON string; the plain functions
//! underneath are what the native tests exercise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use nzagreb::closed_forms::{example_formula, FormulaId, Params};
use nzagreb::families::Family;
use nzagreb::indices::compute;
use nzagreb::qspr::{
    octane_points, octane_regression, supplemented_regression, Property, RegressionResult,
};
use nzagreb::verify::{verify, VerifyOptions};
use nzagreb::IndexId;

/// Largest graph the page will evaluate; Harary needs all-pairs BFS.
pub const DEMO_MAX_ORDER: usize = 4000;

fn example_for(family: Family, n: usize, m: usize, sizes: &[usize]) -> Option<(FormulaId, Params)> {
    let pair = Params::Pair { m, n };
    Some(match family {
        Family::Ladder => (FormulaId::ExLadder, Params::Single(n)),
        Family::Prism => (FormulaId::ExPrism, Params::Single(n)),
        Family::Hypercube => (FormulaId::ExHypercube, Params::Single(n)),
        Family::Fence => (FormulaId::ExFence, Params::Single(n)),
        Family::ClosedFence => (FormulaId::ExClosedFence, Params::Single(n)),
        Family::Grid => (FormulaId::ExGrid, pair),
        Family::Nanotube => (FormulaId::ExNanotube, pair),
        Family::Nanotorus => (FormulaId::ExNanotorus, pair),
        Family::Rook => (FormulaId::ExRook, pair),
        Family::Hamming => (FormulaId::Hamming, Params::Sizes(sizes.to_vec())),
        Family::Path | Family::Cycle | Family::Complete => return None,
    })
}

fn parse_sizes(sizes: &str) -> Result<Vec<usize>, String> {
    sizes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad size {s:?}")))
        .collect()
}

/// Every index of a family member, plus the printed closed form next to the
/// brute-force M_N where the family has one.
pub fn family_report_json(family: &str, n: usize, m: usize, sizes: &str) -> Result<String, String> {
    let family: Family = family
        .parse()
        .map_err(|e: nzagreb::families::FamilyError| e.to_string())?;
    let sizes = parse_sizes(sizes)?;
    let g = family
        .build(Some(n), Some(m), &sizes)
        .map_err(|e| e.to_string())?;
    if g.order() > DEMO_MAX_ORDER {
        return Err(format!(
            "{} vertices is more than the demo evaluates ({DEMO_MAX_ORDER})",
            g.order()
        ));
    }
    let mut indices = serde_json::Map::new();
    for id in IndexId::ALL {
        let value = compute(&g, id)
            .map(|v| Value::String(v.render(6)))
            .unwrap_or(Value::Null);
        indices.insert(id.as_str().to_string(), value);
    }
    let oracle = indices["MN"].clone();
    let closed = example_for(family, n, m, &sizes).and_then(|(id, params)| {
        let eval = example_formula(id, &params).ok()?;
        Some(json!({
            "formula": id.as_str(),
            "printed": id.printed(),
            "value": eval.value.to_string(),
            "out_of_stated_range": eval.out_of_stated_range,
            "agrees": Value::String(eval.value.to_string()) == oracle,
        }))
    });
    Ok(json!({
        "family": family.as_str(),
        "order": g.order(),
        "size": g.size(),
        "indices": indices,
        "closed_form": closed,
    })
    .to_string())
}

/// Status and first disagreement of one formula check.
pub fn verify_json(formula: &str, seed: u64, trials: usize) -> Result<String, String> {
    let id: FormulaId = formula
        .parse()
        .map_err(|e: nzagreb::closed_forms::FormulaError| e.to_string())?;
    let report = verify(
        id,
        &VerifyOptions {
            seed,
            trials,
            ..Default::default()
        },
    );
    Ok(json!({
        "formula": id.as_str(),
        "status": report.status.to_string(),
        "compared": report.compared(),
        "nonzero": report.nonzero_deltas(),
        "summary": report.summary(),
    })
    .to_string())
}

fn fit_json(fit: &RegressionResult) -> Value {
    json!({
        "n": fit.n,
        "r": fit.r,
        "r_squared": fit.r_squared,
        "slope": fit.slope,
        "intercept": fit.intercept,
    })
}

/// Scatter points and both fits for one octane property.
pub fn qspr_json(property: &str) -> Result<String, String> {
    let property: Property = property.parse()?;
    let points: Vec<[f64; 2]> = octane_points(property)
        .into_iter()
        .map(|(x, y)| [x, y])
        .collect();
    Ok(json!({
        "property": property.as_str(),
        "points": points,
        "table_fit": fit_json(&octane_regression(property)),
        "supplemented_fit": fit_json(&supplemented_regression(property)),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn family_report(family: &str, n: u32, m: u32, sizes: &str) -> Result<String, JsError> {
    family_report_json(family, n as usize, m as usize, sizes).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify_formula(formula: &str, seed: u32, trials: u32) -> Result<String, JsError> {
    verify_json(formula, u64::from(seed), trials as usize).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn qspr(property: &str) -> Result<String, JsError> {
    qspr_json(property).map_err(|e| JsError::new(&e))
}
