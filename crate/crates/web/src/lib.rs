//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string. The plain functions below the
//! bindings do the work and are usable (and tested) natively.

use kfcrit_core::families::{extremal_for, threshold};
use kfcrit_core::format::{decode_graph6, encode_graph6};
use kfcrit_core::spectral::{spectral_radius, COMPUTE_TOLERANCE};
use kfcrit_core::verify::{analyze_graph, GraphAnalysis};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the demo accepts for the exponential deciders.
pub const DEMO_MAX_ORDER: usize = 16;

#[derive(Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub n: usize,
    pub regime: String,
    pub threshold: f64,
    /// `ρ(K_n) = n − 1`, for scale.
    pub complete_rho: f64,
}

#[derive(Debug, PartialEq, Serialize)]
pub struct ExtremalView {
    pub name: String,
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub threshold: f64,
    pub rho: f64,
    pub blocks: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo types serialize")
}

/// Thresholds for every admissible order `k + 4 ≤ n ≤ n_max` of the
/// parity of `k`.
pub fn threshold_curve_points(k: usize, n_max: usize) -> Result<Vec<CurvePoint>, String> {
    if n_max > 64 {
        return Err(format!("n_max = {n_max} exceeds 64"));
    }
    (k + 4..=n_max)
        .step_by(2)
        .map(|n| {
            let t = threshold(n, k).map_err(|e| e.to_string())?;
            Ok(CurvePoint { n, regime: t.regime.to_string(), threshold: t.value, complete_rho: (n - 1) as f64 })
        })
        .collect()
}

pub fn extremal_view(n: usize, k: usize) -> Result<ExtremalView, String> {
    let t = threshold(n, k).map_err(|e| e.to_string())?;
    let fam = extremal_for(n, k).map_err(|e| e.to_string())?;
    Ok(ExtremalView {
        name: fam.name.clone(),
        graph6: encode_graph6(&fam.graph).map_err(|e| e.to_string())?,
        n,
        k,
        threshold: t.value,
        rho: spectral_radius(&fam.graph, COMPUTE_TOLERANCE).map_err(|e| e.to_string())?,
        blocks: fam.partition.blocks().iter().map(|b| b.to_vec()).collect(),
        edges: fam.graph.edges().collect(),
    })
}

/// Analysis of a graph6 string; `k` is skipped when `None`.
pub fn analysis(graph6: &str, k: Option<usize>) -> Result<GraphAnalysis, String> {
    let g = decode_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    if k.is_some() && g.order() > DEMO_MAX_ORDER {
        return Err(format!("order {} exceeds the demo limit {DEMO_MAX_ORDER}", g.order()));
    }
    analyze_graph(&g, k).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn threshold_curve(k: usize, n_max: usize) -> Result<String, JsError> {
    threshold_curve_points(k, n_max).map(|p| to_json(&p)).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn extremal_graph(n: usize, k: usize) -> Result<String, JsError> {
    extremal_view(n, k).map(|v| to_json(&v)).map_err(|e| JsError::new(&e))
}

/// `k < 0` skips the criticality deciders.
#[wasm_bindgen]
pub fn analyze(graph6: &str, k: i32) -> Result<String, JsError> {
    let k = usize::try_from(k).ok();
    analysis(graph6, k).map(|a| to_json(&a)).map_err(|e| JsError::new(&e))
}
