//! Browser bindings: local complementation, pivoting and depth parameters
//! on graphs passed as graph6 strings.

use serde_json::json;
use wasm_bindgen::prelude::*;

use vminor::depth::{bsc_depth, sc_depth, tree_depth, SHRUB_SEARCH_LIMIT, TREE_DEPTH_LIMIT};
use vminor::graph6::{from_graph6, to_graph6};
use vminor::{Error, Graph};

fn parse(g6: &str) -> Result<Graph, JsError> {
    from_graph6(g6.trim()).map_err(js)
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

/// `{"n": .., "edges": [[u, v], ..]}` for drawing.
#[wasm_bindgen]
pub fn graph_info(g6: &str) -> Result<String, JsError> {
    let g = parse(g6)?;
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    Ok(json!({ "n": g.n(), "edges": edges }).to_string())
}

#[wasm_bindgen]
pub fn toggle_edge(g6: &str, u: usize, v: usize) -> Result<String, JsError> {
    let mut g = parse(g6)?;
    g.check_vertex(u).map_err(js)?;
    g.check_vertex(v).map_err(js)?;
    if u != v {
        let present = g.has_edge(u, v);
        g.set_edge(u, v, !present);
    }
    Ok(to_graph6(&g))
}

#[wasm_bindgen]
pub fn local_complement(g6: &str, v: usize) -> Result<String, JsError> {
    let g = parse(g6)?;
    Ok(to_graph6(&g.local_complement(v).map_err(js)?))
}

#[wasm_bindgen]
pub fn pivot(g6: &str, u: usize, v: usize) -> Result<String, JsError> {
    let g = parse(g6)?;
    Ok(to_graph6(&g.pivot_edge(u, v).map_err(js)?))
}

/// Tree-depth, SC-depth and BSC-depth as JSON; values beyond the search
/// limits are `null`.
#[wasm_bindgen]
pub fn depths(g6: &str) -> Result<String, JsError> {
    let g = parse(g6)?;
    let td = (g.n() <= TREE_DEPTH_LIMIT)
        .then(|| tree_depth(&g))
        .transpose()
        .map_err(js)?;
    let small = g.n() <= SHRUB_SEARCH_LIMIT;
    let sc = small.then(|| sc_depth(&g)).transpose().map_err(js)?;
    let bsc = small.then(|| bsc_depth(&g)).transpose().map_err(js)?;
    Ok(json!({
        "td": td.as_ref().map(|t| t.0),
        "forest": td.map(|t| t.1.parent),
        "sc_depth": sc.map(|s| s.0),
        "bsc_depth": bsc.map(|b| b.0),
    })
    .to_string())
}
