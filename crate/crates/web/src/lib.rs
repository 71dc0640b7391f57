//! wasm-bindgen bindings for the demo page in `www/`. Every export takes a
//! graph6 string and returns JSON text; the `*_json` functions are the same
//! operations as plain Rust for native tests.

use alphacrit::cover::{rho_tilde, COVER_MAX_N};
use alphacrit::prooflab::{theorem2_applies, Triangle};
use alphacrit::{
    alpha, critical_edges, critical_subgraph, find_tok4, parse_graph6, peel_max_stable_set, to_graph6, Edge, Graph,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// The demo draws on a circle; past this it gets unreadable and slow.
pub const DEMO_MAX_N: usize = 12;

fn load(graph6: &str) -> Result<Graph, String> {
    let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    if g.n() > DEMO_MAX_N {
        return Err(format!("the demo handles up to {DEMO_MAX_N} vertices, got {}", g.n()));
    }
    Ok(g)
}

fn pairs(edges: &[Edge]) -> Value {
    edges.iter().map(|e| json!([e.u, e.v])).collect()
}

/// Stability number, one maximum stable set, critical edges, a totally odd
/// K4-subdivision if any, and an optimal cover when small enough.
pub fn analyze_json(graph6: &str) -> Result<String, String> {
    let g = load(graph6)?;
    let ec = critical_edges(&g);
    let cover = if g.n() <= COVER_MAX_N {
        let (cost, family) = rho_tilde(&g).map_err(|e| e.to_string())?;
        json!({ "cost_times_2": cost, "family": family })
    } else {
        Value::Null
    };
    let out = json!({
        "graph6": to_graph6(&g),
        "n": g.n(),
        "edges": pairs(&g.edges()),
        "alpha": alpha(&g),
        "stable_set": peel_max_stable_set(&g).set,
        "critical_edges": pairs(&ec.edges),
        "alpha_critical": ec.len() == g.m(),
        "tok4": find_tok4(&g),
        "cover": cover,
    });
    Ok(out.to_string())
}

/// Edges of the critical subgraph, i.e. what survives repeated deletion of
/// non-critical edges.
pub fn critical_subgraph_json(graph6: &str) -> Result<String, String> {
    let g = load(graph6)?;
    let h = critical_subgraph(&g);
    Ok(json!({ "graph6": to_graph6(&h), "edges": pairs(&h.edges()), "alpha": alpha(&h) }).to_string())
}

/// For every triangle: which single-vertex deletions still contain a
/// totally odd K4-subdivision, with the certificate.
pub fn triangle_deletions_json(graph6: &str) -> Result<String, String> {
    let g = load(graph6)?;
    let mut memo = vec![None; g.n()];
    let mut rows = Vec::new();
    for t in Triangle::all(&g) {
        let deletions: Vec<Value> = t
            .vertices()
            .into_iter()
            .map(|x| {
                let cert = memo[x]
                    .get_or_insert_with(|| {
                        let (h, map) = g.delete_vertex(x).expect("vertex of g");
                        find_tok4(&h).map(|c| c.relabel(|v| map.to_old(v)))
                    })
                    .clone();
                json!({ "vertex": x, "certificate": cert })
            })
            .collect();
        rows.push(json!({ "triangle": t.vertices(), "deletions": deletions }));
    }
    Ok(json!({ "hypothesis": theorem2_applies(&g), "triangles": rows }).to_string())
}

/// Adds or removes `uv`; the page uses this for click editing.
pub fn toggle_edge_code(graph6: &str, u: usize, v: usize) -> Result<String, String> {
    let g = load(graph6)?;
    if u == v || u >= g.n() || v >= g.n() {
        return Err(format!("no edge {u}-{v} on {} vertices", g.n()));
    }
    let e = Edge::new(u, v);
    let h = if g.has_edge(u, v) { g.delete_edge(e) } else { g.add_edge(e) };
    Ok(to_graph6(&h.map_err(|e| e.to_string())?))
}

#[wasm_bindgen]
pub fn analyze(graph6: &str) -> Result<String, JsError> {
    analyze_json(graph6).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = criticalSubgraph)]
pub fn critical_subgraph_js(graph6: &str) -> Result<String, JsError> {
    critical_subgraph_json(graph6).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = triangleDeletions)]
pub fn triangle_deletions(graph6: &str) -> Result<String, JsError> {
    triangle_deletions_json(graph6).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = toggleEdge)]
pub fn toggle_edge(graph6: &str, u: usize, v: usize) -> Result<String, JsError> {
    toggle_edge_code(graph6, u, v).map_err(|e| JsError::new(&e))
}
