//! Browser bindings. Every entry point takes family shorthands (`P3`, `C5`,
//! `K2`, `T7`) or graph6 strings and returns a JSON string; failures come
//! back as `{"error": "..."}`.

use graphsym::distinguishing::{
    distinguishing_index, distinguishing_number, is_distinguishing_vertex,
};
use graphsym::family::parse_graph_spec;
use graphsym::products::{product, ProductKind};
use graphsym::symmetry::automorphism_group;
use graphsym::theorems::{layer_labeling, sequence_labeling, LayerSide};
use graphsym::{Budget, Graph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

type Result<T> = std::result::Result<T, String>;

fn graph(spec: &str) -> Result<Graph> {
    parse_graph_spec(spec)
        .map(|g| g.graph)
        .map_err(|e| format!("{spec}: {e}"))
}

fn factors(a: &str, b: &str, op: &str) -> Result<(Graph, Graph, Graph)> {
    let (g, h) = (graph(a)?, graph(b)?);
    let kind: ProductKind = op.parse().map_err(|e| format!("{e}"))?;
    let p = product(kind, &g, &h);
    Ok((g, h, p))
}

fn respond(r: Result<Value>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// Grid positions (column = first factor, row = second) and edges.
pub fn layout(a: &str, b: &str, op: &str) -> String {
    respond((|| {
        let (g, h, p) = factors(a, b, op)?;
        let m = h.n();
        let vertices: Vec<Value> = (0..p.n())
            .map(|v| json!({ "x": v / m, "y": v % m }))
            .collect();
        Ok(json!({ "cols": g.n(), "rows": m, "vertices": vertices, "edges": p.edges() }))
    })())
}

/// `kind` is `vertex` for the distinguishing number, `edge` for the index.
pub fn distinguish(a: &str, b: &str, op: &str, kind: &str) -> String {
    let budget = Budget::harness();
    respond((|| {
        let (_, _, p) = factors(a, b, op)?;
        let (bounds, mode, witness) = match kind {
            "vertex" => {
                let d = distinguishing_number(&p, &budget).map_err(|e| e.to_string())?;
                (
                    d.bounds(),
                    d.mode_name(),
                    d.witness().map(|w| w.labels().to_vec()),
                )
            }
            "edge" => {
                let d = distinguishing_index(&p, &budget).map_err(|e| e.to_string())?;
                (d.bounds(), d.mode_name(), d.witness().map(|w| w.to_vec()))
            }
            other => return Err(format!("unknown kind `{other}`")),
        };
        Ok(json!({
            "lo": bounds.map(|b| b.0),
            "hi": bounds.map(|b| b.1),
            "mode": mode,
            "labels": witness,
        }))
    })())
}

/// Labels `a ⊠ b` layer by layer. `method` is `first` or `second` (shifted
/// copies of a distinguishing labeling of that factor) or `sequence`.
pub fn construction(a: &str, b: &str, method: &str) -> String {
    let budget = Budget::harness();
    respond((|| {
        let (g, h, p) = factors(a, b, "strong")?;
        let err = |e: graphsym::Error| e.to_string();
        let labeling = match method {
            "first" | "second" => {
                let (side, factor) = if method == "first" {
                    (LayerSide::First, &g)
                } else {
                    (LayerSide::Second, &h)
                };
                let d = distinguishing_number(factor, &budget).map_err(err)?;
                let phi = d.witness().ok_or("factor has no distinguishing labeling")?;
                layer_labeling(&g, &h, phi, side, &budget).map_err(err)?
            }
            "sequence" => sequence_labeling(&g, &h, &budget).map_err(err)?.labeling,
            other => return Err(format!("unknown method `{other}`")),
        };
        let group = automorphism_group(&p, &budget).map_err(err)?;
        Ok(json!({
            "labels": labeling.labels(),
            "used": labeling.distinct_labels(),
            "distinguishing": is_distinguishing_vertex(&p, &group, &labeling).map_err(err)?,
        }))
    })())
}

#[wasm_bindgen]
pub fn product_layout(a: &str, b: &str, op: &str) -> String {
    layout(a, b, op)
}

#[wasm_bindgen]
pub fn distinguishing_labels(a: &str, b: &str, op: &str, kind: &str) -> String {
    distinguish(a, b, op, kind)
}

#[wasm_bindgen]
pub fn layer_construction(a: &str, b: &str, method: &str) -> String {
    construction(a, b, method)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn layout_of_k2_square() {
        let v = parse(layout("K2", "K2", "strong"));
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        assert_eq!(v["vertices"][3], json!({ "x": 1, "y": 1 }));
    }

    #[test]
    fn labels_for_small_products() {
        let v = parse(distinguish("P2", "P2", "strong", "edge"));
        assert_eq!(
            (v["lo"].as_u64(), v["mode"].as_str()),
            (Some(3), Some("exact"))
        );
        let v = parse(distinguish("P3", "P3", "cartesian", "vertex"));
        assert_eq!(v["labels"].as_array().unwrap().len(), 9);
        let v = parse(distinguish("K2", "K1", "strong", "edge"));
        assert_eq!(v["mode"], "undefined");
    }

    #[test]
    fn constructions_distinguish() {
        for method in ["first", "second", "sequence"] {
            let v = parse(construction("P3", "P4", method));
            assert_eq!(v["distinguishing"], true, "{method}: {v}");
        }
        assert_eq!(parse(construction("P3", "P4", "first"))["used"], 8);
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(layout("Q", "P3", "strong"))["error"].is_string());
        assert!(parse(layout("P3", "P3", "lexicographic"))["error"].is_string());
    }
}
