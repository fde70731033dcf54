//! Named graphs and the family shorthands accepted wherever a graph is
//! expected: `P5`, `C6`, `K4`, `T7` (the asymmetric tree), and binary
//! products such as `P3xP4s` (suffix `s` strong, `c` Cartesian, `d` direct).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{self, Format};
use crate::graph::{self, Graph};
use crate::products::{product, ProductKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "family", content = "order")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    AsymmetricTree,
    Other,
}

/// A graph with a display name and the prime flag the harness relies on.
///
/// Primality with respect to the strong product is declared, never decided:
/// paths on at least 3 vertices, cycles on at least 5 and the asymmetric tree
/// are declared prime; anything else only when the corpus says so.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub family: Family,
    pub declared_prime: bool,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph, declared_prime: bool) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
            family: Family::Other,
            declared_prime,
        }
    }

    pub fn path(n: usize) -> Self {
        NamedGraph {
            name: format!("P{n}"),
            graph: graph::path(n),
            family: Family::Path(n),
            declared_prime: n >= 3,
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Ok(NamedGraph {
            name: format!("C{n}"),
            graph: graph::cycle(n)?,
            family: Family::Cycle(n),
            declared_prime: n >= 5,
        })
    }

    pub fn complete(n: usize) -> Self {
        NamedGraph {
            name: format!("K{n}"),
            graph: graph::complete(n),
            family: Family::Complete(n),
            declared_prime: false,
        }
    }

    pub fn asymmetric_tree() -> Self {
        NamedGraph {
            name: "T7".into(),
            graph: graph::asymmetric_tree(),
            family: Family::AsymmetricTree,
            declared_prime: true,
        }
    }
}

/// Parses a single-family shorthand such as `P5`.
pub fn parse_family(s: &str) -> Option<Result<NamedGraph>> {
    let s = s.trim();
    if s == "T7" {
        return Some(Ok(NamedGraph::asymmetric_tree()));
    }
    let mut chars = s.chars();
    let kind = chars.next()?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    let bad = |what: &str| Some(Err(Error::Parse(format!("{what} needs a positive order"))));
    match kind {
        'P' if n == 0 => bad("path"),
        'K' if n == 0 => bad("complete graph"),
        'P' => Some(Ok(NamedGraph::path(n))),
        'C' => Some(NamedGraph::cycle(n)),
        'K' => Some(Ok(NamedGraph::complete(n))),
        _ => None,
    }
}

/// Splits a product shorthand `AxB<kind>` into its factors and product kind.
pub fn parse_product(s: &str) -> Option<Result<(NamedGraph, NamedGraph, ProductKind)>> {
    let s = s.trim();
    let kind = match s.chars().last()? {
        's' => ProductKind::Strong,
        'c' => ProductKind::Cartesian,
        'd' => ProductKind::Direct,
        _ => return None,
    };
    let body = &s[..s.len() - 1];
    let (a, b) = body.split_once('x')?;
    let a = parse_family(a)?;
    let b = parse_family(b)?;
    Some(a.and_then(|a| b.map(|b| (a, b, kind))))
}

/// Shorthand, product shorthand, or graph6/edge-list text.
pub fn parse_graph_spec(s: &str) -> Result<NamedGraph> {
    if let Some(g) = parse_family(s) {
        return g;
    }
    if let Some(p) = parse_product(s) {
        let (a, b, kind) = p?;
        let g = product(kind, &a.graph, &b.graph);
        return Ok(NamedGraph::new(
            format!("{}{}{}", a.name, kind.symbol(), b.name),
            g,
            false,
        ));
    }
    let bytes = s.as_bytes();
    let g = format::parse(bytes, format::detect(bytes))?;
    let name = match format::detect(bytes) {
        Format::Graph6 => s.trim().trim_start_matches(">>graph6<<").to_string(),
        Format::EdgeList => format!("edgelist[{}]", g.n()),
    };
    Ok(NamedGraph::new(name, g, false))
}
