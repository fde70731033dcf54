//! Cartesian, direct and strong products, strong powers, and layers.
//!
//! Product vertices are flattened row-major over the factor order, so the
//! binary product vertex `(g, h)` has index `g * |V(H)| + h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which graph product to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
}

impl ProductKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Direct => "×",
            ProductKind::Strong => "⊠",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "c" => Ok(ProductKind::Cartesian),
            "direct" | "tensor" | "d" => Ok(ProductKind::Direct),
            "strong" | "s" => Ok(ProductKind::Strong),
            other => Err(Error::Parse(format!("unknown product {other:?}"))),
        }
    }
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    match kind {
        ProductKind::Cartesian => cartesian_product(g, h),
        ProductKind::Direct => direct_product(g, h),
        ProductKind::Strong => strong_product(g, h),
    }
}

fn build(g: &Graph, h: &Graph, keep: impl Fn(bool, bool, bool, bool) -> bool) -> Graph {
    let m = h.n();
    Graph::from_fn(g.n() * m, |a, b| {
        let (g1, h1) = (a / m, a % m);
        let (g2, h2) = (b / m, b % m);
        keep(g1 == g2, g.has_edge(g1, g2), h1 == h2, h.has_edge(h1, h2))
    })
}

/// `G □ H`: one coordinate equal, the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    build(g, h, |ge, ga, he, ha| (ge && ha) || (ga && he))
}

/// `G × H`: both coordinates adjacent.
pub fn direct_product(g: &Graph, h: &Graph) -> Graph {
    build(g, h, |_, ga, _, ha| ga && ha)
}

/// `G ⊠ H`: union of the Cartesian and direct edge sets.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    build(g, h, |ge, ga, he, ha| {
        (ge || ga) && (he || ha) && !(ge && he)
    })
}

/// Left-associated `k`-th strong power; `k = 1` returns a copy of `G`.
pub fn strong_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = strong_product(&acc, g);
    }
    Ok(acc)
}

/// A vertex of a k-ary product: its factor coordinates and flattened index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProductVertex {
    pub coords: Vec<usize>,
    pub flat: usize,
}

impl ProductVertex {
    pub fn from_coords(orders: &[usize], coords: &[usize]) -> Result<Self> {
        if coords.len() != orders.len() {
            return Err(Error::SizeMismatch {
                expected: orders.len(),
                actual: coords.len(),
            });
        }
        let mut flat = 0;
        for (&c, &n) in coords.iter().zip(orders) {
            if c >= n {
                return Err(Error::VertexOutOfRange { vertex: c, n });
            }
            flat = flat * n + c;
        }
        Ok(ProductVertex {
            coords: coords.to_vec(),
            flat,
        })
    }

    pub fn from_flat(orders: &[usize], flat: usize) -> Result<Self> {
        let total: usize = orders.iter().product();
        if flat >= total {
            return Err(Error::VertexOutOfRange {
                vertex: flat,
                n: total,
            });
        }
        let mut coords = vec![0; orders.len()];
        let mut rest = flat;
        for (slot, &n) in coords.iter_mut().zip(orders).rev() {
            *slot = rest % n;
            rest /= n;
        }
        Ok(ProductVertex { coords, flat })
    }

    /// Projection onto factor `i`.
    pub fn project(&self, i: usize) -> usize {
        self.coords[i]
    }
}

/// The `G_i`-layer through an anchor vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub factor_index: usize,
    pub anchor: ProductVertex,
    /// Flat indices ordered by the varying coordinate.
    pub vertices: Vec<usize>,
}

/// Layer of the product built from `orders` (factor orders, in factor order)
/// through `anchor`, varying coordinate `i`.
pub fn layer(orders: &[usize], i: usize, anchor: &ProductVertex) -> Result<Layer> {
    if i >= orders.len() {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            n: orders.len(),
        });
    }
    let anchor = ProductVertex::from_coords(orders, &anchor.coords)?;
    let stride: usize = orders[i + 1..].iter().product();
    let base = anchor.flat - anchor.coords[i] * stride;
    let vertices = (0..orders[i]).map(|x| base + x * stride).collect();
    Ok(Layer {
        factor_index: i,
        anchor,
        vertices,
    })
}

/// All distinct layers for factor `i`, ordered by anchor.
pub fn layers(orders: &[usize], i: usize) -> Result<Vec<Layer>> {
    let total: usize = orders.iter().product();
    let mut out = Vec::new();
    for flat in 0..total {
        let v = ProductVertex::from_flat(orders, flat)?;
        if v.coords[i] == 0 {
            out.push(layer(orders, i, &v)?);
        }
    }
    Ok(out)
}
