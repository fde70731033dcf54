//! Naive reference implementations: every permutation, every labeling.
#![allow(dead_code)]

use graphsym::Graph;
use itertools::Itertools;

pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

pub fn preserves_edges(g: &Graph, p: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v]))
}

/// All automorphisms, lexicographic by image.
pub fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n())
        .filter(|p| preserves_edges(g, p))
        .collect()
}

pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n()).any(|p| g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

/// Every `r`-labeling of `k` items, as base-`r` counters.
fn labelings(k: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (r as u64).pow(k as u32);
    (0..total).map(move |mut x| {
        (0..k)
            .map(|_| {
                let d = (x % r as u64) as usize;
                x /= r as u64;
                d
            })
            .collect()
    })
}

pub fn naive_distinguishing_number(g: &Graph) -> usize {
    let auts = naive_automorphisms(g);
    let n = g.n();
    (1..=n.max(1))
        .find(|&r| {
            labelings(n, r).any(|lab| {
                auts.iter().all(|p| {
                    p.iter().enumerate().all(|(v, &w)| v == w)
                        || (0..n).any(|v| lab[p[v]] != lab[v])
                })
            })
        })
        .expect("n labels always distinguish")
}

/// `None` when some non-identity automorphism fixes every edge.
pub fn naive_distinguishing_index(g: &Graph) -> Option<usize> {
    let auts = naive_automorphisms(g);
    let edges = g.edges();
    let index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).unwrap();
    let images: Vec<Vec<usize>> = auts
        .iter()
        .filter(|p| p.iter().enumerate().any(|(v, &w)| v != w))
        .map(|p| edges.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    if images
        .iter()
        .any(|img| img.iter().enumerate().all(|(e, &f)| e == f))
    {
        return None;
    }
    let m = edges.len();
    (1..=m.max(1)).find(|&r| {
        labelings(m, r).any(|lab| {
            images
                .iter()
                .all(|img| (0..m).any(|e| lab[img[e]] != lab[e]))
        })
    })
}

/// Canonical form: the smallest edge bitmask over all relabelings.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let bit = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        b * (b - 1) / 2 + a
    };
    permutations(n)
        .map(|p| {
            g.edges()
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << bit(p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for b in 1..n {
        for a in 0..b {
            if mask >> i & 1 == 1 {
                edges.push((a, b));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// One representative of every connected graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..1u64 << pairs {
        let g = graph_from_mask(n, mask);
        if g.is_connected() {
            seen.insert(canonical_mask(&g));
        }
    }
    seen.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// Deterministic pseudo-random graphs (xorshift), edge density one half.
pub fn sample_graphs(n: usize, count: usize, mut state: u64) -> Vec<Graph> {
    let pairs = n * (n - 1) / 2;
    (0..count)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            graph_from_mask(n, state & ((1 << pairs) - 1))
        })
        .collect()
}
