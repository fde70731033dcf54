//! Automorphism groups by pruned backtracking.
//!
//! Partial vertex maps are extended in breadth-first order of the source
//! graph. A vertex with an already mapped neighbor `u` may only go to a
//! neighbor of `u`'s image; every candidate must match degree and twin-class
//! size and agree on adjacency with every vertex mapped so far.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`; `image()[v]` is where `v` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Largest vertex that is not fixed.
    pub fn last_moved(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(v, &w)| *v != w)
            .map(|(v, _)| v)
    }
}

impl std::fmt::Display for Permutation {
    /// One-line image notation.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The full automorphism group, elements sorted lexicographically by image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    /// Wraps an already-closed set of permutations on `0..n`.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        for p in &elements {
            if p.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: p.len(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        Ok(AutomorphismGroup { n, elements })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() <= 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Identity, closure under composition and inverses. Quadratic in the
    /// order.
    pub fn satisfies_group_axioms(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: p.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// Number of vertices sharing each vertex's closed neighborhood.
pub(crate) fn twin_class_sizes(g: &Graph) -> Vec<usize> {
    let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
    let keys: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            g.closed_neighborhood(v)
                .expect("in range")
                .members()
                .to_vec()
        })
        .collect();
    for k in &keys {
        *counts.entry(k.clone()).or_default() += 1;
    }
    keys.iter().map(|k| counts[k]).collect()
}

struct Matrix {
    n: usize,
    bits: Vec<bool>,
}

impl Matrix {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut bits = vec![false; n * n];
        for &(u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        Matrix { n, bits }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }
}

/// Backtracking search for isomorphisms from `source` onto `target`.
struct IsoSearch<'a> {
    target: &'a Graph,
    source_adj: Matrix,
    target_adj: Matrix,
    order: Vec<usize>,
    /// For each position in `order`, an earlier-placed neighbor if any.
    anchor: Vec<Option<usize>>,
    source_inv: Vec<(usize, usize)>,
    target_inv: Vec<(usize, usize)>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> IsoSearch<'a> {
    fn new(source: &'a Graph, target: &'a Graph) -> Self {
        let order = source.bfs_order();
        let mut position = vec![usize::MAX; source.n()];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                source
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| position[u] < k)
                    .min_by_key(|&u| position[u])
            })
            .collect();
        let invariants = |g: &Graph| {
            twin_class_sizes(g)
                .into_iter()
                .enumerate()
                .map(|(v, t)| (g.degree(v), t))
                .collect::<Vec<_>>()
        };
        IsoSearch {
            target,
            source_adj: Matrix::of(source),
            target_adj: Matrix::of(target),
            source_inv: invariants(source),
            target_inv: invariants(target),
            anchor,
            order,
            map: vec![usize::MAX; source.n()],
            used: vec![false; target.n()],
        }
    }

    fn feasible(&self, k: usize, c: usize) -> bool {
        let v = self.order[k];
        if self.used[c] || self.source_inv[v] != self.target_inv[c] {
            return false;
        }
        self.order[..k]
            .iter()
            .all(|&w| self.source_adj.get(v, w) == self.target_adj.get(c, self.map[w]))
    }

    fn run(
        &mut self,
        k: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[k];
        let candidates: Vec<usize> = match self.anchor[k] {
            Some(u) => self.target.neighbors(self.map[u]).to_vec(),
            None => (0..self.target.n()).collect(),
        };
        for c in candidates {
            if self.feasible(k, c) {
                self.map[v] = c;
                self.used[c] = true;
                let flow = self.run(k + 1, visit);
                self.used[c] = false;
                self.map[v] = usize::MAX;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn quick_mismatch(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return true;
    }
    let mut a = g.degree_sequence();
    let mut b = h.degree_sequence();
    a.sort_unstable();
    b.sort_unstable();
    a != b
}

fn check_size(g: &Graph, budget: &Budget) -> Result<()> {
    if g.n() > budget.aut_vertices {
        return Err(Error::BudgetExceeded {
            what: "automorphism vertex",
            limit: budget.aut_vertices,
            actual: g.n(),
        });
    }
    Ok(())
}

/// Some isomorphism `source → target`, if one exists.
pub fn find_isomorphism(
    source: &Graph,
    target: &Graph,
    budget: &Budget,
) -> Result<Option<Permutation>> {
    check_size(source, budget)?;
    if quick_mismatch(source, target) {
        return Ok(None);
    }
    let mut found = None;
    let mut search = IsoSearch::new(source, target);
    let _ = search.run(0, &mut |map| {
        found = Some(Permutation(map.to_vec()));
        ControlFlow::Break(())
    });
    Ok(found)
}

pub fn are_isomorphic(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    Ok(find_isomorphism(g, h, budget)?.is_some())
}

/// Every automorphism of `g`, sorted lexicographically.
pub fn automorphism_group(g: &Graph, budget: &Budget) -> Result<AutomorphismGroup> {
    check_size(g, budget)?;
    let mut elements = Vec::new();
    let mut overflow = false;
    let mut search = IsoSearch::new(g, g);
    let _ = search.run(0, &mut |map| {
        if elements.len() == budget.max_group_order {
            overflow = true;
            return ControlFlow::Break(());
        }
        elements.push(Permutation(map.to_vec()));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::BudgetExceeded {
            what: "group order",
            limit: budget.max_group_order,
            actual: budget.max_group_order + 1,
        });
    }
    elements.sort_unstable();
    Ok(AutomorphismGroup { n: g.n(), elements })
}

/// Stops at the first non-identity automorphism.
pub fn has_nontrivial_automorphism(g: &Graph, budget: &Budget) -> Result<bool> {
    check_size(g, budget)?;
    let mut found = false;
    let mut search = IsoSearch::new(g, g);
    let _ = search.run(0, &mut |map| {
        if map.iter().enumerate().any(|(v, &w)| v != w) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

pub fn group_equal(a: &AutomorphismGroup, b: &AutomorphismGroup) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            expected: a.n,
            actual: b.n,
        });
    }
    Ok(a.elements == b.elements)
}
