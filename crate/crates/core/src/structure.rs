//! S-relation, spanning subgraphs, group containment and traceability.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{automorphism_group, is_automorphism};

/// Classes of vertices with identical closed neighborhoods, each sorted,
/// ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SPartition {
    pub classes: Vec<Vec<usize>>,
}

impl SPartition {
    pub fn largest_class(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn s_partition(g: &Graph) -> SPartition {
    let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let key = g
            .closed_neighborhood(v)
            .expect("in range")
            .members()
            .to_vec();
        by_nbhd.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    SPartition { classes }
}

/// No two vertices share a closed neighborhood.
pub fn is_s_thin(g: &Graph) -> bool {
    s_partition(g).classes.len() == g.n()
}

/// `h` has the vertex set of `g` and `E(h) ⊆ E(g)`.
pub fn is_spanning_subgraph(h: &Graph, g: &Graph) -> bool {
    h.n() == g.n() && h.edges().iter().all(|&(u, v)| g.has_edge(u, v))
}

/// Every automorphism of `g` is an automorphism of `h`.
pub fn aut_subgroup_of(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: h.n(),
        });
    }
    let group = automorphism_group(g, budget)?;
    for p in group.elements() {
        if !is_automorphism(h, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Hamiltonian path, found by backtracking that tries low-degree starts
/// and, at each step, the neighbor with the fewest unvisited neighbors.
pub fn hamiltonian_path(g: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > budget.hamiltonian_vertices {
        return Err(Error::BudgetExceeded {
            what: "hamiltonian vertex",
            limit: budget.hamiltonian_vertices,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    let mut visited = vec![false; n];
    let mut walk = Vec::with_capacity(n);
    for s in starts {
        visited[s] = true;
        walk.push(s);
        if extend(g, &mut visited, &mut walk) {
            return Ok(Some(walk));
        }
        walk.pop();
        visited[s] = false;
    }
    Ok(None)
}

fn extend(g: &Graph, visited: &mut [bool], walk: &mut Vec<usize>) -> bool {
    if walk.len() == g.n() {
        return true;
    }
    let last = *walk.last().expect("nonempty walk");
    let free = |v: usize, visited: &[bool]| g.neighbors(v).iter().filter(|&&w| !visited[w]).count();
    let mut next: Vec<usize> = g
        .neighbors(last)
        .iter()
        .copied()
        .filter(|&w| !visited[w])
        .collect();
    next.sort_by_key(|&w| (free(w, visited), w));
    for w in next {
        visited[w] = true;
        walk.push(w);
        if extend(g, visited, walk) {
            return true;
        }
        walk.pop();
        visited[w] = false;
    }
    false
}

pub fn hamiltonian_path_exists(g: &Graph, budget: &Budget) -> Result<bool> {
    Ok(hamiltonian_path(g, budget)?.is_some())
}
