//! Finite simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Unordered edge, always stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalizes an endpoint pair into edge identity `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate-free; the graph is immutable once
/// built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = edge(u, w[0]);
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Builds a graph from a symmetric predicate on vertex pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self::from_sorted_adjacency(adj)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        let g = Graph { adj, edges };
        debug_assert!(g.check_invariants());
        g
    }

    /// Checks the representation invariants; used by tests and debug builds.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut degree_sum = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            degree_sum += list.len();
        }
        degree_sum % 2 == 0 && degree_sum / 2 == self.edges.len()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let list = &self.adj[v];
        let at = list.partition_point(|&w| w < v);
        let mut members = Vec::with_capacity(list.len() + 1);
        members.extend_from_slice(&list[..at]);
        members.push(v);
        members.extend_from_slice(&list[at..]);
        Ok(VertexSet(members))
    }

    /// Open neighborhood of a vertex set: vertices adjacent to some member.
    pub fn set_open_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        let mut out = Vec::new();
        for &v in set.members() {
            self.check_vertex(v)?;
            out.extend_from_slice(&self.adj[v]);
        }
        Ok(VertexSet::from_unsorted(out))
    }

    /// Closed neighborhood of a vertex set.
    pub fn set_closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        let open = self.set_open_neighborhood(set)?;
        let mut all = open.0;
        all.extend_from_slice(set.members());
        Ok(VertexSet::from_unsorted(all))
    }

    /// Vertices in breadth-first order, restarting at the smallest unvisited
    /// vertex for each further component.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        }))
    }
}

/// Path `P_n` with edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// Cycle `C_n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    Ok(Graph::from_fn(n, |u, v| {
        v == u + 1 || (u == 0 && v == n - 1)
    }))
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// The smallest asymmetric tree: a centre with legs of length 1, 2 and 3.
pub fn asymmetric_tree() -> Graph {
    Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
        .expect("static edge list")
}
