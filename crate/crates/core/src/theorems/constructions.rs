//! Labelings of strong products built layer by layer, and the lift of an
//! edge labeling from a spanning subgraph.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::budget::Budget;
use crate::distinguishing::{
    distinguishing_number_with_group, is_distinguishing_edge, is_distinguishing_vertex,
    Determination, EdgeLabeling, VertexLabeling,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{aut_subgroup_of, is_spanning_subgraph};
use crate::symmetry::automorphism_group;
use crate::theorems::sequences::{ceil_log, min_alphabet, SequenceFamily};

/// Which factor's layers carry copies of the distinguishing labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerSide {
    /// `G`-layers: vertex `(g_i, h_j)` gets `phi(g_i) + j·r`.
    First,
    /// `H`-layers: vertex `(g_i, h_j)` gets `phi(h_j) + i·r`.
    Second,
}

/// Labels every layer of one factor with a shifted copy of `phi`, using
/// disjoint palettes per layer. `phi` must distinguish its factor.
pub fn layer_labeling(
    g: &Graph,
    h: &Graph,
    phi: &VertexLabeling,
    side: LayerSide,
    budget: &Budget,
) -> Result<VertexLabeling> {
    let factor = match side {
        LayerSide::First => g,
        LayerSide::Second => h,
    };
    let group = automorphism_group(factor, budget)?;
    if !is_distinguishing_vertex(factor, &group, phi)? {
        return Err(Error::Precondition(
            "labeling does not distinguish its factor".into(),
        ));
    }
    let r = phi.palette();
    let m = h.n();
    let labels = (0..g.n() * m)
        .map(|v| {
            let (i, j) = (v / m, v % m);
            match side {
                LayerSide::First => phi.labels()[i] + j * r,
                LayerSide::Second => phi.labels()[j] + i * r,
            }
        })
        .collect();
    let layers = match side {
        LayerSide::First => m,
        LayerSide::Second => g.n(),
    };
    VertexLabeling::with_palette(labels, r * layers)
}

/// Which bound of the sequence construction applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceCase {
    /// `D(G) >= 2` and `D(G) != d`: bound `max(D(G), d)`.
    DistinctAlphabet,
    /// `D(G) >= 2` and `D(G) == d`: bound `D(G) + 1`.
    SharedAlphabet,
    /// `D(G) = 1`: every layer gets its own sequence, bound `d′`.
    AsymmetricFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceConstruction {
    pub labeling: VertexLabeling,
    pub case: SequenceCase,
    /// `D(G)`.
    pub factor_number: usize,
    /// Smallest alphabet whose sequences can tag the layers.
    pub alphabet: usize,
    /// `⌈log_n(m−1)⌉` (or `⌈log_n m⌉` for an asymmetric factor).
    pub log_expression: usize,
    pub bound: usize,
    /// Layers whose sequence needed the extra label.
    pub extra_label_layers: usize,
    /// Label sequence of each `G`-layer, read in `G`'s vertex order.
    pub layer_sequences: Vec<Vec<usize>>,
}

impl SequenceConstruction {
    pub fn labels_used(&self) -> usize {
        self.labeling.distinct_labels()
    }
}

/// Labels the `G`-layers of `G ⊠ H` with pairwise distinct label sequences.
///
/// The first layer carries a distinguishing `D(G)`-labeling `phi`; the other
/// `m − 1` layers take the lexicographically first sequences over
/// `max(D(G), d)` labels that are not images of `phi` under `Aut(G)`, where
/// `d = min{l : l^n >= m − 1}`. If too few remain, further layers take
/// sequences containing one new label. With `D(G) = 1` all `m` layers take
/// distinct sequences over `min{l : l^n >= m}` labels.
pub fn sequence_labeling(g: &Graph, h: &Graph, budget: &Budget) -> Result<SequenceConstruction> {
    let (n, m) = (g.n(), h.n());
    if n < 2 || m < 1 {
        return Err(Error::Precondition(
            "factors must have at least 2 and 1 vertices".into(),
        ));
    }
    let group = automorphism_group(g, budget)?;
    let Determination::Determined(number) = distinguishing_number_with_group(g, &group, budget)?
    else {
        return Err(Error::Precondition(
            "D(G) could not be determined within budget".into(),
        ));
    };
    let phi = number.witness.labels().to_vec();
    let big_d = number.value;

    let (case, alphabet, log_expression, bound, layer_sequences, extra) = if big_d == 1 {
        let alphabet = min_alphabet(n, m);
        let seqs: Vec<Vec<usize>> = SequenceFamily::new(alphabet, n).iter().take(m).collect();
        (
            SequenceCase::AsymmetricFactor,
            alphabet,
            ceil_log(n, m),
            alphabet,
            seqs,
            0,
        )
    } else {
        let d = min_alphabet(n, m - 1);
        let l = big_d.max(d);
        let (case, bound) = if big_d != d {
            (SequenceCase::DistinctAlphabet, l)
        } else {
            (SequenceCase::SharedAlphabet, big_d + 1)
        };
        let orbit: BTreeSet<Vec<usize>> = group
            .elements()
            .iter()
            .map(|a| (0..n).map(|v| phi[a.apply(v)]).collect())
            .collect();
        let mut seqs = vec![phi.clone()];
        seqs.extend(
            SequenceFamily::new(l, n)
                .iter()
                .filter(|s| !orbit.contains(s))
                .take(m - 1),
        );
        let short = m - seqs.len();
        seqs.extend(
            SequenceFamily::new(l + 1, n)
                .iter()
                .filter(|s| s.contains(&(l + 1)))
                .take(short),
        );
        (case, d, ceil_log(n, m - 1), bound, seqs, short)
    };

    let labels = (0..n * m).map(|v| layer_sequences[v % m][v / m]).collect();
    Ok(SequenceConstruction {
        labeling: VertexLabeling::new(labels)?,
        case,
        factor_number: big_d,
        alphabet,
        log_expression,
        bound,
        extra_label_layers: extra,
        layer_sequences,
    })
}

/// Extends a distinguishing edge labeling of the spanning subgraph `sub` to
/// `host`, giving every edge outside `sub` the label 1.
///
/// Requires `Aut(host) ⊆ Aut(sub)`, so host automorphisms keep `sub`-edges
/// and the other edges apart.
pub fn lift_edge_labeling(
    host: &Graph,
    sub: &Graph,
    labeling: &EdgeLabeling,
    budget: &Budget,
) -> Result<EdgeLabeling> {
    if !is_spanning_subgraph(sub, host) {
        return Err(Error::Precondition("not a spanning subgraph".into()));
    }
    if !aut_subgroup_of(host, sub, budget)? {
        return Err(Error::Precondition(
            "automorphism group of the host is not contained in that of the subgraph".into(),
        ));
    }
    let sub_group = automorphism_group(sub, budget)?;
    if !is_distinguishing_edge(sub, &sub_group, labeling)? {
        return Err(Error::Precondition(
            "edge labeling does not distinguish the subgraph".into(),
        ));
    }
    let lifted: BTreeMap<_, _> = host
        .edges()
        .iter()
        .map(|&(u, v)| ((u, v), labeling.get(u, v).unwrap_or(1)))
        .collect();
    let lifted = EdgeLabeling::new(host, lifted)?;
    let host_group = automorphism_group(host, budget)?;
    if !is_distinguishing_edge(host, &host_group, &lifted)? {
        return Err(Error::Precondition(
            "internal: lifted labeling is not distinguishing".into(),
        ));
    }
    Ok(lifted)
}
