//! Distinguishing vertex and edge labelings, the distinguishing number `D`
//! and the distinguishing index `D′`.
//!
//! A labeling is distinguishing when its stabilizer in the automorphism group
//! is trivial. Both searches run over "points" (vertices or edges) on which
//! the group acts:
//!
//! * exhaustive mode enumerates labelings whose labels first appear in
//!   increasing order, and prunes a partial labeling on points `0..=k` as soon
//!   as some automorphism whose largest moved point is `k` preserves it;
//! * certified mode looks for a witness with seeded random labelings plus
//!   greedy repair, and pairs it with a proven lower bound.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::structure::s_partition;
use crate::symmetry::{automorphism_group, AutomorphismGroup, Permutation};

/// Vertex labels `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexLabeling {
    labels: Vec<usize>,
    palette: usize,
}

impl VertexLabeling {
    /// Palette size is the largest label used.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let palette = labels.iter().copied().max().unwrap_or(1);
        Self::with_palette(labels, palette)
    }

    pub fn with_palette(labels: Vec<usize>, palette: usize) -> Result<Self> {
        if palette == 0 || labels.iter().any(|&l| l == 0 || l > palette) {
            return Err(Error::Precondition(format!(
                "vertex labels must lie in 1..={palette}"
            )));
        }
        Ok(VertexLabeling { labels, palette })
    }

    pub fn constant(n: usize) -> Self {
        VertexLabeling {
            labels: vec![1; n],
            palette: 1,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn distinct_labels(&self) -> usize {
        distinct(&self.labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Edge labels keyed by `(min, max)`; the domain is exactly `E(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: BTreeMap<Edge, usize>,
    palette: usize,
}

impl EdgeLabeling {
    pub fn new(g: &Graph, labels: BTreeMap<Edge, usize>) -> Result<Self> {
        let normalized: BTreeMap<Edge, usize> = labels
            .into_iter()
            .map(|((u, v), l)| (edge(u, v), l))
            .collect();
        if normalized.len() != g.edge_count() || !normalized.keys().all(|&(u, v)| g.has_edge(u, v))
        {
            return Err(Error::Precondition(
                "edge labeling domain must equal the edge set".into(),
            ));
        }
        let palette = normalized.values().copied().max().unwrap_or(1);
        if normalized.values().any(|&l| l == 0) {
            return Err(Error::Precondition("edge labels must be positive".into()));
        }
        Ok(EdgeLabeling {
            labels: normalized,
            palette,
        })
    }

    /// Labels aligned with `g.edges()`.
    pub fn from_slice(g: &Graph, labels: &[usize]) -> Result<Self> {
        if labels.len() != g.edge_count() {
            return Err(Error::SizeMismatch {
                expected: g.edge_count(),
                actual: labels.len(),
            });
        }
        Self::new(
            g,
            g.edges()
                .iter()
                .copied()
                .zip(labels.iter().copied())
                .collect(),
        )
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.labels.get(&edge(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    /// Labels in the order of `g.edges()` (sorted edge order).
    pub fn to_vec(&self) -> Vec<usize> {
        self.labels.values().copied().collect()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn distinct_labels(&self) -> usize {
        distinct(&self.to_vec())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels.iter().map(|(&(u, v), &l)| [u, v, l]))
    }
}

fn distinct(labels: &[usize]) -> usize {
    let mut v = labels.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Relabels so labels first appear in the order 1, 2, 3, ...
fn canonical_palette(labels: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len() + 1;
            *map.entry(l).or_insert(next)
        })
        .collect()
}

fn check_group(g: &Graph, group: &AutomorphismGroup) -> Result<()> {
    if group.degree() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: group.degree(),
        });
    }
    Ok(())
}

fn preserves(perm: &[usize], labels: &[usize]) -> bool {
    perm.iter()
        .enumerate()
        .all(|(i, &j)| labels[i] == labels[j])
}

pub fn preserves_vertex_labeling(p: &Permutation, labeling: &VertexLabeling) -> bool {
    preserves(p.image(), labeling.labels())
}

/// Automorphisms fixing every vertex label.
pub fn vertex_stabilizer(group: &AutomorphismGroup, labeling: &VertexLabeling) -> Vec<Permutation> {
    group
        .elements()
        .iter()
        .filter(|p| preserves_vertex_labeling(p, labeling))
        .cloned()
        .collect()
}

pub fn is_distinguishing_vertex(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &VertexLabeling,
) -> Result<bool> {
    check_group(g, group)?;
    if labeling.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: labeling.len(),
        });
    }
    Ok(!group
        .non_identity()
        .any(|p| preserves_vertex_labeling(p, labeling)))
}

/// The action of a group on `E(G)`: for each element, the image of every
/// edge index.
#[derive(Debug, Clone)]
pub struct EdgeAction {
    images: Vec<Vec<usize>>,
}

impl EdgeAction {
    pub fn new(g: &Graph, group: &AutomorphismGroup) -> Result<Self> {
        check_group(g, group)?;
        let images = group
            .elements()
            .iter()
            .map(|p| {
                g.edges()
                    .iter()
                    .map(|&(u, v)| {
                        g.edge_index(p.apply(u), p.apply(v)).ok_or_else(|| {
                            Error::Precondition(format!(
                                "group element does not map edge ({u},{v}) to an edge"
                            ))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(EdgeAction { images })
    }

    /// Edge images for each group element, in group order.
    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }
}

/// Automorphisms fixing every edge label.
pub fn edge_stabilizer(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &EdgeLabeling,
) -> Result<Vec<Permutation>> {
    let action = EdgeAction::new(g, group)?;
    let labels = labeling.to_vec();
    Ok(group
        .elements()
        .iter()
        .zip(action.images())
        .filter(|(_, img)| preserves(img, &labels))
        .map(|(p, _)| p.clone())
        .collect())
}

pub fn is_distinguishing_edge(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &EdgeLabeling,
) -> Result<bool> {
    if labeling.len() != g.edge_count() {
        return Err(Error::SizeMismatch {
            expected: g.edge_count(),
            actual: labeling.len(),
        });
    }
    Ok(edge_stabilizer(g, group, labeling)?
        .iter()
        .all(Permutation::is_identity))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every smaller label count was refuted exhaustively.
    Exact,
    /// A witness proves the upper bound; `reason` proves the matching lower
    /// bound.
    CertifiedUpper,
}

/// Why no labeling with fewer labels exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundReason {
    /// Trivial group: one label suffices.
    Asymmetric,
    /// Some non-identity automorphism exists, so one label is not enough.
    NontrivialAut,
    /// Vertices with a common closed neighborhood are swapped by a
    /// transposition, so they need pairwise distinct labels.
    TwinClass,
    ExhaustedSmallerR,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishingResult<L> {
    pub value: usize,
    pub mode: Mode,
    pub witness: L,
    pub reason: LowerBoundReason,
}

/// Outcome of a distinguishing number or index computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Determination<L> {
    Determined(DistinguishingResult<L>),
    /// The value lies in `lo..=hi`; only the lower bound is proven minimal.
    Bracket {
        lo: usize,
        hi: usize,
        witness: L,
        reason: LowerBoundReason,
    },
    /// No labeling is distinguishing (an automorphism fixes every edge).
    Undefined,
}

impl<L> Determination<L> {
    pub fn bounds(&self) -> Option<(usize, usize)> {
        match self {
            Determination::Determined(r) => Some((r.value, r.value)),
            Determination::Bracket { lo, hi, .. } => Some((*lo, *hi)),
            Determination::Undefined => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Determination::Determined(r) => Some(r.value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&L> {
        match self {
            Determination::Determined(r) => Some(&r.witness),
            Determination::Bracket { witness, .. } => Some(witness),
            Determination::Undefined => None,
        }
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            Determination::Determined(DistinguishingResult {
                mode: Mode::Exact, ..
            }) => "exact",
            Determination::Determined(_) => "certified-upper",
            Determination::Bracket { .. } => "bracket",
            Determination::Undefined => "undefined",
        }
    }

    pub fn reason(&self) -> Option<LowerBoundReason> {
        match self {
            Determination::Determined(r) => Some(r.reason),
            Determination::Bracket { reason, .. } => Some(*reason),
            Determination::Undefined => None,
        }
    }
}

impl<L: Serialize> Serialize for Determination<L> {
    /// `{value, lo, hi, mode, witness, reason}`; `value` is null unless the
    /// number is determined.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (lo, hi) = match self.bounds() {
            Some((lo, hi)) => (Some(lo), Some(hi)),
            None => (None, None),
        };
        let mut st = s.serialize_struct("Determination", 6)?;
        st.serialize_field("value", &self.value())?;
        st.serialize_field("lo", &lo)?;
        st.serialize_field("hi", &hi)?;
        st.serialize_field("mode", self.mode_name())?;
        st.serialize_field("witness", &self.witness())?;
        st.serialize_field("reason", &self.reason())?;
        st.end()
    }
}

/// A group acting on points `0..n`, non-identity elements only, indexed by
/// their largest moved point.
struct PointAction {
    points: usize,
    perms: Vec<Vec<usize>>,
    by_last: Vec<Vec<usize>>,
}

impl PointAction {
    fn new(points: usize, perms: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let perms: Vec<Vec<usize>> = perms
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
            .collect();
        let mut by_last = vec![Vec::new(); points];
        for (idx, p) in perms.iter().enumerate() {
            let last = (0..points)
                .rev()
                .find(|&i| p[i] != i)
                .expect("non-identity");
            by_last[last].push(idx);
        }
        PointAction {
            points,
            perms,
            by_last,
        }
    }

    fn first_preserving(&self, labels: &[usize]) -> Option<&[usize]> {
        self.perms
            .iter()
            .find(|p| preserves(p, labels))
            .map(Vec::as_slice)
    }

    /// First labeling with labels in `1..=r`, in restricted-growth
    /// lexicographic order, fixed by no non-identity element.
    fn exhaustive(&self, r: usize) -> Option<Vec<usize>> {
        let mut labels = vec![0; self.points];
        self.assign(0, 0, r, &mut labels).then_some(labels)
    }

    fn assign(&self, k: usize, used: usize, r: usize, labels: &mut [usize]) -> bool {
        if k == self.points {
            return true;
        }
        for l in 1..=r.min(used + 1) {
            labels[k] = l;
            let blocked = self.by_last[k]
                .iter()
                .any(|&idx| preserves(&self.perms[idx][..=k], &labels[..=k]));
            if !blocked && self.assign(k + 1, used.max(l), r, labels) {
                return true;
            }
        }
        labels[k] = 0;
        false
    }

    /// Random labelings with `r` labels, each repaired by relabeling a point
    /// moved by a label-preserving element. One stabilizer scan per trial.
    fn randomized(&self, r: usize, trials: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
        if r < 2 || self.points == 0 {
            return None;
        }
        let repair_steps = 2 * self.points + 8;
        let mut spent = 0;
        while spent < trials {
            let mut labels: Vec<usize> = (0..self.points).map(|_| rng.gen_range(1..=r)).collect();
            for _ in 0..repair_steps {
                if spent == trials {
                    break;
                }
                spent += 1;
                let Some(p) = self.first_preserving(&labels) else {
                    return Some(labels);
                };
                let moved: Vec<usize> = (0..self.points).filter(|&i| p[i] != i).collect();
                let target = moved[rng.gen_range(0..moved.len())];
                let mut fresh = rng.gen_range(1..r);
                if fresh >= labels[target] {
                    fresh += 1;
                }
                labels[target] = fresh;
            }
        }
        None
    }
}

/// Shared driver; `exact` selects exhaustive search, `twin_bound` is a
/// proven lower bound from twin classes (0 when not applicable).
fn determine(
    action: &PointAction,
    exact: bool,
    twin_bound: usize,
    budget: &Budget,
) -> Determination<Vec<usize>> {
    let n = action.points;
    if action.perms.is_empty() {
        return Determination::Determined(DistinguishingResult {
            value: 1,
            mode: Mode::Exact,
            witness: vec![1; n],
            reason: LowerBoundReason::Asymmetric,
        });
    }
    if exact {
        for r in 2..=n {
            if let Some(w) = action.exhaustive(r) {
                return Determination::Determined(DistinguishingResult {
                    value: r,
                    mode: Mode::Exact,
                    witness: w,
                    reason: if r == 2 {
                        LowerBoundReason::NontrivialAut
                    } else {
                        LowerBoundReason::ExhaustedSmallerR
                    },
                });
            }
        }
        unreachable!("all-distinct labeling is distinguishing when the action is faithful");
    }
    let (lo, reason) = if twin_bound > 2 {
        (twin_bound, LowerBoundReason::TwinClass)
    } else {
        (2, LowerBoundReason::NontrivialAut)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for r in lo..=n {
        let found = if r == n {
            Some((1..=n).collect())
        } else {
            action.randomized(r, budget.trials, &mut rng)
        };
        if let Some(w) = found {
            let w = canonical_palette(&w);
            let hi = distinct(&w);
            debug_assert!(hi >= lo);
            return if hi == lo {
                Determination::Determined(DistinguishingResult {
                    value: lo,
                    mode: Mode::CertifiedUpper,
                    witness: w,
                    reason,
                })
            } else {
                Determination::Bracket {
                    lo,
                    hi,
                    witness: w,
                    reason,
                }
            };
        }
    }
    unreachable!("r = n always yields a witness")
}

fn map_witness<A, B>(d: Determination<A>, f: impl Fn(A) -> Result<B>) -> Result<Determination<B>> {
    Ok(match d {
        Determination::Determined(r) => Determination::Determined(DistinguishingResult {
            value: r.value,
            mode: r.mode,
            witness: f(r.witness)?,
            reason: r.reason,
        }),
        Determination::Bracket {
            lo,
            hi,
            witness,
            reason,
        } => Determination::Bracket {
            lo,
            hi,
            witness: f(witness)?,
            reason,
        },
        Determination::Undefined => Determination::Undefined,
    })
}

/// `D(G)`, computing `Aut(G)` first.
pub fn distinguishing_number(g: &Graph, budget: &Budget) -> Result<Determination<VertexLabeling>> {
    let group = automorphism_group(g, budget)?;
    distinguishing_number_with_group(g, &group, budget)
}

pub fn distinguishing_number_with_group(
    g: &Graph,
    group: &AutomorphismGroup,
    budget: &Budget,
) -> Result<Determination<VertexLabeling>> {
    check_group(g, group)?;
    let action = PointAction::new(g.n(), group.elements().iter().map(|p| p.image().to_vec()));
    let twins = s_partition(g).largest_class();
    let d = determine(&action, g.n() <= budget.exact_vertices, twins, budget);
    let d = map_witness(d, VertexLabeling::new)?;
    if let Some(w) = d.witness() {
        if !is_distinguishing_vertex(g, group, w)? {
            return Err(Error::Precondition(
                "internal: witness is not distinguishing".into(),
            ));
        }
    }
    Ok(d)
}

/// `D′(G)`, computing `Aut(G)` first.
pub fn distinguishing_index(g: &Graph, budget: &Budget) -> Result<Determination<EdgeLabeling>> {
    let group = automorphism_group(g, budget)?;
    distinguishing_index_with_group(g, &group, budget)
}

pub fn distinguishing_index_with_group(
    g: &Graph,
    group: &AutomorphismGroup,
    budget: &Budget,
) -> Result<Determination<EdgeLabeling>> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let action = EdgeAction::new(g, group)?;
    let edge_identity = |img: &Vec<usize>| img.iter().enumerate().all(|(i, &j)| i == j);
    let undefined = group
        .elements()
        .iter()
        .zip(action.images())
        .any(|(p, img)| !p.is_identity() && edge_identity(img));
    if undefined {
        return Ok(Determination::Undefined);
    }
    let points = PointAction::new(g.edge_count(), action.images.iter().cloned());
    let d = determine(&points, g.edge_count() <= budget.exact_edges, 0, budget);
    let d = map_witness(d, |w| EdgeLabeling::from_slice(g, &w))?;
    if let Some(w) = d.witness() {
        if !is_distinguishing_edge(g, group, w)? {
            return Err(Error::Precondition(
                "internal: witness is not distinguishing".into(),
            ));
        }
    }
    Ok(d)
}
