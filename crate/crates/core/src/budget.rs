use serde::Serialize;

/// Search limits shared by every routine that may blow up.
///
/// Anything above a bound is reported as such instead of being attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest vertex count for automorphism-group enumeration.
    pub aut_vertices: usize,
    /// Largest group order that is enumerated in full.
    pub max_group_order: usize,
    /// Largest vertex count for exhaustive distinguishing-number search.
    pub exact_vertices: usize,
    /// Largest edge count for exhaustive distinguishing-index search.
    pub exact_edges: usize,
    /// Stabilizer checks allowed per label count in randomized witness search.
    pub trials: usize,
    /// Largest vertex count for Hamiltonian path search.
    pub hamiltonian_vertices: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            aut_vertices: 20,
            max_group_order: 100_000,
            exact_vertices: 12,
            exact_edges: 14,
            trials: 10_000,
            hamiltonian_vertices: 16,
            seed: 0,
        }
    }
}

impl Budget {
    /// Limits used by the verification harness: products of two corpus
    /// factors reach 36 vertices.
    pub fn harness() -> Self {
        Budget {
            aut_vertices: 36,
            hamiltonian_vertices: 36,
            ..Budget::default()
        }
    }
}
