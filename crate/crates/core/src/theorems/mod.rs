//! Checks of distinguishing bounds on strong products, run instance by
//! instance with constructive witnesses.

pub mod checks;
pub mod constructions;
pub mod corpus;
pub mod report;
pub mod sequences;

pub use checks::{
    verify_edge_lift, verify_index_bounds, verify_path_cycle_index, verify_product_sandwich,
    verify_sequence_labeling, verify_strong_cartesian_equality, verify_strong_power_index,
    verify_strong_power_number, verify_traceable_index, Analysis, PairAnalysis,
};
pub use constructions::{
    layer_labeling, lift_edge_labeling, sequence_labeling, LayerSide, SequenceCase,
};
pub use corpus::{run_all, Corpus};
pub use report::{BoundReport, Check, Verdict};
