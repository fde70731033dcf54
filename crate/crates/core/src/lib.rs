//! Graph products, automorphism groups, S-thinness and distinguishing
//! labelings of small graphs, plus a harness that checks bounds on the
//! distinguishing number and index of strong products instance by instance.

pub mod budget;
pub mod distinguishing;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod products;
pub mod structure;
pub mod symmetry;
pub mod theorems;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
