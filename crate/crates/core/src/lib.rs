//! Partiality, fair centers and fair sets of small connected graphs, with
//! closed-form fair-set characterizations for several graph families and
//! exhaustive scanners that check them.

pub mod error;
pub mod fairness;
pub mod graph;
pub mod metric;
pub mod oracles;
pub mod parallel;
pub mod search;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
