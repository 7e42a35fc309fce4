//! Exhaustive searches over small graphs.

pub mod canon;
pub mod connected;
pub mod scan;
pub mod trees;

pub use canon::{canonical_form, is_isomorphic, Canonical};
pub use connected::connected_graphs;
pub use scan::{
    chordal_equivalence_scan, graph6_lines, merge_reports, reverify_survivor, scan_stream,
    tree_lemma_scan, ScanReport, ScanTask, Shard, Survivor,
};
pub use trees::free_trees;
