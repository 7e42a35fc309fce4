//! All connected graphs of small order, up to isomorphism.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so it arises
//! from a connected graph on `n - 1` vertices by adding one vertex with a
//! nonempty neighbourhood. Duplicates are removed by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::canon::canonical_form;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`connected_graphs`].
pub const MAX_CONNECTED_ORDER: usize = 8;

fn extend(level: &[Graph]) -> Result<Vec<Graph>> {
    let found: Vec<Vec<(u128, Graph)>> = level
        .par_iter()
        .map(|g| {
            let n = g.n();
            (1..1u64 << n)
                .map(|mask| {
                    let mut h = Graph::empty(n + 1)?;
                    for (u, v) in g.edges() {
                        h.add_edge(u, v)?;
                    }
                    for v in VertexSet::from_bits(mask) {
                        h.add_edge(v, n)?;
                    }
                    let c = canonical_form(&h)?;
                    Ok((c.code, c.graph(&h)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let unique: BTreeMap<u128, Graph> = found.into_iter().flatten().collect();
    Ok(unique.into_values().collect())
}

/// Canonically labelled representatives of the connected graphs on `n`
/// vertices, ordered by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CONNECTED_ORDER {
        return Err(Error::InvalidParameter(format!(
            "connected-graph order must be in 1..={MAX_CONNECTED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = extend(&level)?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            let graphs = connected_graphs(n).unwrap();
            assert_eq!(graphs.len(), count, "n = {n}");
            assert!(graphs.iter().all(|g| g.n() == n && g.is_connected()));
        }
    }

    #[test]
    fn order_bounds() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(MAX_CONNECTED_ORDER + 1).is_err());
    }
}
