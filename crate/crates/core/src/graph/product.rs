use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Cartesian product `g □ h`. Vertex `(u, v)` gets index `u * |V(h)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng * nh;
    if n > MAX_VERTICES {
        return Err(Error::VertexCount {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut adj = vec![VertexSet::empty(); n];
    for u in 0..ng {
        for v in 0..nh {
            let row = &mut adj[u * nh + v];
            for w in h.neighbors(v) {
                row.insert(u * nh + w);
            }
            for x in g.neighbors(u) {
                row.insert(x * nh + v);
            }
        }
    }
    Ok(Graph::from_rows(adj))
}

/// `g □ g □ … □ g` with `d >= 1` factors, folded from the left.
pub fn cartesian_power(g: &Graph, d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "cartesian power needs d >= 1".into(),
        ));
    }
    let mut acc = g.clone();
    for _ in 1..d {
        acc = cartesian_product(&acc, g)?;
    }
    Ok(acc)
}

/// Product index of the pair `(u, v)`.
pub fn product_vertex(h_order: usize, u: usize, v: usize) -> usize {
    u * h_order + v
}

/// `s1 × s2` as a vertex set of the product graph.
pub fn product_set(h_order: usize, s1: VertexSet, s2: VertexSet) -> VertexSet {
    let mut out = VertexSet::empty();
    for u in s1 {
        for v in s2 {
            out.insert(product_vertex(h_order, u, v));
        }
    }
    out
}
