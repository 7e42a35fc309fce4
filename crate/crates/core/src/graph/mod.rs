//! Simple undirected graphs on at most 64 vertices.

mod blocks;
mod chordal;
mod edgelist;
mod generate;
mod graph6;
mod product;

pub use blocks::{blocks_and_cut_vertices, is_block_graph, skeleton, BlockDecomposition};
pub use chordal::{is_chordal, lex_bfs, perfect_elimination_order};
pub use edgelist::{format_edge_list, parse_edge_list};
pub(crate) use generate::random_connected;
pub use generate::{generate, FamilySpec};
pub use graph6::{format_graph6, parse_graph6, parse_graph6_stream};
pub use product::{cartesian_power, cartesian_product, product_set, product_vertex};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`, stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(); n],
        })
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let g = Graph { adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::EndpointOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Symmetric with no self-loops.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].is_subset(VertexSet::full(n))
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// A pair `(u, v)` with `v` unreachable from `u`, if any.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        let reach = self.reachable_within(0, self.vertices());
        reach.complement(self.n()).first().map(|v| (0, v))
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.disconnected_pair() {
            Some((from, to)) => Err(Error::Disconnected { from, to }),
            None => Ok(()),
        }
    }

    /// Whether `a` is a clique.
    pub fn is_clique(&self, a: VertexSet) -> bool {
        a.iter().all(|v| a.without(v).is_subset(self.adj[v]))
    }

    /// Subgraph induced by `a`, relabelled to `0..|a|` in ascending order.
    pub fn induced_subgraph(&self, a: VertexSet) -> Result<Graph> {
        self.check_set(a)?;
        let verts = a.to_vec();
        let mut h = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j)?;
                }
            }
        }
        Ok(h)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::empty(); self.n()];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.map(|v| perm[v]);
        }
        Graph::from_rows(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Whether the subgraph induced by `a` is connected.
pub fn induced_connected(g: &Graph, a: VertexSet) -> Result<bool> {
    let start = a.first().ok_or(Error::EmptySet)?;
    g.check_set(a)?;
    Ok(g.reachable_within(start, a) == a)
}
