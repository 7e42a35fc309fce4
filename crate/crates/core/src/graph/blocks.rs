use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Blocks (maximal 2-connected pieces, bridges as 2-sets) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted in [`VertexSet`] order.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = VertexSet::empty();
                    while let Some((a, b)) = self.stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Biconnected decomposition of a connected graph.
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::empty(),
        });
    }
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    dfs.visit(0, None);
    let mut blocks = dfs.blocks;
    blocks.sort();
    let cut_vertices = (0..n)
        .filter(|&v| blocks.iter().filter(|b| b.contains(v)).count() >= 2)
        .collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let bd = blocks_and_cut_vertices(g)?;
    Ok(bd.blocks.iter().all(|&b| g.is_clique(b)))
}

/// Vertex–block incidence tree of a block graph.
///
/// Vertices `0..n` are the original vertices, `n + j` is block `j` of
/// [`blocks_and_cut_vertices`].
pub fn skeleton(g: &Graph) -> Result<Graph> {
    if !is_block_graph(g)? {
        return Err(Error::NotBlockGraph);
    }
    let bd = blocks_and_cut_vertices(g)?;
    let n = g.n();
    let total = n + bd.blocks.len();
    if total > MAX_VERTICES {
        return Err(Error::VertexCount {
            n: total,
            max: MAX_VERTICES,
        });
    }
    let mut s = Graph::empty(total)?;
    for (j, block) in bd.blocks.iter().enumerate() {
        for v in *block {
            s.add_edge(v, n + j)?;
        }
    }
    Ok(s)
}
