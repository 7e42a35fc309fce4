//! Canonical forms for small graphs: colour refinement, then the best
//! adjacency code over all orderings that respect the refined colour classes.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count [`canonical_form`] accepts. Highly regular graphs
/// near this size already need millions of orderings.
pub const MAX_CANON_VERTICES: usize = 10;

/// Isomorphism-invariant code plus a labelling that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub code: u128,
    /// `order[i]` is the original vertex placed at position `i`.
    pub order: Vec<usize>,
}

impl Canonical {
    /// The graph relabelled so that its adjacency code is `code`.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; self.order.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            perm[v] = pos;
        }
        g.permute(&perm)
    }
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

struct Search<'a> {
    g: &'a Graph,
    slots: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<Canonical>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.slots.len() {
            let code = code_of(self.g, &self.order);
            if self.best.as_ref().is_none_or(|b| code > b.code) {
                self.best = Some(Canonical {
                    code,
                    order: self.order.clone(),
                });
            }
            return;
        }
        for v in 0..self.g.n() {
            if !self.used[v] && self.colors[v] == self.slots[pos] {
                self.used[v] = true;
                self.order.push(v);
                self.run(pos + 1);
                self.order.pop();
                self.used[v] = false;
            }
        }
    }
}

/// Canonical form of a graph with at most [`MAX_CANON_VERTICES`] vertices.
///
/// Cost grows with the product of the factorials of the refined class
/// sizes; intended for the small graphs used in scans and tests.
pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::VertexCount {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let colors = refine(g);
    let mut slots = colors.clone();
    slots.sort_unstable();
    let mut search = Search {
        g,
        slots,
        colors,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    Ok(search.best.expect("at least one ordering"))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)?.code == canonical_form(h)?.code)
}
