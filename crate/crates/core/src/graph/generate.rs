use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A named graph family instance.
///
/// Textual form is `tag:p1,p2`, e.g. `cycle:7`, `complete_bipartite:3,4`,
/// `random_tree:9,42` (the last parameter of a random family is its seed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_n` without the edge `(0, 1)`.
    CompleteMinusEdge(usize),
    /// Parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `n` vertices in total: rim cycle on `0..n-1`, hub `n-1`.
    Wheel(usize),
    /// `K_{1,n}`, centre 0.
    Star(usize),
    Hypercube(usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomBlockGraph {
        n: usize,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteMinusEdge(_) => "complete_minus_edge",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Star(_) => "star",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::RandomTree { .. } => "random_tree",
            FamilySpec::RandomBlockGraph { .. } => "random_block_graph",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Star(n)
            | FamilySpec::Hypercube(n) => vec![n as u64],
            FamilySpec::CompleteBipartite(m, n) => vec![m as u64, n as u64],
            FamilySpec::RandomTree { n, seed } | FamilySpec::RandomBlockGraph { n, seed } => {
                vec![n as u64, seed]
            }
        }
    }

    /// Vertex count of the generated graph (before validation).
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::Wheel(n) => n,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::Hypercube(d) => 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
            FamilySpec::RandomTree { n, .. } | FamilySpec::RandomBlockGraph { n, .. } => n,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidFamily(format!("{self}: {why}")));
        match *self {
            FamilySpec::Cycle(k) if k < 3 => return bad("cycle needs k >= 3"),
            FamilySpec::CompleteMinusEdge(n) if n < 2 => return bad("needs n >= 2"),
            FamilySpec::CompleteBipartite(m, n) if m == 0 || n == 0 => {
                return bad("both parts must be nonempty")
            }
            FamilySpec::Wheel(n) if n < 4 => return bad("wheel needs n >= 4"),
            FamilySpec::Star(0) => return bad("star needs n >= 1"),
            FamilySpec::Hypercube(d) if d == 0 || d > 6 => {
                return bad("hypercube needs 1 <= d <= 6")
            }
            _ => {}
        }
        let n = self.vertex_count();
        if n == 0 || n > MAX_VERTICES {
            return bad(&format!("vertex count must be in 1..={MAX_VERTICES}"));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(u64::to_string).collect();
        write!(f, "{}:{}", self.tag(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(s.to_string());
        let (tag, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let params = rest
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<u64>>>()?;
        let one = |params: &[u64]| match params {
            [a] => Ok(*a as usize),
            _ => Err(bad()),
        };
        let spec = match tag.trim() {
            "path" => FamilySpec::Path(one(&params)?),
            "cycle" => FamilySpec::Cycle(one(&params)?),
            "complete" => FamilySpec::Complete(one(&params)?),
            "complete_minus_edge" => FamilySpec::CompleteMinusEdge(one(&params)?),
            "complete_bipartite" => match params[..] {
                [m, n] => FamilySpec::CompleteBipartite(m as usize, n as usize),
                _ => return Err(bad()),
            },
            "wheel" => FamilySpec::Wheel(one(&params)?),
            "star" => FamilySpec::Star(one(&params)?),
            "hypercube" => FamilySpec::Hypercube(one(&params)?),
            "random_tree" | "random_block_graph" => {
                let (n, seed) = match params[..] {
                    [n] => (n as usize, 0),
                    [n, seed] => (n as usize, seed),
                    _ => return Err(bad()),
                };
                if tag.trim() == "random_tree" {
                    FamilySpec::RandomTree { n, seed }
                } else {
                    FamilySpec::RandomBlockGraph { n, seed }
                }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Generates a family instance with its canonical labelling.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.vertex_count();
    let mut g = Graph::empty(n)?;
    match *spec {
        FamilySpec::Path(n) => {
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
        }
        FamilySpec::Cycle(k) => {
            for i in 0..k {
                g.add_edge(i, (i + 1) % k)?;
            }
        }
        FamilySpec::Complete(n) => add_clique(&mut g, VertexSet::full(n)),
        FamilySpec::CompleteMinusEdge(n) => {
            add_clique(&mut g, VertexSet::full(n));
            g.remove_edge(0, 1)?;
        }
        FamilySpec::CompleteBipartite(m, n) => {
            for x in 0..m {
                for y in m..m + n {
                    g.add_edge(x, y)?;
                }
            }
        }
        FamilySpec::Star(n) => {
            for y in 1..=n {
                g.add_edge(0, y)?;
            }
        }
        FamilySpec::Wheel(n) => {
            let rim = n - 1;
            for i in 0..rim {
                g.add_edge(i, (i + 1) % rim)?;
                g.add_edge(i, rim)?;
            }
        }
        FamilySpec::Hypercube(d) => {
            for v in 0..n {
                for b in 0..d {
                    g.add_edge(v, v ^ (1 << b))?;
                }
            }
        }
        FamilySpec::RandomTree { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (u, v) in random_tree_edges(n, &mut rng) {
                g.add_edge(u, v)?;
            }
        }
        FamilySpec::RandomBlockGraph { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut count = 1;
            while count < n {
                let anchor = rng.gen_range(0..count);
                let added = rng.gen_range(1..=4).min(n - count);
                let block = VertexSet::full(count + added)
                    .difference(VertexSet::full(count))
                    .with(anchor);
                add_clique(&mut g, block);
                count += added;
            }
        }
    }
    debug_assert!(g.is_well_formed());
    Ok(g)
}

fn add_clique(g: &mut Graph, a: VertexSet) {
    for u in a {
        g.adj[u] = g.adj[u].union(a.without(u));
    }
}

/// Uniform labelled tree via a random Prüfer sequence.
fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return vec![];
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `extra`.
pub(crate) fn random_connected(n: usize, extra: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n).expect("caller bounds n");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for (u, v) in random_tree_edges(n, rng) {
        g.add_edge(perm[u], perm[v]).expect("tree edges are valid");
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                g.add_edge(u, v).expect("pair is valid");
            }
        }
    }
    g
}
