//! Hop distances and the eccentricity machinery built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All-pairs hop distances of a connected graph.
///
/// Alongside the dense matrix every vertex keeps its distance layers
/// (`layers(u)[r]` is the set of vertices at distance exactly `r`), which is
/// what the partiality scans run over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    layers: Vec<Vec<VertexSet>>,
}

/// Breadth-first search from every vertex.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let all = g.vertices();
    let mut d = vec![0u32; n * n];
    let mut layers = Vec::with_capacity(n);
    for u in 0..n {
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut rows = vec![frontier];
        let mut r = 0;
        loop {
            let mut next = VertexSet::empty();
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            next = next.difference(seen);
            if next.is_empty() {
                break;
            }
            r += 1;
            for v in next {
                d[u * n + v] = r;
            }
            seen = seen.union(next);
            rows.push(next);
            frontier = next;
        }
        if let Some(to) = all.difference(seen).first() {
            return Err(Error::Disconnected { from: u, to });
        }
        layers.push(rows);
    }
    Ok(DistanceMatrix { n, d, layers })
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Distance layers around `u`; index `r` holds the vertices at distance `r`.
    pub fn layers(&self, u: usize) -> &[VertexSet] {
        &self.layers[u]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        (self.layers[u].len() - 1) as u32
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|u| self.eccentricity(u)).max().unwrap_or(0)
    }

    pub fn profile(&self) -> EccentricityProfile {
        let ecc: Vec<u32> = (0..self.n).map(|u| self.eccentricity(u)).collect();
        EccentricityProfile {
            diameter: ecc.iter().copied().max().unwrap_or(0),
            radius: ecc.iter().copied().min().unwrap_or(0),
            ecc,
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
}

/// Vertices at maximum distance from `u`.
pub fn eccentric_vertices(dm: &DistanceMatrix, u: usize) -> Result<VertexSet> {
    dm.check(u)?;
    Ok(*dm.layers(u).last().expect("layer 0 always exists"))
}

/// Vertices on some shortest `u`–`v` path.
pub fn interval(dm: &DistanceMatrix, u: usize, v: usize) -> Result<VertexSet> {
    dm.check(u)?;
    dm.check(v)?;
    let duv = dm.get(u, v);
    Ok((0..dm.n())
        .filter(|&w| dm.get(u, w) + dm.get(w, v) == duv)
        .collect())
}

/// Every vertex has a vertex at distance `diam`.
pub fn is_even_graph(dm: &DistanceMatrix) -> bool {
    let diam = dm.diameter();
    (0..dm.n()).all(|u| dm.eccentricity(u) == diam)
}

/// Even, and every `u` has a partner `v` whose interval `I(u, v)` is all of `V`.
pub fn is_symmetric_even(dm: &DistanceMatrix) -> bool {
    let all = dm.vertices();
    is_even_graph(dm)
        && (0..dm.n())
            .all(|u| (0..dm.n()).any(|v| interval(dm, u, v).map(|i| i == all).unwrap_or(false)))
}

/// Eccentric partner of every vertex, when each has exactly one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricMap {
    pub total: bool,
    /// `bar[u]` is set iff `u` has a unique eccentric vertex.
    pub bar: Vec<Option<usize>>,
}

impl EccentricMap {
    /// Partner of `u`; `None` when `u` has several eccentric vertices.
    pub fn partner(&self, u: usize) -> Option<usize> {
        self.bar.get(u).copied().flatten()
    }

    pub fn is_involution(&self) -> bool {
        self.total
            && (0..self.bar.len()).all(|u| self.partner(u).and_then(|b| self.partner(b)) == Some(u))
    }
}

pub fn unique_eccentric_map(dm: &DistanceMatrix) -> EccentricMap {
    let bar: Vec<Option<usize>> = (0..dm.n())
        .map(|u| {
            let e = *dm.layers(u).last().expect("layer 0 always exists");
            (e.len() == 1).then(|| e.first().expect("nonempty"))
        })
        .collect();
    EccentricMap {
        total: bar.iter().all(Option::is_some),
        bar,
    }
}

/// Checks `d(u, v) + d(u, bar v) = diam` for every ordered pair.
///
/// Requires a total map on a symmetric even graph.
pub fn antipodal_sum_check(dm: &DistanceMatrix, em: &EccentricMap) -> Result<bool> {
    if !em.total || em.bar.len() != dm.n() {
        return Err(Error::EccentricMapNotTotal);
    }
    if !is_symmetric_even(dm) {
        return Err(Error::NotSymmetricEven);
    }
    let diam = dm.diameter();
    Ok((0..dm.n()).all(|u| {
        (0..dm.n()).all(|v| dm.get(u, v) + dm.get(u, em.partner(v).expect("total")) == diam)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, generate, FamilySpec};

    fn dm(spec: &str) -> DistanceMatrix {
        distance_matrix(&generate(&spec.parse().unwrap()).unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn cycle_and_wheel_distances() {
        assert_eq!(dm("cycle:5").get(0, 2), 2);
        let w6 = dm("wheel:6");
        assert_eq!(w6.get(0, 2), 2);
        assert_eq!(w6.get(0, 5), 1);
        assert_eq!(dm("cycle:7").diameter(), 3);
        assert_eq!(dm("hypercube:3").diameter(), 3);
    }

    #[test]
    fn grid_corner_distance() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let g = cartesian_product(&p3, &p3).unwrap();
        assert_eq!(distance_matrix(&g).unwrap().get(0, 8), 4);
    }

    #[test]
    fn disconnected_rejected_with_pair() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            distance_matrix(&g),
            Err(Error::Disconnected { from: 0, to: 2 })
        );
    }

    #[test]
    fn eccentric_sets() {
        assert_eq!(eccentric_vertices(&dm("cycle:5"), 0).unwrap(), set(&[2, 3]));
        assert_eq!(eccentric_vertices(&dm("cycle:6"), 0).unwrap(), set(&[3]));
        assert_eq!(
            eccentric_vertices(&dm("hypercube:3"), 0).unwrap(),
            set(&[7])
        );
        assert!(eccentric_vertices(&dm("cycle:5"), 5).is_err());
    }

    #[test]
    fn intervals() {
        let c6 = dm("cycle:6");
        assert_eq!(interval(&c6, 2, 2).unwrap(), set(&[2]));
        assert_eq!(interval(&c6, 0, 3).unwrap(), VertexSet::full(6));
        assert_eq!(interval(&dm("cycle:5"), 0, 2).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn even_and_symmetric_even() {
        assert!(is_even_graph(&dm("cycle:6")));
        assert!(!is_even_graph(&dm("path:3")));
        assert!(is_even_graph(&dm("hypercube:3")));
        for k in [4, 6, 8, 10] {
            assert!(is_symmetric_even(&dm(&format!("cycle:{k}"))));
        }
        for d in 1..=4 {
            assert!(is_symmetric_even(&dm(&format!("hypercube:{d}"))));
        }
        assert!(!is_symmetric_even(&dm("cycle:5")));
        // K3 is even but I(u, v) is only {u, v}.
        assert!(is_even_graph(&dm("complete:3")) && !is_symmetric_even(&dm("complete:3")));
    }

    #[test]
    fn eccentric_maps() {
        let c6 = unique_eccentric_map(&dm("cycle:6"));
        assert!(c6.total);
        assert!((0..6).all(|i| c6.partner(i) == Some((i + 3) % 6)));
        assert!(!unique_eccentric_map(&dm("cycle:5")).total);
        let q3 = unique_eccentric_map(&dm("hypercube:3"));
        assert!(q3.total && (0..8).all(|i| q3.partner(i) == Some(7 - i)));
        assert!(q3.is_involution());
    }

    #[test]
    fn antipodal_sums() {
        for spec in ["cycle:8", "hypercube:4"] {
            let m = dm(spec);
            assert!(antipodal_sum_check(&m, &unique_eccentric_map(&m)).unwrap());
        }
        let c7 = dm("cycle:7");
        assert_eq!(
            antipodal_sum_check(&c7, &unique_eccentric_map(&c7)),
            Err(Error::EccentricMapNotTotal)
        );
        // Total map but not symmetric even: a path has unique eccentric vertices only at n = 2.
        let p2 = dm("path:2");
        assert!(antipodal_sum_check(&p2, &unique_eccentric_map(&p2)).unwrap());
        let p4 = dm("path:4");
        assert_eq!(
            antipodal_sum_check(&p4, &unique_eccentric_map(&p4)),
            Err(Error::NotSymmetricEven)
        );
    }
}
