//! Partiality, fair centers and exhaustive fair-set inventories.
//!
//! The partiality of `x` with respect to a nonempty `S` is the spread of the
//! distances from `x` to the members of `S`; the fair center of `S` is the
//! set of vertices where that spread is smallest. A fair set is any fair
//! center of some `S` with `|S| >= 2` (or `|S| >= 1` in permissive mode,
//! which only ever adds `V`).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{format_graph6, induced_connected, Graph};
use crate::metric::{distance_matrix, DistanceMatrix};
use crate::parallel::with_workers;
use crate::vertex_set::{subset_at_rank, SubsetsBySize, VertexSet};

/// Default largest vertex count accepted by [`enumerate_fair_sets`].
pub const DEFAULT_CEILING: usize = 24;

/// Chunks the subset space is split into for parallel enumeration.
const CHUNKS: u64 = 256;

/// `max(x, S) - min(x, S)` via the distance layers around `x`.
fn spread(dm: &DistanceMatrix, x: usize, s: VertexSet) -> u32 {
    let layers = dm.layers(x);
    let lo = layers
        .iter()
        .position(|l| l.intersects(s))
        .expect("s is nonempty");
    let hi = layers
        .iter()
        .rposition(|l| l.intersects(s))
        .expect("s is nonempty");
    (hi - lo) as u32
}

fn check_set(dm: &DistanceMatrix, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = s.difference(dm.vertices()).first() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: dm.n(),
        });
    }
    Ok(())
}

pub fn partiality(dm: &DistanceMatrix, x: usize, s: VertexSet) -> Result<u32> {
    check_set(dm, s)?;
    if x >= dm.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: dm.n(),
        });
    }
    Ok(spread(dm, x, s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialityProfile {
    pub s: VertexSet,
    pub f: Vec<u32>,
    pub min_f: u32,
}

pub fn partiality_profile(dm: &DistanceMatrix, s: VertexSet) -> Result<PartialityProfile> {
    check_set(dm, s)?;
    let f: Vec<u32> = (0..dm.n()).map(|x| spread(dm, x, s)).collect();
    let min_f = *f.iter().min().expect("graphs are nonempty");
    Ok(PartialityProfile { s, f, min_f })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FairCenterResult {
    pub s: VertexSet,
    pub center: VertexSet,
    pub min_partiality: u32,
}

fn center_of(dm: &DistanceMatrix, s: VertexSet) -> (VertexSet, u32) {
    let mut best = u32::MAX;
    let mut center = VertexSet::empty();
    for x in 0..dm.n() {
        let f = spread(dm, x, s);
        if f < best {
            best = f;
            center = VertexSet::singleton(x);
        } else if f == best {
            center.insert(x);
        }
    }
    (center, best)
}

pub fn fair_center(dm: &DistanceMatrix, s: VertexSet) -> Result<FairCenterResult> {
    check_set(dm, s)?;
    let (center, min_partiality) = center_of(dm, s);
    Ok(FairCenterResult {
        s,
        center,
        min_partiality,
    })
}

/// Knobs for [`enumerate_fair_sets`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationOptions {
    /// Also use singleton `S` (whose fair center is always `V`).
    pub include_singleton_s: bool,
    /// Stop after this many subsets, counted in enumeration order.
    pub subset_cap: Option<u64>,
    pub ceiling: usize,
    /// Allow `n` above the ceiling.
    pub force: bool,
    #[serde(skip)]
    pub workers: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            include_singleton_s: false,
            subset_cap: None,
            ceiling: DEFAULT_CEILING,
            force: false,
            workers: None,
        }
    }
}

impl EnumerationOptions {
    pub fn strict() -> Self {
        Self::default()
    }

    pub fn permissive() -> Self {
        EnumerationOptions {
            include_singleton_s: true,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: Option<usize>) -> Self {
        self.workers = workers;
        self
    }

    pub fn min_s_size(&self) -> usize {
        if self.include_singleton_s {
            1
        } else {
            2
        }
    }

    fn check_ceiling(&self, n: usize) -> Result<()> {
        if n > self.ceiling && !self.force {
            return Err(Error::CeilingExceeded {
                n,
                ceiling: self.ceiling,
            });
        }
        if n >= 64 {
            return Err(Error::InvalidParameter(
                "exhaustive enumeration needs n < 64".into(),
            ));
        }
        Ok(())
    }
}

/// First `S` (in enumeration order) found for a fair set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub s: VertexSet,
    pub min_partiality: u32,
}

/// Every fair set of one graph with its first witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FairSetInventory {
    /// graph6 string of the graph.
    pub graph_id: String,
    pub n: usize,
    pub include_singleton_s: bool,
    pub ceiling: usize,
    pub subset_cap: Option<u64>,
    pub subsets_examined: u64,
    pub entries: BTreeMap<VertexSet, Witness>,
}

impl FairSetInventory {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, a: VertexSet) -> bool {
        self.entries.contains_key(&a)
    }

    pub fn witness(&self, a: VertexSet) -> Option<&Witness> {
        self.entries.get(&a)
    }

    /// Fair sets in [`VertexSet`] order.
    pub fn sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.entries.keys().copied()
    }

    /// Fair sets of cardinality `n - 1`; always empty if the cardinality
    /// lemma holds.
    pub fn cardinality_violations(&self) -> Vec<VertexSet> {
        if self.n < 2 {
            return vec![];
        }
        self.sets().filter(|a| a.len() == self.n - 1).collect()
    }

    /// Re-derives every entry from its witness.
    pub fn verify_witnesses(&self, dm: &DistanceMatrix) -> bool {
        self.entries.iter().all(|(&a, w)| {
            w.s.len() >= if self.include_singleton_s { 1 } else { 2 }
                && fair_center(dm, w.s)
                    .map(|r| r.center == a && r.min_partiality == w.min_partiality)
                    .unwrap_or(false)
        })
    }
}

#[derive(Serialize)]
struct EntryOut {
    set: VertexSet,
    witness: VertexSet,
    min_partiality: u32,
}

impl Serialize for FairSetInventory {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<EntryOut> = self
            .entries
            .iter()
            .map(|(&set, w)| EntryOut {
                set,
                witness: w.s,
                min_partiality: w.min_partiality,
            })
            .collect();
        let mut st = serializer.serialize_struct("FairSetInventory", 8)?;
        st.serialize_field("graph_id", &self.graph_id)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("include_singleton_s", &self.include_singleton_s)?;
        st.serialize_field("ceiling", &self.ceiling)?;
        st.serialize_field("subset_cap", &self.subset_cap)?;
        st.serialize_field("subsets_examined", &self.subsets_examined)?;
        st.serialize_field("fair_set_count", &self.entries.len())?;
        st.serialize_field("fair_sets", &entries)?;
        st.end()
    }
}

/// Brute-force inventory: the fair center of every admissible `S`.
pub fn enumerate_fair_sets(g: &Graph, opts: &EnumerationOptions) -> Result<FairSetInventory> {
    opts.check_ceiling(g.n())?;
    let dm = distance_matrix(g)?;
    enumerate_with_distances(g, &dm, opts)
}

/// As [`enumerate_fair_sets`] with a precomputed distance matrix for `g`.
pub fn enumerate_with_distances(
    g: &Graph,
    dm: &DistanceMatrix,
    opts: &EnumerationOptions,
) -> Result<FairSetInventory> {
    let n = g.n();
    opts.check_ceiling(n)?;
    let min_size = opts.min_s_size();
    // Subsets below min_size precede every admissible one in the order.
    let skipped: u64 = (0..min_size)
        .map(|k| crate::vertex_set::binomial(n, k))
        .sum();
    let admissible = (1u64 << n) - skipped;
    let (cutoff, examined) = match opts.subset_cap {
        Some(cap) if cap < admissible => (
            if cap == 0 {
                None
            } else {
                subset_at_rank(n, skipped + cap - 1)
            },
            cap,
        ),
        _ => (Some(VertexSet::full(n)), admissible),
    };

    let entries = match cutoff {
        None => BTreeMap::new(),
        Some(cutoff) => with_workers(opts.workers, || {
            let span = 1u64 << n;
            let chunk = span.div_ceil(CHUNKS).max(1);
            (0..span.div_ceil(chunk))
                .into_par_iter()
                .map(|c| {
                    let mut local: BTreeMap<VertexSet, Witness> = BTreeMap::new();
                    for bits in c * chunk..((c + 1) * chunk).min(span) {
                        let s = VertexSet::from_bits(bits);
                        if s.len() < min_size || s > cutoff {
                            continue;
                        }
                        let (center, min_partiality) = center_of(dm, s);
                        local
                            .entry(center)
                            .and_modify(|w| {
                                if s < w.s {
                                    *w = Witness { s, min_partiality };
                                }
                            })
                            .or_insert(Witness { s, min_partiality });
                    }
                    local
                })
                .reduce(BTreeMap::new, merge_inventories)
        }),
    };

    Ok(FairSetInventory {
        graph_id: format_graph6(g),
        n,
        include_singleton_s: opts.include_singleton_s,
        ceiling: opts.ceiling,
        subset_cap: opts.subset_cap,
        subsets_examined: examined,
        entries,
    })
}

/// Union keeping the smallest witness per fair set.
fn merge_inventories(
    mut a: BTreeMap<VertexSet, Witness>,
    b: BTreeMap<VertexSet, Witness>,
) -> BTreeMap<VertexSet, Witness> {
    for (set, w) in b {
        a.entry(set)
            .and_modify(|cur| {
                if w.s < cur.s {
                    *cur = w;
                }
            })
            .or_insert(w);
    }
    a
}

/// Smallest `S` whose fair center is exactly `a`, if any.
pub fn find_witness(
    dm: &DistanceMatrix,
    a: VertexSet,
    include_singleton_s: bool,
) -> Option<VertexSet> {
    let n = dm.n();
    if a.is_empty() || !a.is_subset(dm.vertices()) {
        return None;
    }
    let min_size = if include_singleton_s { 1 } else { 2 };
    SubsetsBySize::new(n, min_size, n).find(|&s| center_of(dm, s).0 == a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetVerdict {
    pub set: VertexSet,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectedFairSet {
    pub set: VertexSet,
    pub witness: VertexSet,
}

/// Induced connectivity of every fair set in an inventory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub graph_id: String,
    pub include_singleton_s: bool,
    pub all_connected: bool,
    pub fair_set_count: usize,
    pub disconnected: Vec<DisconnectedFairSet>,
    pub verdicts: Vec<SetVerdict>,
}

pub fn connectivity_audit(g: &Graph, inv: &FairSetInventory) -> Result<AuditReport> {
    let id = format_graph6(g);
    if id != inv.graph_id {
        return Err(Error::InventoryMismatch {
            inventory: inv.graph_id.clone(),
            graph: id,
        });
    }
    let mut verdicts = Vec::with_capacity(inv.len());
    let mut disconnected = Vec::new();
    for (&set, w) in &inv.entries {
        let connected = induced_connected(g, set)?;
        if !connected {
            disconnected.push(DisconnectedFairSet { set, witness: w.s });
        }
        verdicts.push(SetVerdict { set, connected });
    }
    Ok(AuditReport {
        graph_id: id,
        include_singleton_s: inv.include_singleton_s,
        all_connected: disconnected.is_empty(),
        fair_set_count: inv.len(),
        disconnected,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn graph(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    fn dm(spec: &str) -> DistanceMatrix {
        distance_matrix(&graph(spec)).unwrap()
    }

    /// Two K4's on {0,1,2,3} and {1,2,3,4} sharing the triangle H = {1,2,3}.
    fn pasted_k4s() -> Graph {
        Graph::new(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (1, 2),
                (1, 3),
                (2, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn partiality_spot_values() {
        let k5 = dm("complete:5");
        let s = set(&[0, 1, 3]);
        for x in s {
            assert_eq!(partiality(&k5, x, s).unwrap(), 1);
        }
        assert_eq!(partiality(&dm("cycle:7"), 3, set(&[3])).unwrap(), 0);
        let w5 = dm("wheel:5");
        let v = VertexSet::full(5);
        assert_eq!(partiality(&w5, 4, v).unwrap(), 1);
        for rim in 0..4 {
            assert_eq!(partiality(&w5, rim, v).unwrap(), 2);
        }
    }

    #[test]
    fn partiality_errors() {
        let c5 = dm("cycle:5");
        assert_eq!(partiality(&c5, 0, VertexSet::empty()), Err(Error::EmptySet));
        assert!(matches!(
            partiality(&c5, 7, set(&[0])),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            fair_center(&c5, set(&[9])),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(fair_center(&c5, VertexSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn fair_center_spot_values() {
        assert_eq!(
            fair_center(&dm("complete:4"), set(&[0, 1])).unwrap().center,
            set(&[2, 3])
        );
        let w5 = fair_center(&dm("wheel:5"), set(&[4, 3])).unwrap();
        assert_eq!(w5.center, set(&[0, 2]));
        let pasted = distance_matrix(&pasted_k4s()).unwrap();
        let r = fair_center(&pasted, set(&[1, 2, 3])).unwrap();
        assert_eq!((r.center, r.min_partiality), (set(&[0, 4]), 0));
        let single = fair_center(&dm("path:4"), set(&[2])).unwrap();
        assert_eq!(single.center, VertexSet::full(4));
    }

    #[test]
    fn profile_matches_pointwise() {
        let m = dm("hypercube:3");
        let s = set(&[0, 3, 5]);
        let p = partiality_profile(&m, s).unwrap();
        for x in 0..8 {
            assert_eq!(p.f[x], partiality(&m, x, s).unwrap());
        }
        assert_eq!(p.min_f, *p.f.iter().min().unwrap());
    }

    #[test]
    fn k4_inventory() {
        let inv = enumerate_fair_sets(&graph("complete:4"), &EnumerationOptions::strict()).unwrap();
        // Every A with |A| != 3; V comes from S = V.
        let expected: Vec<VertexSet> = SubsetsBySize::new(4, 1, 4)
            .filter(|a| a.len() != 3)
            .collect();
        assert_eq!(inv.sets().collect::<Vec<_>>(), expected);
        assert_eq!(
            inv.witness(VertexSet::full(4)).unwrap().s,
            VertexSet::full(4)
        );
        let perm =
            enumerate_fair_sets(&graph("complete:4"), &EnumerationOptions::permissive()).unwrap();
        assert_eq!(perm.sets().collect::<Vec<_>>(), expected);
        assert_eq!(perm.witness(VertexSet::full(4)).unwrap().s, set(&[0]));
    }

    #[test]
    fn wheel5_inventory() {
        let inv = enumerate_fair_sets(&graph("wheel:5"), &EnumerationOptions::strict()).unwrap();
        let expected: Vec<VertexSet> = [
            set(&[4]),
            set(&[0, 2]),
            set(&[1, 3]),
            set(&[0, 2, 4]),
            set(&[1, 3, 4]),
            VertexSet::full(5),
        ]
        .into_iter()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(inv.sets().collect::<Vec<_>>(), expected);
        assert_eq!(inv.witness(VertexSet::full(5)).unwrap().s.len(), 3);
    }

    #[test]
    fn c5_contains_independent_sets() {
        let inv = enumerate_fair_sets(&graph("cycle:5"), &EnumerationOptions::strict()).unwrap();
        assert!(inv.contains(set(&[0, 2])));
        assert!(inv.contains(set(&[1, 3])));
        assert!(!inv.contains(set(&[0, 1])));
    }

    #[test]
    fn single_vertex_inventories() {
        let g = Graph::new(1, &[]).unwrap();
        assert!(enumerate_fair_sets(&g, &EnumerationOptions::strict())
            .unwrap()
            .is_empty());
        let p = enumerate_fair_sets(&g, &EnumerationOptions::permissive()).unwrap();
        assert_eq!(p.sets().collect::<Vec<_>>(), vec![set(&[0])]);
    }

    #[test]
    fn ceiling_and_connectivity_errors() {
        let opts = EnumerationOptions {
            ceiling: 4,
            ..Default::default()
        };
        assert_eq!(
            enumerate_fair_sets(&graph("cycle:5"), &opts),
            Err(Error::CeilingExceeded { n: 5, ceiling: 4 })
        );
        let forced = EnumerationOptions {
            force: true,
            ..opts
        };
        assert!(enumerate_fair_sets(&graph("cycle:5"), &forced).is_ok());
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            enumerate_fair_sets(&g, &EnumerationOptions::strict()),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn subset_cap_truncates_in_order() {
        let g = graph("cycle:6");
        let full = enumerate_fair_sets(&g, &EnumerationOptions::strict()).unwrap();
        assert_eq!(full.subsets_examined, 64 - 7);
        // The first 15 subsets are the pairs.
        let capped = enumerate_fair_sets(
            &g,
            &EnumerationOptions {
                subset_cap: Some(15),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(capped.subsets_examined, 15);
        let m = distance_matrix(&g).unwrap();
        let mut expected = BTreeMap::new();
        for s in SubsetsBySize::new(6, 2, 2) {
            let (c, p) = center_of(&m, s);
            expected.entry(c).or_insert(Witness {
                s,
                min_partiality: p,
            });
        }
        assert_eq!(capped.entries, expected);
    }

    #[test]
    fn worker_count_does_not_change_inventory() {
        let g = graph("wheel:8");
        let one =
            enumerate_fair_sets(&g, &EnumerationOptions::strict().with_workers(Some(1))).unwrap();
        let four =
            enumerate_fair_sets(&g, &EnumerationOptions::strict().with_workers(Some(4))).unwrap();
        assert_eq!(one, four);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&four).unwrap()
        );
    }

    #[test]
    fn witnesses_are_first_in_order() {
        let g = graph("cycle:7");
        let m = distance_matrix(&g).unwrap();
        let inv = enumerate_fair_sets(&g, &EnumerationOptions::strict()).unwrap();
        assert!(inv.verify_witnesses(&m));
        for (&a, w) in &inv.entries {
            assert_eq!(find_witness(&m, a, false), Some(w.s));
        }
    }

    #[test]
    fn find_witness_cases() {
        let c5 = dm("cycle:5");
        let s = find_witness(&c5, set(&[0, 2]), false).unwrap();
        assert_eq!(fair_center(&c5, s).unwrap().center, set(&[0, 2]));
        assert_eq!(
            find_witness(&dm("complete:4"), set(&[0, 1, 2]), false),
            None
        );
        assert_eq!(
            find_witness(&dm("path:4"), VertexSet::full(4), true).map(|s| s.len()),
            Some(1)
        );
        assert_eq!(find_witness(&c5, VertexSet::empty(), true), None);
    }

    #[test]
    fn audits() {
        let c5 = graph("cycle:5");
        let inv = enumerate_fair_sets(&c5, &EnumerationOptions::strict()).unwrap();
        let rep = connectivity_audit(&c5, &inv).unwrap();
        assert!(!rep.all_connected);
        assert!(rep.disconnected.iter().any(|d| d.set == set(&[0, 2])));

        let pasted = pasted_k4s();
        let inv = enumerate_fair_sets(&pasted, &EnumerationOptions::strict()).unwrap();
        let rep = connectivity_audit(&pasted, &inv).unwrap();
        let hit = rep
            .disconnected
            .iter()
            .find(|d| d.set == set(&[0, 4]))
            .unwrap();
        assert_eq!(
            fair_center(&distance_matrix(&pasted).unwrap(), hit.witness)
                .unwrap()
                .center,
            set(&[0, 4])
        );
        assert_eq!(hit.witness, set(&[1, 2, 3]));

        assert!(matches!(
            connectivity_audit(&graph("cycle:6"), &inv),
            Err(Error::InventoryMismatch { .. })
        ));
    }

    #[test]
    fn inventory_json_shape() {
        let inv = enumerate_fair_sets(&graph("path:2"), &EnumerationOptions::strict()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&inv).unwrap();
        assert_eq!(v["graph_id"], "A_");
        assert_eq!(v["fair_sets"][0]["set"], serde_json::json!([0, 1]));
        assert_eq!(v["fair_sets"][0]["witness"], serde_json::json!([0, 1]));
    }
}
