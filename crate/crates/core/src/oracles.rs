//! Closed-form fair-set characterizations, and drivers that compare them
//! with brute-force inventories.
//!
//! Oracles are pure predicates over family parameters and a candidate set.
//! They never look at a graph, so that agreement with [`enumerate_fair_sets`]
//! is an independent check. All labellings are 0-based: the `k`-th vertex of
//! a family in 1-based notation is vertex `k - 1` here.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fairness::{enumerate_fair_sets, fair_center, partiality_profile, EnumerationOptions};
use crate::graph::{
    cartesian_product, format_graph6, generate, induced_connected, product_set, product_vertex,
    FamilySpec, Graph,
};
use crate::metric::{distance_matrix, is_symmetric_even, unique_eccentric_map, EccentricMap};
use crate::vertex_set::{SubsetsBySize, VertexSet};

fn check_candidate(n: usize, a: VertexSet) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = a.difference(VertexSet::full(n)).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

/// `K_n`, `n >= 2`: every `A` with `|A| != n - 1`. `V` itself is the fair
/// center of `S = V`, so it is fair under either witness convention.
pub fn oracle_complete(n: usize, a: VertexSet) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "complete-graph oracle needs n >= 2".into(),
        ));
    }
    check_candidate(n, a)?;
    Ok(a.len() != n - 1)
}

/// `K_n` minus the edge `(0, 1)`, `n >= 3`: `|A| != n - 1` and `A` does not
/// split the nonadjacent pair.
pub fn oracle_complete_minus_edge(n: usize, a: VertexSet) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "K_n - e oracle needs n >= 3".into(),
        ));
    }
    check_candidate(n, a)?;
    let pair = VertexSet::from_bits(0b11);
    Ok(a.len() != n - 1 && (pair.is_subset(a) || !pair.intersects(a)))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`: `|A ∩ X| != m - 1` and
/// `|A ∩ Y| != n - 1`.
pub fn oracle_complete_bipartite(m: usize, n: usize, a: VertexSet) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "both parts must be nonempty".into(),
        ));
    }
    check_candidate(m + n, a)?;
    let x = VertexSet::full(m);
    let in_x = a.intersection(x).len();
    let in_y = a.difference(x).len();
    Ok(in_x + 1 != m && in_y + 1 != n)
}

/// How the length of a rim path is counted in the wheel characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpretation {
    Edges,
    Vertices,
}

impl Interpretation {
    pub const ALL: [Interpretation; 2] = [Interpretation::Edges, Interpretation::Vertices];
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interpretation::Edges => "edges",
            Interpretation::Vertices => "vertices",
        })
    }
}

impl FromStr for Interpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(Interpretation::Edges),
            "vertices" => Ok(Interpretation::Vertices),
            _ => Err(Error::InvalidParameter(format!(
                "interpretation must be edges or vertices, got {s:?}"
            ))),
        }
    }
}

/// Nonempty proper arc of the cycle `0..r`, i.e. an induced path.
fn is_rim_arc(r: usize, a: VertexSet) -> bool {
    let k = a.len();
    if k == 0 || k >= r {
        return false;
    }
    // Exactly one vertex of the arc has its predecessor outside it.
    a.iter().filter(|&v| !a.contains((v + r - 1) % r)).count() == 1
}

fn rim_distance(r: usize, u: usize, v: usize) -> usize {
    let d = u.abs_diff(v);
    d.min(r - d)
}

/// Whether `a` has the form `A₁ ∪ {hub}` with `A₁` a nonempty proper part
/// of the rim.
pub fn is_hub_form(n: usize, a: VertexSet) -> bool {
    let hub = n - 1;
    a.contains(hub) && a.len() > 1 && a.len() < n
}

/// `W_n`, `n >= 6`, hub `n - 1`, rim cycle on `0..n-1`. Fair sets are the
/// singletons, rim pairs at rim distance 2, `V`, and `A₁ ∪ {hub}` where `A₁`
/// is not a rim path longer than `n - 6`.
pub fn oracle_wheel(n: usize, a: VertexSet, interpretation: Interpretation) -> Result<bool> {
    if n < 6 {
        return Err(Error::InvalidParameter(
            "wheel oracle needs n >= 6 (W5 has its own oracle, W4 is K4)".into(),
        ));
    }
    check_candidate(n, a)?;
    let hub = n - 1;
    let rim = n - 1;
    if a.len() == 1 || a.len() == n {
        return Ok(true);
    }
    if !a.contains(hub) {
        return Ok(match a.to_vec()[..] {
            [u, v] => rim_distance(rim, u, v) == 2,
            _ => false,
        });
    }
    let a1 = a.without(hub);
    if !is_rim_arc(rim, a1) {
        return Ok(true);
    }
    let length = match interpretation {
        Interpretation::Edges => a1.len() - 1,
        Interpretation::Vertices => a1.len(),
    };
    Ok(length + 6 <= n)
}

/// `W_5`, hub 4, rim 0-1-2-3-0: exactly six fair sets.
pub fn oracle_wheel5(a: VertexSet) -> Result<bool> {
    check_candidate(5, a)?;
    const FAIR: [u64; 6] = [0b10000, 0b00101, 0b01010, 0b10101, 0b11010, 0b11111];
    Ok(FAIR.contains(&a.bits()))
}

/// `C_{2m+1}`: whenever `A` contains adjacent `i, i+1` it also contains
/// `i + m + 1`, the vertex eccentric to both.
pub fn oracle_odd_cycle(m: usize, a: VertexSet) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidParameter("odd cycle needs m >= 1".into()));
    }
    let k = 2 * m + 1;
    check_candidate(k, a)?;
    Ok((0..k)
        .filter(|&i| a.contains(i) && a.contains((i + 1) % k))
        .all(|i| a.contains((i + m + 1) % k)))
}

/// Symmetric even host: `A` is closed under the eccentric involution.
pub fn oracle_symmetric_even(em: &EccentricMap, a: VertexSet) -> Result<bool> {
    if !em.is_involution() {
        return Err(Error::NotSymmetricEven);
    }
    check_candidate(em.bar.len(), a)?;
    Ok(a.iter()
        .all(|x| em.partner(x).is_some_and(|b| a.contains(b))))
}

/// Which closed form to test against which family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "oracle", rename_all = "snake_case")]
pub enum OracleSpec {
    Complete {
        n: usize,
    },
    CompleteMinusEdge {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    Wheel {
        n: usize,
        interpretation: Interpretation,
    },
    Wheel5,
    OddCycle {
        m: usize,
    },
    /// Even cycles and hypercubes.
    SymmetricEven {
        family: FamilySpec,
    },
}

impl OracleSpec {
    pub fn family(&self) -> FamilySpec {
        match *self {
            OracleSpec::Complete { n } => FamilySpec::Complete(n),
            OracleSpec::CompleteMinusEdge { n } => FamilySpec::CompleteMinusEdge(n),
            OracleSpec::CompleteBipartite { m, n } => FamilySpec::CompleteBipartite(m, n),
            OracleSpec::Wheel { n, .. } => FamilySpec::Wheel(n),
            OracleSpec::Wheel5 => FamilySpec::Wheel(5),
            OracleSpec::OddCycle { m } => FamilySpec::Cycle(2 * m + 1),
            OracleSpec::SymmetricEven { family } => family,
        }
    }

    pub fn id(&self) -> String {
        match *self {
            OracleSpec::Complete { .. } => "complete".into(),
            OracleSpec::CompleteMinusEdge { .. } => "complete_minus_edge".into(),
            OracleSpec::CompleteBipartite { .. } => "complete_bipartite".into(),
            OracleSpec::Wheel { interpretation, .. } => format!("wheel[{interpretation}]"),
            OracleSpec::Wheel5 => "wheel5".into(),
            OracleSpec::OddCycle { .. } => "odd_cycle".into(),
            OracleSpec::SymmetricEven { .. } => "symmetric_even".into(),
        }
    }

    pub fn interpretation(&self) -> Option<Interpretation> {
        match *self {
            OracleSpec::Wheel { interpretation, .. } => Some(interpretation),
            _ => None,
        }
    }

    /// Oracle matching a family instance. Wheels with `n >= 6` take the
    /// given interpretation; `wheel:5` maps to the dedicated oracle.
    pub fn for_family(family: FamilySpec, interpretation: Interpretation) -> Result<Self> {
        let unsupported = || Error::InvalidFamily(format!("no closed-form oracle for {family}"));
        Ok(match family {
            FamilySpec::Complete(n) if n >= 2 => OracleSpec::Complete { n },
            FamilySpec::CompleteMinusEdge(n) if n >= 3 => OracleSpec::CompleteMinusEdge { n },
            FamilySpec::CompleteBipartite(m, n) => OracleSpec::CompleteBipartite { m, n },
            FamilySpec::Star(n) => OracleSpec::CompleteBipartite { m: 1, n },
            FamilySpec::Wheel(5) => OracleSpec::Wheel5,
            FamilySpec::Wheel(n) if n >= 6 => OracleSpec::Wheel { n, interpretation },
            FamilySpec::Cycle(k) if k % 2 == 1 => OracleSpec::OddCycle { m: k / 2 },
            FamilySpec::Cycle(_) | FamilySpec::Hypercube(_) => OracleSpec::SymmetricEven { family },
            _ => return Err(unsupported()),
        })
    }
}

/// Parses `wheel5`, `odd_cycle:m`, or any family string accepted by
/// [`OracleSpec::for_family`] (wheels default to the edge count reading).
impl FromStr for OracleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "wheel5" {
            return Ok(OracleSpec::Wheel5);
        }
        if let Some(m) = s.strip_prefix("odd_cycle:") {
            let m = m.parse().map_err(|_| Error::InvalidFamily(s.into()))?;
            if m == 0 {
                return Err(Error::InvalidFamily(s.into()));
            }
            return Ok(OracleSpec::OddCycle { m });
        }
        OracleSpec::for_family(s.parse()?, Interpretation::Edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Exact,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissedFairSet {
    pub set: VertexSet,
    pub witness: VertexSet,
}

/// Oracle predictions against the brute-force inventory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub graph_id: String,
    pub oracle_id: String,
    pub family: FamilySpec,
    pub parameters: Vec<u64>,
    pub interpretation: Option<Interpretation>,
    pub include_singleton_s: bool,
    pub candidates_checked: u64,
    pub fair_set_count: usize,
    /// Oracle says fair; brute force found no witness.
    pub false_positives: Vec<VertexSet>,
    /// Brute force found a witness; oracle rejects.
    pub false_negatives: Vec<MissedFairSet>,
    pub verdict: Verdict,
}

impl DiscrepancyReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == Verdict::Exact
    }

    /// Every mismatched set.
    pub fn mismatches(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.false_positives
            .iter()
            .copied()
            .chain(self.false_negatives.iter().map(|m| m.set))
    }
}

/// Compares an oracle with brute force over every nonempty candidate set.
pub fn verify_family(spec: &OracleSpec, opts: &EnumerationOptions) -> Result<DiscrepancyReport> {
    let family = spec.family();
    let g = generate(&family)?;
    let n = g.n();
    let inv = enumerate_fair_sets(&g, opts)?;
    let em = match spec {
        OracleSpec::SymmetricEven { .. } => {
            let dm = distance_matrix(&g)?;
            if !is_symmetric_even(&dm) {
                return Err(Error::NotSymmetricEven);
            }
            Some(unique_eccentric_map(&dm))
        }
        _ => None,
    };
    let predict = |a: VertexSet| -> Result<bool> {
        match *spec {
            OracleSpec::Complete { n } => oracle_complete(n, a),
            OracleSpec::CompleteMinusEdge { n } => oracle_complete_minus_edge(n, a),
            OracleSpec::CompleteBipartite { m, n } => oracle_complete_bipartite(m, n, a),
            OracleSpec::Wheel { n, interpretation } => oracle_wheel(n, a, interpretation),
            OracleSpec::Wheel5 => oracle_wheel5(a),
            OracleSpec::OddCycle { m } => oracle_odd_cycle(m, a),
            OracleSpec::SymmetricEven { .. } => {
                oracle_symmetric_even(em.as_ref().expect("computed above"), a)
            }
        }
    };
    let mut false_positives = Vec::new();
    let mut false_negatives = Vec::new();
    let mut checked = 0u64;
    for a in SubsetsBySize::new(n, 1, n) {
        checked += 1;
        let predicted = predict(a)?;
        match (predicted, inv.witness(a)) {
            (true, None) => false_positives.push(a),
            (false, Some(w)) => false_negatives.push(MissedFairSet {
                set: a,
                witness: w.s,
            }),
            _ => {}
        }
    }
    let verdict = if false_positives.is_empty() && false_negatives.is_empty() {
        Verdict::Exact
    } else {
        Verdict::Mismatch
    };
    Ok(DiscrepancyReport {
        graph_id: format_graph6(&g),
        oracle_id: spec.id(),
        family,
        parameters: family.params(),
        interpretation: spec.interpretation(),
        include_singleton_s: opts.include_singleton_s,
        candidates_checked: checked,
        fair_set_count: inv.len(),
        false_positives,
        false_negatives,
        verdict,
    })
}

/// Both length readings of the wheel characterization side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelComparison {
    pub n: usize,
    pub include_singleton_s: bool,
    pub reports: Vec<WheelInterpretationResult>,
    /// Interpretations whose verdict is exact.
    pub exact: Vec<Interpretation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelInterpretationResult {
    pub interpretation: Interpretation,
    /// No mismatch outside the `A₁ ∪ {hub}` sets.
    pub agrees_outside_hub_form: bool,
    pub hub_form_mismatches: Vec<VertexSet>,
    pub report: DiscrepancyReport,
}

impl WheelComparison {
    pub fn some_interpretation_agrees_outside_hub_form(&self) -> bool {
        self.reports.iter().any(|r| r.agrees_outside_hub_form)
    }
}

pub fn compare_wheel(n: usize, opts: &EnumerationOptions) -> Result<WheelComparison> {
    let mut reports = Vec::new();
    for interpretation in Interpretation::ALL {
        let report = verify_family(&OracleSpec::Wheel { n, interpretation }, opts)?;
        let hub_form_mismatches: Vec<VertexSet> =
            report.mismatches().filter(|&a| is_hub_form(n, a)).collect();
        let agrees_outside_hub_form = report.mismatches().all(|a| is_hub_form(n, a));
        reports.push(WheelInterpretationResult {
            interpretation,
            agrees_outside_hub_form,
            hub_form_mismatches,
            report,
        });
    }
    let exact = reports
        .iter()
        .filter(|r| r.report.is_exact())
        .map(|r| r.interpretation)
        .collect();
    Ok(WheelComparison {
        n,
        include_singleton_s: opts.include_singleton_s,
        reports,
        exact,
    })
}

/// Outcome of comparing `FC(S₁ × S₂)` in `G₁ □ G₂` with `FC(S₁) × FC(S₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCheck {
    pub g1: String,
    pub g2: String,
    pub s1: VertexSet,
    pub s2: VertexSet,
    /// Brute-force fair center of `S₁ × S₂` in the product.
    pub product_center: VertexSet,
    pub center1: VertexSet,
    pub center2: VertexSet,
    /// `center1 × center2` in product indexing.
    pub predicted_center: VertexSet,
    pub identity_holds: bool,
    /// `f((x, y), S₁ × S₂) = f(x, S₁) + f(y, S₂)` at every vertex.
    pub additivity_holds: bool,
    pub product_center_connected: bool,
    pub center1_connected: bool,
    pub center2_connected: bool,
    /// Product center connected iff both factor centers are.
    pub connectivity_corollary_holds: bool,
}

impl ProductCheck {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.additivity_holds && self.connectivity_corollary_holds
    }
}

pub fn verify_product_identity(
    g1: &Graph,
    g2: &Graph,
    s1: VertexSet,
    s2: VertexSet,
) -> Result<ProductCheck> {
    g1.check_set(s1)?;
    g2.check_set(s2)?;
    if s1.is_empty() || s2.is_empty() {
        return Err(Error::EmptySet);
    }
    if s1.len() * s2.len() < 2 {
        return Err(Error::InvalidParameter("need |S1|·|S2| >= 2".into()));
    }
    let product = cartesian_product(g1, g2)?;
    let (dm1, dm2, dmp) = (
        distance_matrix(g1)?,
        distance_matrix(g2)?,
        distance_matrix(&product)?,
    );
    let nh = g2.n();
    let s = product_set(nh, s1, s2);

    let whole = partiality_profile(&dmp, s)?;
    let product_center = fair_center(&dmp, s)?.center;
    let p1 = partiality_profile(&dm1, s1)?;
    let p2 = partiality_profile(&dm2, s2)?;
    let center1 = fair_center(&dm1, s1)?.center;
    let center2 = fair_center(&dm2, s2)?.center;
    let predicted_center = product_set(nh, center1, center2);

    let additivity_holds = (0..g1.n())
        .all(|x| (0..nh).all(|y| whole.f[product_vertex(nh, x, y)] == p1.f[x] + p2.f[y]));
    let product_center_connected = induced_connected(&product, product_center)?;
    let center1_connected = induced_connected(g1, center1)?;
    let center2_connected = induced_connected(g2, center2)?;
    Ok(ProductCheck {
        g1: format_graph6(g1),
        g2: format_graph6(g2),
        s1,
        s2,
        product_center,
        center1,
        center2,
        predicted_center,
        identity_holds: product_center == predicted_center,
        additivity_holds,
        product_center_connected,
        center1_connected,
        center2_connected,
        connectivity_corollary_holds: product_center_connected
            == (center1_connected && center2_connected),
    })
}

/// One randomly drawn product-identity instance.
#[derive(Clone, Debug)]
pub struct ProductCase {
    pub g1: Graph,
    pub g2: Graph,
    pub s1: VertexSet,
    pub s2: VertexSet,
}

/// Seeded random factor pairs with `|V₁|·|V₂| <= max_product_order` and
/// random nonempty `S₁`, `S₂` with `|S₁|·|S₂| >= 2`.
pub fn random_product_cases(seed: u64, count: usize, max_product_order: usize) -> Vec<ProductCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_product_order = max_product_order.max(2);
    let random_set = |rng: &mut ChaCha8Rng, n: usize| loop {
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        if !s.is_empty() {
            return s;
        }
    };
    (0..count)
        .map(|_| loop {
            let n1 = rng.gen_range(1..=max_product_order.min(10));
            let n2 = rng.gen_range(1..=max_product_order / n1);
            if n1 * n2 < 2 {
                continue;
            }
            let density = rng.gen_range(0.0..0.5);
            let g1 = crate::graph::random_connected(n1, density, &mut rng);
            let g2 = crate::graph::random_connected(n2, density, &mut rng);
            let s1 = random_set(&mut rng, n1);
            let s2 = random_set(&mut rng, n2);
            if s1.len() * s2.len() >= 2 {
                break ProductCase { g1, g2, s1, s2 };
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn complete_predicates() {
        assert!(oracle_complete(4, set(&[2, 3])).unwrap());
        assert!(!oracle_complete(4, set(&[0, 1, 2])).unwrap());
        assert!(oracle_complete(4, VertexSet::full(4)).unwrap());
        assert_eq!(oracle_complete(4, VertexSet::empty()), Err(Error::EmptySet));
        assert!(oracle_complete(1, set(&[0])).is_err());
    }

    #[test]
    fn complete_minus_edge_predicates() {
        assert!(oracle_complete_minus_edge(5, set(&[0, 1, 2])).unwrap());
        assert!(!oracle_complete_minus_edge(5, set(&[0, 2])).unwrap());
        assert!(oracle_complete_minus_edge(5, set(&[2, 3])).unwrap());
        assert!(!oracle_complete_minus_edge(5, set(&[1, 2, 3, 4])).unwrap());
    }

    #[test]
    fn bipartite_predicates() {
        // K_{5,4}: A1 = {x1,x2,x3}, A2 = {y1,y2}.
        assert!(oracle_complete_bipartite(5, 4, set(&[0, 1, 2, 5, 6])).unwrap());
        assert!(!oracle_complete_bipartite(3, 3, set(&[0, 1])).unwrap());
        assert!(!oracle_complete_bipartite(3, 3, set(&[0, 1, 3])).unwrap());
    }

    #[test]
    fn rim_arcs() {
        assert!(is_rim_arc(6, set(&[5, 0, 1])));
        assert!(is_rim_arc(6, set(&[3])));
        assert!(!is_rim_arc(6, set(&[0, 2])));
        assert!(!is_rim_arc(6, VertexSet::full(6)));
        assert!(!is_rim_arc(6, VertexSet::empty()));
    }

    #[test]
    fn wheel_predicates() {
        for i in 0..7 {
            assert!(oracle_wheel(7, set(&[i]), Interpretation::Edges).unwrap());
        }
        assert!(oracle_wheel(7, set(&[0, 2]), Interpretation::Edges).unwrap());
        assert!(oracle_wheel(7, set(&[0, 4]), Interpretation::Edges).unwrap());
        assert!(!oracle_wheel(7, set(&[0, 3]), Interpretation::Edges).unwrap());
        assert!(!oracle_wheel(7, set(&[0, 1]), Interpretation::Edges).unwrap());
        // W8: FC({0,1,2,hub}) = V minus {0, 2}.
        let a = VertexSet::full(8).difference(set(&[0, 2]));
        assert!(oracle_wheel(8, a, Interpretation::Edges).unwrap());
        assert!(oracle_wheel(8, a, Interpretation::Vertices).unwrap());
        assert!(oracle_wheel(5, set(&[0]), Interpretation::Edges).is_err());
    }

    #[test]
    fn wheel5_predicates() {
        assert!(oracle_wheel5(set(&[4])).unwrap());
        assert!(!oracle_wheel5(set(&[0, 1])).unwrap());
        assert_eq!(
            SubsetsBySize::new(5, 1, 5)
                .filter(|&a| oracle_wheel5(a).unwrap())
                .count(),
            6
        );
    }

    #[test]
    fn odd_cycle_predicates() {
        assert!(oracle_odd_cycle(2, set(&[0, 2])).unwrap());
        assert!(!oracle_odd_cycle(2, set(&[0, 1])).unwrap());
        assert!(oracle_odd_cycle(2, set(&[0, 1, 3])).unwrap());
        // Wrap-around pair (4, 0) needs vertex 2.
        assert!(!oracle_odd_cycle(2, set(&[4, 0])).unwrap());
    }

    #[test]
    fn symmetric_even_predicates() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let em = unique_eccentric_map(&distance_matrix(&g).unwrap());
        assert!(oracle_symmetric_even(&em, set(&[0, 3])).unwrap());
        assert!(!oracle_symmetric_even(&em, set(&[0])).unwrap());
        let c5 = unique_eccentric_map(
            &distance_matrix(&generate(&FamilySpec::Cycle(5)).unwrap()).unwrap(),
        );
        assert_eq!(
            oracle_symmetric_even(&c5, set(&[0])),
            Err(Error::NotSymmetricEven)
        );
    }

    #[test]
    fn oracle_spec_parsing() {
        assert_eq!("wheel5".parse::<OracleSpec>().unwrap(), OracleSpec::Wheel5);
        assert_eq!("wheel:5".parse::<OracleSpec>().unwrap(), OracleSpec::Wheel5);
        assert_eq!(
            "cycle:7".parse::<OracleSpec>().unwrap(),
            OracleSpec::OddCycle { m: 3 }
        );
        assert_eq!(
            "odd_cycle:4".parse::<OracleSpec>().unwrap().family(),
            FamilySpec::Cycle(9)
        );
        assert!(matches!(
            "cycle:6".parse::<OracleSpec>().unwrap(),
            OracleSpec::SymmetricEven { .. }
        ));
        assert_eq!(
            "star:3".parse::<OracleSpec>().unwrap(),
            OracleSpec::CompleteBipartite { m: 1, n: 3 }
        );
        assert!("path:4".parse::<OracleSpec>().is_err());
        assert!("random_tree:5".parse::<OracleSpec>().is_err());
    }

    #[test]
    fn small_family_verdicts() {
        let opts = EnumerationOptions::strict();
        for spec in [
            "complete:4",
            "complete_minus_edge:5",
            "wheel5",
            "cycle:7",
            "hypercube:3",
            "complete_bipartite:2,2",
        ] {
            let r = verify_family(&spec.parse().unwrap(), &opts).unwrap();
            assert!(r.is_exact(), "{spec}: {r:?}");
        }
    }

    #[test]
    fn wheel_seven_reports_both_readings() {
        let cmp = compare_wheel(7, &EnumerationOptions::strict()).unwrap();
        assert_eq!(cmp.reports.len(), 2);
        assert!(cmp.some_interpretation_agrees_outside_hub_form());
        assert_eq!(cmp.exact, vec![Interpretation::Edges]);
        let vertices = &cmp.reports[1];
        assert!(!vertices.hub_form_mismatches.is_empty());
        assert!(vertices.agrees_outside_hub_form);
    }

    #[test]
    fn product_grid_example() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let ends = set(&[0, 2]);
        let r = verify_product_identity(&p3, &p3, ends, ends).unwrap();
        assert_eq!(r.center1, set(&[1]));
        assert_eq!(r.product_center, set(&[4]));
        assert!(r.holds());
    }

    #[test]
    fn product_with_trivial_factor() {
        let k1 = Graph::new(1, &[]).unwrap();
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let s1 = set(&[0, 1]);
        let r = verify_product_identity(&g, &k1, s1, set(&[0])).unwrap();
        let fc = fair_center(&distance_matrix(&g).unwrap(), s1)
            .unwrap()
            .center;
        assert_eq!(r.product_center, fc);
        assert!(r.holds());
        assert!(verify_product_identity(&k1, &k1, set(&[0]), set(&[0])).is_err());
    }

    #[test]
    fn random_product_cases_respect_bounds() {
        let cases = random_product_cases(7, 30, 20);
        assert_eq!(cases.len(), 30);
        for c in &cases {
            assert!(c.g1.n() * c.g2.n() <= 20);
            assert!(c.s1.len() * c.s2.len() >= 2);
            assert!(c.g1.is_connected() && c.g2.is_connected());
        }
    }
}
