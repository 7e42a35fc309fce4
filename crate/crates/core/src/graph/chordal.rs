use super::Graph;
use crate::vertex_set::VertexSet;

/// Lexicographic breadth-first search. Returns vertices in visit order;
/// ties are broken by smallest index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    for step in (0..n).rev() {
        let v = unvisited
            .iter()
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("one unvisited vertex per step");
        unvisited.remove(v);
        order.push(v);
        for w in g.neighbors(v).intersection(unvisited) {
            labels[w].push(step);
        }
    }
    order
}

/// A perfect elimination ordering if one exists (the reverse LexBFS order,
/// checked vertex by vertex).
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(p) = later.iter().min_by_key(|&w| pos[w]) {
            if !later.without(p).is_subset(g.neighbors(p)) {
                return None;
            }
        }
    }
    Some(peo)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    /// Two K4's on {0,1,2,3} and {1,2,3,4} sharing the triangle {1,2,3}.
    fn pasted_k4s() -> Graph {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
        edges.extend([(1, 2), (1, 3), (2, 3)]);
        Graph::new(5, &edges).unwrap()
    }

    #[test]
    fn trees_are_chordal() {
        for seed in 0..20 {
            let t = generate(&FamilySpec::RandomTree { n: 10, seed }).unwrap();
            assert!(is_chordal(&t));
        }
    }

    #[test]
    fn chordless_cycles_are_not() {
        for k in 4..=9 {
            assert!(!is_chordal(&generate(&FamilySpec::Cycle(k)).unwrap()));
        }
        assert!(is_chordal(&generate(&FamilySpec::Cycle(3)).unwrap()));
    }

    #[test]
    fn pasting_on_a_triangle_is_chordal() {
        assert!(is_chordal(&pasted_k4s()));
    }

    #[test]
    fn wheels_are_not_chordal() {
        // W5 has the chordless rim 0-1-2-3.
        assert!(!is_chordal(&generate(&FamilySpec::Wheel(5)).unwrap()));
        assert!(is_chordal(&generate(&FamilySpec::Wheel(4)).unwrap()));
    }

    #[test]
    fn lex_bfs_visits_everything_once() {
        let g = generate(&FamilySpec::Hypercube(3)).unwrap();
        let mut order = lex_bfs(&g);
        order.sort();
        assert_eq!(order, (0..8).collect::<Vec<_>>());
    }
}
