//! Non-isomorphic free trees, generated in constant amortized time by the
//! Wright–Richmond–Odlyzko–McKay successor rule on level sequences.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`free_trees`].
pub const MAX_TREE_ORDER: usize = 20;

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence at the second child of the root into the first
/// subtree (re-rooted) and the remainder.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let valid = rh > lh
        || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let k = next.len();
        for (slot, level) in next[k - h - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::empty(layout.len()).expect("order checked by caller");
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        if i > 0 {
            stack.truncate(level);
            g.add_edge(stack[level - 1], i).expect("tree edge");
        }
        stack.push(i);
    }
    g
}

/// Every free tree on `n` vertices up to isomorphism, each exactly once.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "tree order must be in 1..={MAX_TREE_ORDER}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut out = Vec::new();
    let mut layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    while let Some(tree) = next_tree(layout) {
        out.push(layout_to_graph(&tree));
        match next_rooted_tree(&tree, None) {
            Some(next) => layout = next,
            None => break,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::canon::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_known_sequence() {
        let expected = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235];
        for (n, &count) in expected.iter().enumerate().skip(1) {
            let trees = free_trees(n).unwrap();
            assert_eq!(trees.len(), count, "n = {n}");
            for t in &trees {
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn pairwise_non_isomorphic() {
        for n in 2..=9 {
            let codes: BTreeSet<u128> = free_trees(n)
                .unwrap()
                .iter()
                .map(|t| canonical_form(t).unwrap().code)
                .collect();
            assert_eq!(codes.len(), free_trees(n).unwrap().len());
        }
    }

    #[test]
    fn order_bounds() {
        assert!(free_trees(0).is_err());
        assert!(free_trees(MAX_TREE_ORDER + 1).is_err());
    }
}
