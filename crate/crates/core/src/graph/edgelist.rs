//! Plain edge lists: a header line `n m`, then `m` lines `u v` (0-based).

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let (n, m) = pair(header).map_err(|_| Error::EdgeList(format!("bad header {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let e = pair(line)
            .map_err(|_| Error::EdgeList(format!("line {}: bad edge {line:?}", idx + 1)))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

fn pair(line: &str) -> std::result::Result<(usize, usize), ()> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(()),
    }
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn round_trip() {
        let g = generate(&FamilySpec::Wheel(6)).unwrap();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList(_))));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::EdgeList(_))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::EdgeList(_))
        ));
        assert_eq!(parse_edge_list("3 1\n2 2\n"), Err(Error::SelfLoop(2)));
        assert_eq!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::EndpointOutOfRange { vertex: 5, n: 3 })
        );
    }
}
