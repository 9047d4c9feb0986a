use super::FactorError;
use crate::graph::Factor;

/// Splits a `t`-regular factor into `t` edge-disjoint perfect matchings.
///
/// Each matching is found with augmenting paths started from X-vertices in
/// index order, neighbours scanned in index order, and removed before the
/// next one is extracted. The remainder stays regular, so a perfect matching
/// always exists.
pub fn perfect_matchings(factor: &Factor) -> Result<Vec<Vec<(usize, usize)>>, FactorError> {
    let t = factor.regularity().ok_or(FactorError::NotRegular)?;
    let g = factor.graph();
    let mut remaining: Vec<Vec<usize>> = (0..g.nx()).map(|x| g.neighbors_x(x).to_vec()).collect();
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        let matching = perfect_matching(g.nx(), g.ny(), &remaining);
        for &(x, y) in &matching {
            remaining[x].retain(|&w| w != y);
        }
        out.push(matching);
    }
    Ok(out)
}

/// An `s`-regular spanning subgraph of a `t`-regular factor: the union of
/// the first `s` matchings of [`perfect_matchings`].
pub fn regular_decompose(factor: &Factor, s: usize) -> Result<Factor, FactorError> {
    let t = factor.regularity().ok_or(FactorError::NotRegular)?;
    if s > t {
        return Err(FactorError::SOutOfRange { s, t });
    }
    let matchings = perfect_matchings(factor)?;
    let edges = matchings.into_iter().take(s).flatten();
    Ok(Factor::new(factor.graph(), edges)?)
}

fn perfect_matching(nx: usize, ny: usize, adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut mate_y: Vec<Option<usize>> = vec![None; ny];
    for x in 0..nx {
        let mut seen = vec![false; ny];
        let found = augment(x, adj, &mut mate_y, &mut seen);
        assert!(found, "regular bipartite graphs have perfect matchings");
    }
    let mut edges: Vec<(usize, usize)> = mate_y
        .iter()
        .enumerate()
        .filter_map(|(y, m)| m.map(|x| (x, y)))
        .collect();
    edges.sort_unstable();
    edges
}

fn augment(x: usize, adj: &[Vec<usize>], mate_y: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &y in &adj[x] {
        if seen[y] {
            continue;
        }
        seen[y] = true;
        if mate_y[y].is_none_or(|other| augment(other, adj, mate_y, seen)) {
            mate_y[y] = Some(x);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BipartiteGraph, VertexRef};
    use std::collections::BTreeSet;

    #[test]
    fn c8_one_factor() {
        let c8 = Factor::from_graph(BipartiteGraph::cycle(8).unwrap());
        let m = regular_decompose(&c8, 1).unwrap();
        assert_eq!(m.edges().len(), 4);
        assert_eq!(m.regularity(), Some(1));
    }

    #[test]
    fn c8_identity() {
        let c8 = Factor::from_graph(BipartiteGraph::cycle(8).unwrap());
        assert_eq!(regular_decompose(&c8, 2).unwrap(), c8);
    }

    #[test]
    fn k33_two_factor() {
        let k33 = Factor::from_graph(BipartiteGraph::complete(3, 3));
        let two = regular_decompose(&k33, 2).unwrap();
        for v in two.graph().vertices() {
            assert_eq!(two.degree(v), 2, "{v}");
        }
        assert!(two.is_subgraph_of(k33.graph()));
    }

    #[test]
    fn zero_factor() {
        let k33 = Factor::from_graph(BipartiteGraph::complete(3, 3));
        let zero = regular_decompose(&k33, 0).unwrap();
        assert!(zero.edges().is_empty());
        assert_eq!(zero.degree(VertexRef::x(0)), 0);
    }

    #[test]
    fn matchings_are_disjoint_and_cover() {
        let k44 = Factor::from_graph(BipartiteGraph::complete(4, 4));
        let ms = perfect_matchings(&k44).unwrap();
        assert_eq!(ms.len(), 4);
        let mut all = BTreeSet::new();
        for m in &ms {
            assert_eq!(m.len(), 4);
            for &e in m {
                assert!(all.insert(e), "edge {e:?} reused");
            }
        }
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn errors() {
        let p4 = Factor::from_graph(BipartiteGraph::path(4));
        assert_eq!(regular_decompose(&p4, 1), Err(FactorError::NotRegular));
        let c8 = Factor::from_graph(BipartiteGraph::cycle(8).unwrap());
        assert_eq!(regular_decompose(&c8, 3), Err(FactorError::SOutOfRange { s: 3, t: 2 }));
    }
}
