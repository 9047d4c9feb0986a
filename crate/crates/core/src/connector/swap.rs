use std::fmt;

use super::ConnectError;
use crate::graph::{BipartiteGraph, Factor, GraphError, Side, VertexRef};

/// An edge `xy` of the host graph whose endpoints lie in distinct
/// components of the factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Link {
    pub x: usize,
    pub y: usize,
    pub component_x: usize,
    pub component_y: usize,
}

impl Link {
    pub fn u(&self) -> VertexRef {
        VertexRef::x(self.x)
    }

    pub fn v(&self) -> VertexRef {
        VertexRef::y(self.y)
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LINK {} {} {} {}",
            self.x, self.y, self.component_x, self.component_y
        )
    }
}

/// All links of `factor` in `g`, sorted by `(x, y)`.
pub fn find_links(g: &BipartiteGraph, factor: &Factor) -> Vec<Link> {
    g.edges()
        .iter()
        .filter_map(|&(x, y)| {
            let cx = factor.component_of(VertexRef::x(x));
            let cy = factor.component_of(VertexRef::y(y));
            (cx != cy).then_some(Link {
                x,
                y,
                component_x: cx,
                component_y: cy,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapKind {
    /// Across a link `uv`: drop `uu'`, `vv'`; add `uv`, `u'v'`.
    Primary,
    /// Between same-side `v1`, `v2`: drop `v1v1'`, `v2v2'`; add `v1v2'`, `v2v1'`.
    Secondary,
}

/// An exchange of two factor edges for two non-factor edges. Edges are
/// `(x, y)` index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapMove {
    pub kind: SwapKind,
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
}

impl SwapMove {
    pub fn apply(&self, g: &BipartiteGraph, factor: &Factor) -> Result<Factor, GraphError> {
        let edges = factor
            .edges()
            .iter()
            .copied()
            .filter(|e| !self.removed.contains(e))
            .chain(self.added);
        Factor::new(g, edges)
    }

    fn improves(&self, g: &BipartiteGraph, factor: &Factor) -> bool {
        let fresh = self.added.iter().all(|&(x, y)| !factor.contains_edge(x, y)) && self.added[0] != self.added[1];
        fresh
            && self
                .apply(g, factor)
                .is_ok_and(|next| next.component_count() < factor.component_count())
    }
}

impl fmt::Display for SwapMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SwapKind::Primary => "PRIMARY",
            SwapKind::Secondary => "SECONDARY",
        };
        let [(a, b), (c, d)] = self.removed;
        let [(e, g), (h, i)] = self.added;
        write!(f, "SWAP {kind} -{a},{b} -{c},{d} +{e},{g} +{h},{i}")
    }
}

fn edge(a: VertexRef, b: VertexRef) -> (usize, usize) {
    match a.side {
        Side::X => (a.index, b.index),
        Side::Y => (b.index, a.index),
    }
}

fn factor_neighbors(factor: &Factor, v: VertexRef) -> Vec<VertexRef> {
    factor.graph().neighbors(v).collect()
}

/// First move across `link` that strictly lowers the component count.
/// Candidates `u' ∈ N_F(u)`, `v' ∈ N_F(v)` are scanned by index with `u'`
/// outermost; `u'v'` must be an edge of `g` and not of the factor.
pub fn try_primary_swap(g: &BipartiteGraph, factor: &Factor, link: &Link) -> Option<SwapMove> {
    let (u, v) = (link.u(), link.v());
    for u2 in factor_neighbors(factor, u) {
        for v2 in factor_neighbors(factor, v) {
            if !g.adjacent(u2, v2) {
                continue;
            }
            let candidate = SwapMove {
                kind: SwapKind::Primary,
                removed: [edge(u, u2), edge(v2, v)],
                added: [edge(u, v), edge(v2, u2)],
            };
            if candidate.improves(g, factor) {
                return Some(candidate);
            }
        }
    }
    None
}

/// First cross exchange between `v1` and `v2` that strictly lowers the
/// component count: `v1' ∈ N_F(v1)`, `v2' ∈ N_F(v2)` with `v1v2'` and
/// `v2v1'` both edges of `g`.
pub fn try_secondary_swap(
    g: &BipartiteGraph,
    factor: &Factor,
    v1: VertexRef,
    v2: VertexRef,
) -> Result<Option<SwapMove>, ConnectError> {
    if v1.side != v2.side {
        return Err(ConnectError::SideMismatch(v1, v2));
    }
    if factor.component_of(v1) == factor.component_of(v2) {
        return Err(ConnectError::SameComponent(v1, v2));
    }
    for w1 in factor_neighbors(factor, v1) {
        for w2 in factor_neighbors(factor, v2) {
            if !g.adjacent(v1, w2) || !g.adjacent(v2, w1) {
                continue;
            }
            let candidate = SwapMove {
                kind: SwapKind::Secondary,
                removed: [edge(v1, w1), edge(v2, w2)],
                added: [edge(v1, w2), edge(v2, w1)],
            };
            if candidate.improves(g, factor) {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

/// Same-side pairs `v1 < v2` in distinct components that share a host
/// neighbour, in order of first appearance.
pub(crate) fn secondary_pairs(g: &BipartiteGraph, factor: &Factor) -> Vec<(VertexRef, VertexRef)> {
    let mut pairs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for u in g.vertices() {
        let nbrs: Vec<VertexRef> = g.neighbors(u).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if factor.component_of(a) != factor.component_of(b) && seen.insert((a, b)) {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs
}
