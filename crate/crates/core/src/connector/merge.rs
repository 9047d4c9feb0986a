use std::fmt;

use super::swap::{find_links, secondary_pairs, try_primary_swap, try_secondary_swap, Link, SwapMove};
use super::threshold::{inside_degree_bound, outside_degree_bound, threshold_c};
use super::ConnectError;
use crate::graph::{BipartiteGraph, Factor, VertexRef};
use crate::structure::is_skl_free;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeAuditKind {
    /// Neighbours outside the vertex's own component.
    Outside,
    /// Neighbours inside the own component, for link endpoints.
    Inside,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeAudit {
    pub kind: DegreeAuditKind,
    pub vertex: VertexRef,
    pub value: i64,
    pub bound: i64,
}

impl DegreeAudit {
    pub fn holds(&self) -> bool {
        self.value <= self.bound
    }
}

/// A link endpoint whose degree the two audit bounds jointly cap at `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpliedDegree {
    pub vertex: VertexRef,
    pub bound: i64,
    pub min_degree: i64,
}

impl ImpliedDegree {
    pub fn below_min_degree(&self) -> bool {
        self.bound < self.min_degree
    }
}

/// Diagnostics for a disconnected `k`-factor that no swap improves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuckReport {
    pub factor: Factor,
    pub k: usize,
    pub l: usize,
    pub links: Vec<Link>,
    /// No host edge joins `N_F(u)` and `N_F(v)` for any link `uv`.
    pub no_cross_edges: bool,
    pub degree_audits: Vec<DegreeAudit>,
    pub implied: Vec<ImpliedDegree>,
    /// Connected, balanced, `S_{k,l}`-free, `2 ≤ k ≤ l`, and minimum degree
    /// at least the connected-factor threshold.
    pub hypotheses_met: bool,
}

impl StuckReport {
    /// Stuck although the hypotheses hold and the bounds cap some vertex
    /// below the minimum degree. Never expected; signals a bug.
    pub fn contradiction(&self) -> bool {
        self.hypotheses_met && self.implied.iter().any(ImpliedDegree::below_min_degree)
    }
}

impl fmt::Display for StuckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "HOLDS" } else { "FAILS" };
        writeln!(f, "STUCK {} {} {}", self.factor.component_count(), self.k, self.l)?;
        for link in &self.links {
            writeln!(f, "{link}")?;
        }
        writeln!(f, "EQ10 {}", status(self.no_cross_edges))?;
        for a in &self.degree_audits {
            let name = match a.kind {
                DegreeAuditKind::Outside => "outside",
                DegreeAuditKind::Inside => "inside",
            };
            writeln!(
                f,
                "DEG-AUDIT {name} {} {} {} {} {}",
                a.vertex.side,
                a.vertex.index,
                a.value,
                a.bound,
                status(a.holds())
            )?;
        }
        for d in &self.implied {
            writeln!(
                f,
                "DEG-AUDIT implied {} {} {} {} {}",
                d.vertex.side,
                d.vertex.index,
                d.bound,
                d.min_degree,
                if d.below_min_degree() { "BELOW" } else { "OK" }
            )?;
        }
        writeln!(f, "HYPOTHESES {}", if self.hypotheses_met { "MET" } else { "UNMET" })?;
        writeln!(f, "CONTRADICTION {}", if self.contradiction() { "YES" } else { "NO" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectOutcome {
    Connected(Factor),
    Stuck(Box<StuckReport>),
}

/// First improving move: primary swaps over links in order, then secondary
/// swaps over same-side pairs sharing a host neighbour.
pub fn next_move(g: &BipartiteGraph, factor: &Factor) -> Option<SwapMove> {
    if factor.is_connected() {
        return None;
    }
    let primary = find_links(g, factor)
        .iter()
        .find_map(|link| try_primary_swap(g, factor, link));
    primary.or_else(|| {
        secondary_pairs(g, factor)
            .into_iter()
            .find_map(|(a, b)| try_secondary_swap(g, factor, a, b).ok().flatten())
    })
}

/// Merges components of a regular factor by first-improvement local search.
/// `l` only feeds the stuck-state audits.
pub fn connect_factor(g: &BipartiteGraph, factor: &Factor, l: usize) -> Result<ConnectOutcome, ConnectError> {
    if !g.is_connected() {
        return Err(ConnectError::HostDisconnected);
    }
    if !factor.is_subgraph_of(g) {
        return Err(ConnectError::NotSpanning);
    }
    let k = factor.regularity().ok_or(ConnectError::NotRegular)?;
    let mut current = factor.clone();
    while let Some(mv) = next_move(g, &current) {
        current = mv.apply(g, &current)?;
    }
    if current.is_connected() {
        Ok(ConnectOutcome::Connected(current))
    } else {
        Ok(ConnectOutcome::Stuck(Box::new(stuck_audit(g, &current, k, l)?)))
    }
}

/// Evaluates the local conditions of a stuck factor. Fails with `NotStuck`
/// when the factor is connected or some swap still improves it.
pub fn stuck_audit(g: &BipartiteGraph, factor: &Factor, k: usize, l: usize) -> Result<StuckReport, ConnectError> {
    if !factor.is_subgraph_of(g) {
        return Err(ConnectError::NotSpanning);
    }
    if factor.is_connected() || next_move(g, factor).is_some() {
        return Err(ConnectError::NotStuck);
    }
    let links = find_links(g, factor);
    let fg = factor.graph();
    let no_cross_edges = links.iter().all(|link| {
        fg.neighbors(link.u())
            .all(|a| fg.neighbors(link.v()).all(|b| !g.adjacent(a, b)))
    });

    let outside_bound = outside_degree_bound(k, l);
    let inside_bound = inside_degree_bound(k, l);
    let own = |v: VertexRef| {
        let c = factor.component_of(v);
        g.neighbors(v).filter(|&w| factor.component_of(w) == c).count() as i64
    };
    let mut degree_audits: Vec<DegreeAudit> = g
        .vertices()
        .map(|v| DegreeAudit {
            kind: DegreeAuditKind::Outside,
            vertex: v,
            value: g.degree(v) as i64 - own(v),
            bound: outside_bound,
        })
        .collect();
    let mut endpoints: Vec<VertexRef> = links.iter().flat_map(|l| [l.u(), l.v()]).collect();
    endpoints.sort();
    endpoints.dedup();
    degree_audits.extend(endpoints.iter().map(|&v| DegreeAudit {
        kind: DegreeAuditKind::Inside,
        vertex: v,
        value: own(v),
        bound: inside_bound,
    }));
    let min_degree = g.min_degree()? as i64;
    let implied = endpoints
        .iter()
        .map(|&v| ImpliedDegree {
            vertex: v,
            bound: outside_bound + inside_bound,
            min_degree,
        })
        .collect();

    let hypotheses_met =
        threshold_c(k, l).is_ok_and(|c| min_degree >= c) && g.is_connected() && g.is_balanced() && is_skl_free(g, k, l);

    Ok(StuckReport {
        factor: factor.clone(),
        k,
        l,
        links,
        no_cross_edges,
        degree_audits,
        implied,
        hypotheses_met,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::double_graph;

    #[test]
    fn k44_two_squares_connect() {
        let g = BipartiteGraph::complete(4, 4);
        let f = Factor::new(&g, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
        match connect_factor(&g, &f, 3).unwrap() {
            ConnectOutcome::Connected(h) => {
                assert!(h.is_connected());
                assert_eq!(h.regularity(), Some(2));
                assert!(h.is_subgraph_of(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn connected_returned_unchanged() {
        let g = BipartiteGraph::cycle(8).unwrap();
        let f = Factor::from_graph(g.clone());
        assert_eq!(connect_factor(&g, &f, 3).unwrap(), ConnectOutcome::Connected(f));
    }

    #[test]
    fn disconnected_host_rejected() {
        let sq = BipartiteGraph::cycle(4).unwrap();
        let g = sq.disjoint_union(&sq);
        let f = Factor::from_graph(g.clone());
        assert_eq!(connect_factor(&g, &f, 3), Err(ConnectError::HostDisconnected));
    }

    /// The double of `C_6` with its three `K_{2,2}` blocks as the factor.
    fn stuck_double_c6() -> (BipartiteGraph, Factor) {
        let g = double_graph(&BipartiteGraph::cycle(6).unwrap());
        // Block i: X{i, i+3}, Y{i, i+3}.
        let edges = (0..3).flat_map(|i| [(i, i), (i, i + 3), (i + 3, i), (i + 3, i + 3)]);
        let f = Factor::new(&g, edges).unwrap();
        (g, f)
    }

    #[test]
    fn double_cycle_blocks_are_stuck() {
        let (g, f) = stuck_double_c6();
        assert_eq!(f.component_count(), 3);
        let report = stuck_audit(&g, &f, 2, 3).unwrap();
        assert!(report.no_cross_edges);
        assert!(!report.hypotheses_met);
        assert!(!report.contradiction());
        let text = report.to_string();
        assert!(text.starts_with("STUCK 3 2 3\nLINK "));
        assert!(text.contains("EQ10 HOLDS\n"));
        assert!(text.ends_with("HYPOTHESES UNMET\nCONTRADICTION NO\n"));
    }

    #[test]
    fn not_stuck_rejected() {
        let g = BipartiteGraph::complete(4, 4);
        let f = Factor::new(&g, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
        assert_eq!(stuck_audit(&g, &f, 2, 3), Err(ConnectError::NotStuck));
        let c8 = BipartiteGraph::cycle(8).unwrap();
        assert_eq!(
            stuck_audit(&c8, &Factor::from_graph(c8.clone()), 2, 3),
            Err(ConnectError::NotStuck)
        );
    }

    #[test]
    fn audit_values() {
        let (g, f) = stuck_double_c6();
        let report = stuck_audit(&g, &f, 2, 3).unwrap();
        // Each vertex has 2 neighbours in its block and 2 outside.
        for a in &report.degree_audits {
            assert_eq!(a.value, 2, "{a:?}");
        }
        assert!(report
            .implied
            .iter()
            .all(|d| d.bound == 11 && d.min_degree == 4 && !d.below_min_degree()));
    }
}
