use std::fmt;

use super::merge::{connect_factor, stuck_audit, ConnectOutcome};
use super::{ConnectError, Hypothesis};
use crate::engine::{find_f_factor, DegreeDemand, FactorOutcome};
use crate::graph::{BipartiteGraph, Factor, Side, VertexRef};
use crate::structure::find_induced_star;

/// A connected 2-factor together with its vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    pub factor: Factor,
    pub rotation: Vec<VertexRef>,
}

impl HamiltonCycle {
    /// Builds the cycle through `rotation`; consecutive vertices (and the
    /// last and first) must be adjacent in `g`.
    pub fn from_rotation(g: &BipartiteGraph, rotation: Vec<VertexRef>) -> Result<Self, ConnectError> {
        let n = rotation.len();
        let edges = (0..n).map(|i| {
            let (a, b) = (rotation[i], rotation[(i + 1) % n]);
            match a.side {
                Side::X => (a.index, b.index),
                Side::Y => (b.index, a.index),
            }
        });
        let factor = Factor::new(g, edges)?;
        if n != g.vertex_count() || factor.regularity() != Some(2) || !factor.is_connected() {
            return Err(ConnectError::NotHamiltonian);
        }
        Ok(HamiltonCycle { factor, rotation })
    }

    /// Reads the rotation off a connected 2-factor, starting at `X0` and
    /// leaving through its lower-indexed neighbour.
    pub fn from_factor(factor: Factor) -> Result<Self, ConnectError> {
        if factor.regularity() != Some(2) || !factor.is_connected() {
            return Err(ConnectError::NotHamiltonian);
        }
        let g = factor.graph();
        let start = VertexRef::x(0);
        let mut rotation = vec![start];
        let mut prev = start;
        let mut current = g.neighbors(start).next().expect("2-regular");
        while current != start {
            rotation.push(current);
            let next = g.neighbors(current).find(|&w| w != prev).expect("2-regular");
            prev = current;
            current = next;
        }
        Ok(HamiltonCycle { factor, rotation })
    }

    pub fn len(&self) -> usize {
        self.rotation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotation.is_empty()
    }
}

impl fmt::Display for HamiltonCycle {
    /// The factor file followed by `cycle v0 v1 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.factor.to_text().map_err(|_| fmt::Error)?;
        write!(f, "{text}cycle")?;
        for v in &self.rotation {
            write!(f, " {v}")?;
        }
        writeln!(f)
    }
}

/// Hamilton cycle of a connected balanced `S_{1,3}`-free bipartite graph of
/// minimum degree at least 4: a 2-factor by max-flow, merged by swaps, and
/// when swaps run out, read off the double-cycle structure of the stuck
/// factor.
pub fn hamilton_s13(g: &BipartiteGraph) -> Result<HamiltonCycle, ConnectError> {
    if !g.is_connected() {
        return Err(ConnectError::HypothesisViolated(Hypothesis::Connected));
    }
    if !g.is_balanced() {
        return Err(ConnectError::HypothesisViolated(Hypothesis::Balanced {
            nx: g.nx(),
            ny: g.ny(),
        }));
    }
    let min_degree = g.min_degree()?;
    if min_degree < 4 {
        return Err(ConnectError::HypothesisViolated(Hypothesis::MinDegree {
            found: min_degree as i64,
            required: 4,
        }));
    }
    if let Some(witness) = find_induced_star(g, 1, 3) {
        return Err(ConnectError::HypothesisViolated(Hypothesis::StarFree {
            witness: Box::new(witness),
        }));
    }
    let two_factor = match find_f_factor(g, &DegreeDemand::uniform(g, 2))? {
        FactorOutcome::Factor(f) => f,
        FactorOutcome::Violator(cert) => return Err(ConnectError::NoFactor(Box::new(cert))),
    };
    match connect_factor(g, &two_factor, 3)? {
        ConnectOutcome::Connected(f) => HamiltonCycle::from_factor(f),
        ConnectOutcome::Stuck(report) => {
            hamilton_from_stuck(g, &report.factor).map_err(|_| ConnectError::StructureUnrecognized(report))
        }
    }
}

/// Recognises a stuck 2-factor whose components are 4-cycles arranged as
/// the double graph of a cycle and returns the Hamilton cycle of that
/// arrangement.
///
/// Writing the components in cyclic order `c_0, ..., c_{p-1}` so that the X
/// half of `c_i` is complete to the Y half of `c_{i+1}`, the pairs
/// `Y(c_0), X(c_0), Y(c_1), X(c_1), ...` are consecutively complete. The
/// cycle visits the first vertex of every pair in that order, then the
/// second vertex of every pair.
pub fn hamilton_from_stuck(g: &BipartiteGraph, factor: &Factor) -> Result<HamiltonCycle, ConnectError> {
    let unrecognized = || match stuck_audit(g, factor, 2, 3) {
        Ok(report) => ConnectError::StructureUnrecognized(Box::new(report)),
        Err(e) => e,
    };
    if factor.regularity() != Some(2) || factor.is_connected() {
        return Err(unrecognized());
    }
    let comps = factor.components();
    let p = comps.len();
    let mut halves: Vec<([usize; 2], [usize; 2])> = Vec::with_capacity(p);
    for comp in &comps {
        let xs: Vec<usize> = comp.iter().filter(|v| v.side == Side::X).map(|v| v.index).collect();
        let ys: Vec<usize> = comp.iter().filter(|v| v.side == Side::Y).map(|v| v.index).collect();
        match (xs.as_slice(), ys.as_slice()) {
            (&[a, b], &[c, d]) => halves.push(([a, b], [c, d])),
            _ => return Err(unrecognized()),
        }
    }
    // Each vertex's neighbourhood meets at most two components.
    for v in g.vertices() {
        let mut seen: Vec<usize> = g.neighbors(v).map(|w| factor.component_of(w)).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() > 2 {
            return Err(unrecognized());
        }
    }

    let component_of_y = |y: usize| factor.component_of(VertexRef::y(y));
    let mut succ = vec![None; p];
    let mut pred = vec![None; p];
    for (i, (xs, _)) in halves.iter().enumerate() {
        let mut targets: Vec<usize> = xs
            .iter()
            .flat_map(|&x| g.neighbors_x(x).iter().map(|&y| component_of_y(y)))
            .filter(|&j| j != i)
            .collect();
        targets.sort_unstable();
        targets.dedup();
        let [j] = targets[..] else {
            return Err(unrecognized());
        };
        let (_, ys) = halves[j];
        let complete = xs.iter().all(|&x| ys.iter().all(|&y| g.has_edge(x, y)));
        let backward = halves[i]
            .1
            .iter()
            .any(|&y| halves[j].0.iter().any(|&x| g.has_edge(x, y)));
        if !complete || backward || pred[j].is_some() {
            return Err(unrecognized());
        }
        succ[i] = Some(j);
        pred[j] = Some(i);
    }
    if g.edge_count() != 8 * p {
        return Err(unrecognized());
    }

    let mut order = Vec::with_capacity(p);
    let mut c = 0;
    loop {
        order.push(c);
        c = succ[c].expect("every component has a successor");
        if c == 0 {
            break;
        }
    }
    if order.len() != p || p < 3 {
        return Err(unrecognized());
    }

    let mut pairs: Vec<[VertexRef; 2]> = Vec::with_capacity(2 * p);
    for &c in &order {
        let (xs, ys) = halves[c];
        pairs.push([VertexRef::y(ys[0]), VertexRef::y(ys[1])]);
        pairs.push([VertexRef::x(xs[0]), VertexRef::x(xs[1])]);
    }
    let rotation: Vec<VertexRef> = pairs
        .iter()
        .map(|pair| pair[0])
        .chain(pairs.iter().map(|pair| pair[1]))
        .collect();
    HamiltonCycle::from_rotation(g, rotation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite_minus_matching, double_graph};

    fn assert_hamiltonian(g: &BipartiteGraph, h: &HamiltonCycle) {
        assert_eq!(h.len(), g.vertex_count());
        assert!(h.factor.is_subgraph_of(g));
        assert_eq!(h.factor.regularity(), Some(2));
        assert!(h.factor.is_connected());
    }

    #[test]
    fn double_c6() {
        let g = double_graph(&BipartiteGraph::cycle(6).unwrap());
        let h = hamilton_s13(&g).unwrap();
        assert_eq!(h.len(), 12);
        assert_hamiltonian(&g, &h);
    }

    #[test]
    fn weave_on_stuck_blocks() {
        let g = double_graph(&BipartiteGraph::cycle(8).unwrap());
        let blocks = (0..4).flat_map(|i| [(i, i), (i, i + 4), (i + 4, i), (i + 4, i + 4)]);
        let f = Factor::new(&g, blocks).unwrap();
        let h = hamilton_from_stuck(&g, &f).unwrap();
        assert_eq!(h.len(), 16);
        assert_hamiltonian(&g, &h);
    }

    #[test]
    fn k55() {
        let g = BipartiteGraph::complete(5, 5);
        let h = hamilton_s13(&g).unwrap();
        assert_eq!(h.len(), 10);
        assert_hamiltonian(&g, &h);
    }

    #[test]
    fn three_regular_rejected() {
        let g = complete_bipartite_minus_matching(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        assert_eq!(
            hamilton_s13(&g),
            Err(ConnectError::HypothesisViolated(Hypothesis::MinDegree {
                found: 3,
                required: 4
            }))
        );
    }

    #[test]
    fn non_double_stuck_state_unrecognized() {
        let sq = BipartiteGraph::cycle(4).unwrap();
        let g = sq.disjoint_union(&sq);
        let f = Factor::from_graph(g.clone());
        assert!(hamilton_from_stuck(&g, &f).is_err());
    }

    #[test]
    fn rotation_text() {
        let g = BipartiteGraph::cycle(4).unwrap();
        let h = HamiltonCycle::from_factor(Factor::from_graph(g)).unwrap();
        assert_eq!(
            h.rotation,
            vec![VertexRef::x(0), VertexRef::y(0), VertexRef::x(1), VertexRef::y(1)]
        );
        assert!(h.to_string().ends_with("cycle X0 Y0 X1 Y1\n"));
    }
}
