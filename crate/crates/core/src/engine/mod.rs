//! f-factor construction by max-flow, Ore-Ryser violator certificates when
//! no f-factor exists, and decomposition of regular factors.

mod certificate;
mod decompose;
mod flow;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Factor, GraphError};

pub use certificate::{audit_certificate, shrink_violator, CertificateAudit, ViolatorCertificate};
pub use decompose::{perfect_matchings, regular_decompose};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("demand has {got:?} entries for a graph with classes {expected:?}")]
    DemandShape {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("demand sums differ: X side {x_sum}, Y side {y_sum}")]
    DemandImbalance { x_sum: u64, y_sum: u64 },
    #[error("certificate does not verify: {}", .0.join("; "))]
    FakeCertificate(Vec<String>),
    #[error("certificate line {line}: {reason}")]
    MalformedCertificate { line: usize, reason: String },
    #[error("factor is not regular")]
    NotRegular,
    #[error("cannot extract a {s}-factor from a {t}-regular factor")]
    SOutOfRange { s: usize, t: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex target degrees `f: V -> N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDemand {
    fx: Vec<usize>,
    fy: Vec<usize>,
}

impl DegreeDemand {
    pub fn new(g: &BipartiteGraph, fx: Vec<usize>, fy: Vec<usize>) -> Result<Self, FactorError> {
        if fx.len() != g.nx() || fy.len() != g.ny() {
            return Err(FactorError::DemandShape {
                expected: (g.nx(), g.ny()),
                got: (fx.len(), fy.len()),
            });
        }
        Ok(DegreeDemand { fx, fy })
    }

    /// `f ≡ k`.
    pub fn uniform(g: &BipartiteGraph, k: usize) -> Self {
        DegreeDemand {
            fx: vec![k; g.nx()],
            fy: vec![k; g.ny()],
        }
    }

    pub fn x(&self, i: usize) -> usize {
        self.fx[i]
    }

    pub fn y(&self, j: usize) -> usize {
        self.fy[j]
    }

    pub fn x_sum(&self) -> u64 {
        self.fx.iter().map(|&d| d as u64).sum()
    }

    pub fn y_sum(&self) -> u64 {
        self.fy.iter().map(|&d| d as u64).sum()
    }

    fn fits(&self, g: &BipartiteGraph) -> bool {
        self.fx.len() == g.nx() && self.fy.len() == g.ny()
    }
}

/// `Σ_{x∈X} f(x) = Σ_{y∈Y} f(y)`.
pub fn check_demand_balance(_g: &BipartiteGraph, f: &DegreeDemand) -> bool {
    f.x_sum() == f.y_sum()
}

/// Either an f-factor or a certificate that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorOutcome {
    Factor(Factor),
    Violator(ViolatorCertificate),
}

impl FactorOutcome {
    pub fn factor(self) -> Option<Factor> {
        match self {
            FactorOutcome::Factor(f) => Some(f),
            FactorOutcome::Violator(_) => None,
        }
    }

    pub fn exists(&self) -> bool {
        matches!(self, FactorOutcome::Factor(_))
    }
}

/// Finds a spanning subgraph with `d_F(v) = f(v)` for all `v`, or returns
/// an inclusion-minimal Ore-Ryser violator.
///
/// Network: `source -> x` with capacity `f(x)`, a unit arc `x -> y` per
/// edge, `y -> sink` with capacity `f(y)`. Arcs are added in vertex and
/// edge order. On a shortfall the X-vertices reachable from the source in
/// the residual network form a violator, which is then shrunk.
pub fn find_f_factor(g: &BipartiteGraph, f: &DegreeDemand) -> Result<FactorOutcome, FactorError> {
    if !f.fits(g) {
        return Err(FactorError::DemandShape {
            expected: (g.nx(), g.ny()),
            got: (f.fx.len(), f.fy.len()),
        });
    }
    if !check_demand_balance(g, f) {
        return Err(FactorError::DemandImbalance {
            x_sum: f.x_sum(),
            y_sum: f.y_sum(),
        });
    }
    let (nx, ny) = (g.nx(), g.ny());
    let source = 0;
    let sink = nx + ny + 1;
    let x_node = |x: usize| 1 + x;
    let y_node = |y: usize| 1 + nx + y;

    let mut net = flow::FlowNetwork::new(nx + ny + 2);
    for x in 0..nx {
        net.add_arc(source, x_node(x), f.x(x) as i64);
    }
    let edge_arcs: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(x, y)| net.add_arc(x_node(x), y_node(y), 1))
        .collect();
    for y in 0..ny {
        net.add_arc(y_node(y), sink, f.y(y) as i64);
    }

    let total = net.max_flow(source, sink) as u64;
    if total == f.x_sum() {
        let chosen = g
            .edges()
            .iter()
            .zip(&edge_arcs)
            .filter(|(_, &arc)| net.flow(arc) == 1)
            .map(|(&e, _)| e);
        return Ok(FactorOutcome::Factor(Factor::new(g, chosen)?));
    }

    let reachable = net.residual_reachable(source);
    let set: Vec<usize> = (0..nx).filter(|&x| reachable[x_node(x)]).collect();
    let cert = ViolatorCertificate::evaluate(g, f, &set);
    debug_assert!(cert.is_strict(), "min-cut source side must violate the inequality");
    Ok(FactorOutcome::Violator(shrink_violator(g, f, &cert)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexRef;
    use proptest::prelude::*;

    #[test]
    fn balance_examples() {
        let k22 = BipartiteGraph::complete(2, 2);
        assert!(check_demand_balance(&k22, &DegreeDemand::uniform(&k22, 1)));
        let f = DegreeDemand::new(&k22, vec![2, 0], vec![1, 0]).unwrap();
        assert!(!check_demand_balance(&k22, &f));
        let k33 = BipartiteGraph::complete(3, 3);
        assert!(check_demand_balance(&k33, &DegreeDemand::uniform(&k33, 3)));
    }

    #[test]
    fn p4_perfect_matching() {
        let g = BipartiteGraph::path(4);
        let out = find_f_factor(&g, &DegreeDemand::uniform(&g, 1)).unwrap();
        let factor = out.factor().expect("P4 has a perfect matching");
        assert_eq!(factor.edges(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn p4_two_factor_certificate() {
        let g = BipartiteGraph::path(4);
        let f = DegreeDemand::uniform(&g, 2);
        match find_f_factor(&g, &f).unwrap() {
            FactorOutcome::Violator(cert) => {
                assert_eq!(cert.set, vec![0]);
                assert_eq!((cert.lhs, cert.rhs), (2, 1));
                assert!(audit_certificate(&g, &f, &cert).is_valid());
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn k33_two_factor() {
        let g = BipartiteGraph::complete(3, 3);
        let factor = find_f_factor(&g, &DegreeDemand::uniform(&g, 2))
            .unwrap()
            .factor()
            .unwrap();
        assert_eq!(factor.regularity(), Some(2));
        assert!(factor.is_subgraph_of(&g));
    }

    #[test]
    fn demand_exceeding_degree_yields_certificate() {
        let g = BipartiteGraph::complete(2, 2);
        let f = DegreeDemand::new(&g, vec![3, 1], vec![2, 2]).unwrap();
        assert!(matches!(find_f_factor(&g, &f), Ok(FactorOutcome::Violator(_))));
    }

    #[test]
    fn imbalance_and_shape_errors() {
        let g = BipartiteGraph::complete(2, 2);
        let f = DegreeDemand::new(&g, vec![2, 0], vec![1, 0]).unwrap();
        assert_eq!(
            find_f_factor(&g, &f),
            Err(FactorError::DemandImbalance { x_sum: 2, y_sum: 1 })
        );
        assert!(matches!(
            DegreeDemand::new(&g, vec![1], vec![1, 1]),
            Err(FactorError::DemandShape { .. })
        ));
    }

    #[test]
    fn non_uniform_demand() {
        // K_{2,3}: X wants 3 and 0, Y wants 1 each.
        let g = BipartiteGraph::complete(2, 3);
        let f = DegreeDemand::new(&g, vec![3, 0], vec![1, 1, 1]).unwrap();
        let factor = find_f_factor(&g, &f).unwrap().factor().unwrap();
        assert_eq!(factor.degree(VertexRef::x(0)), 3);
        assert_eq!(factor.degree(VertexRef::x(1)), 0);
    }

    fn arb_graph() -> impl Strategy<Value = BipartiteGraph> {
        (1usize..6, 1usize..6)
            .prop_flat_map(|(nx, ny)| (Just(nx), Just(ny), proptest::collection::vec(any::<bool>(), nx * ny)))
            .prop_map(|(nx, ny, bits)| {
                let edges: Vec<_> = (0..nx * ny).filter(|&i| bits[i]).map(|i| (i / ny, i % ny)).collect();
                BipartiteGraph::new(nx, ny, edges).unwrap()
            })
    }

    proptest! {
        // Random demands with equal sums: either a sound factor or an auditable certificate.
        #[test]
        fn dichotomy(g in arb_graph(), seed in proptest::collection::vec(0usize..4, 12)) {
            let fx: Vec<usize> = (0..g.nx()).map(|i| seed[i]).collect();
            let mut fy: Vec<usize> = (0..g.ny()).map(|j| seed[6 + j]).collect();
            let (sx, sy): (usize, usize) = (fx.iter().sum(), fy.iter().sum());
            if sx > sy {
                fy[0] += sx - sy;
            } else if sy > sx {
                let mut excess = sy - sx;
                for d in fy.iter_mut() {
                    let cut = excess.min(*d);
                    *d -= cut;
                    excess -= cut;
                }
            }
            let f = DegreeDemand::new(&g, fx, fy).unwrap();
            match find_f_factor(&g, &f).unwrap() {
                FactorOutcome::Factor(factor) => {
                    prop_assert!(factor.is_subgraph_of(&g));
                    for x in 0..g.nx() {
                        prop_assert_eq!(factor.degree(VertexRef::x(x)), f.x(x));
                    }
                    for y in 0..g.ny() {
                        prop_assert_eq!(factor.degree(VertexRef::y(y)), f.y(y));
                    }
                }
                FactorOutcome::Violator(cert) => {
                    prop_assert!(audit_certificate(&g, &f, &cert).is_valid());
                    for i in 0..cert.set.len() {
                        let mut smaller = cert.set.clone();
                        smaller.remove(i);
                        prop_assert!(smaller.is_empty() || !ViolatorCertificate::evaluate(&g, &f, &smaller).is_strict());
                    }
                }
            }
        }
    }
}
