//! Connected factors by component-merging swaps: links, the two swap rules,
//! the merging loop and its stuck-state diagnostics, the Hamilton pipeline
//! for `S_{1,3}`-free graphs, and the degree thresholds.

mod hamilton;
mod merge;
mod swap;
mod threshold;

use std::fmt;

use thiserror::Error;

use crate::engine::{find_f_factor, DegreeDemand, FactorError, FactorOutcome, ViolatorCertificate};
use crate::graph::{BipartiteGraph, Factor, GraphError, VertexRef};
use crate::structure::{find_induced_star, StarWitness};

pub use hamilton::{hamilton_from_stuck, hamilton_s13, HamiltonCycle};
pub use merge::{
    connect_factor, next_move, stuck_audit, ConnectOutcome, DegreeAudit, DegreeAuditKind, ImpliedDegree, StuckReport,
};
pub use swap::{find_links, try_primary_swap, try_secondary_swap, Link, SwapKind, SwapMove};
pub use threshold::{inside_degree_bound, outside_degree_bound, threshold_c, threshold_c_formula, threshold_c_prime};

/// A precondition of the connected-factor or Hamilton pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    Connected,
    Balanced { nx: usize, ny: usize },
    StarFree { witness: Box<StarWitness> },
    MinDegree { found: i64, required: i64 },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Connected => write!(f, "connectivity: graph is disconnected"),
            Hypothesis::Balanced { nx, ny } => {
                write!(f, "balance: classes have sizes {nx} and {ny}")
            }
            Hypothesis::StarFree { witness } => write!(
                f,
                "freeness: induced S_{},{} centred at {} {}",
                witness.k, witness.l, witness.center_u, witness.center_v
            ),
            Hypothesis::MinDegree { found, required } => {
                write!(f, "min_degree: {found} is below {required}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectError {
    #[error("need 2 <= k <= l, got k={k}, l={l}")]
    ParamOrder { k: usize, l: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("no factor exists: violator of size {}", .0.set.len())]
    NoFactor(Box<ViolatorCertificate>),
    #[error("stuck with {} components although every hypothesis holds", .0.factor.component_count())]
    TheoremContradiction(Box<StuckReport>),
    #[error("stuck 2-factor with {} components is not a double cycle of 4-cycles", .0.factor.component_count())]
    StructureUnrecognized(Box<StuckReport>),
    #[error("host graph is disconnected")]
    HostDisconnected,
    #[error("factor is not a spanning subgraph of the host")]
    NotSpanning,
    #[error("factor is not regular")]
    NotRegular,
    #[error("factor is connected or still admits an improving swap")]
    NotStuck,
    #[error("{0} and {1} lie in the same component")]
    SameComponent(VertexRef, VertexRef),
    #[error("{0} and {1} lie on different sides")]
    SideMismatch(VertexRef, VertexRef),
    #[error("vertex order is not a Hamilton cycle")]
    NotHamiltonian,
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Checks connectivity, balance, `S_{k,l}`-freeness and the minimum-degree
/// threshold, in that order.
pub fn check_hypotheses(g: &BipartiteGraph, k: usize, l: usize) -> Result<(), ConnectError> {
    let required = threshold_c(k, l)?;
    if !g.is_connected() {
        return Err(ConnectError::HypothesisViolated(Hypothesis::Connected));
    }
    if !g.is_balanced() {
        return Err(ConnectError::HypothesisViolated(Hypothesis::Balanced {
            nx: g.nx(),
            ny: g.ny(),
        }));
    }
    if let Some(witness) = find_induced_star(g, k, l) {
        return Err(ConnectError::HypothesisViolated(Hypothesis::StarFree {
            witness: Box::new(witness),
        }));
    }
    let found = g.min_degree()? as i64;
    if found < required {
        return Err(ConnectError::HypothesisViolated(Hypothesis::MinDegree {
            found,
            required,
        }));
    }
    Ok(())
}

/// A connected `k`-regular spanning subgraph of a graph meeting
/// [`check_hypotheses`]: a `k`-factor by max-flow, then merged by swaps.
pub fn connected_k_factor(g: &BipartiteGraph, k: usize, l: usize) -> Result<Factor, ConnectError> {
    check_hypotheses(g, k, l)?;
    let factor = match find_f_factor(g, &DegreeDemand::uniform(g, k))? {
        FactorOutcome::Factor(f) => f,
        FactorOutcome::Violator(cert) => return Err(ConnectError::NoFactor(Box::new(cert))),
    };
    match connect_factor(g, &factor, l)? {
        ConnectOutcome::Connected(f) => Ok(f),
        ConnectOutcome::Stuck(report) => Err(ConnectError::TheoremContradiction(report)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite_minus_matching;

    #[test]
    fn k13_minus_matching_hamiltonian() {
        let pm: Vec<(usize, usize)> = (0..13).map(|i| (i, i)).collect();
        let g = complete_bipartite_minus_matching(13, &pm).unwrap();
        let f = connected_k_factor(&g, 2, 3).unwrap();
        assert!(f.is_connected());
        assert_eq!(f.regularity(), Some(2));
        assert!(f.is_subgraph_of(&g));
        assert!(HamiltonCycle::from_factor(f).is_ok());
    }

    #[test]
    fn k33_below_threshold() {
        let g = BipartiteGraph::complete(3, 3);
        assert_eq!(
            connected_k_factor(&g, 2, 3),
            Err(ConnectError::HypothesisViolated(Hypothesis::MinDegree {
                found: 3,
                required: 12
            }))
        );
    }

    #[test]
    fn unbalanced_rejected() {
        let g = BipartiteGraph::complete(12, 13);
        assert_eq!(
            connected_k_factor(&g, 2, 3),
            Err(ConnectError::HypothesisViolated(Hypothesis::Balanced {
                nx: 12,
                ny: 13
            }))
        );
    }

    #[test]
    fn bad_parameters() {
        let g = BipartiteGraph::complete(3, 3);
        assert_eq!(
            connected_k_factor(&g, 3, 2),
            Err(ConnectError::ParamOrder { k: 3, l: 2 })
        );
    }

    #[test]
    fn hypothesis_messages_name_the_failure() {
        let e = ConnectError::HypothesisViolated(Hypothesis::MinDegree { found: 3, required: 12 });
        assert!(e.to_string().contains("min_degree"));
        let e = ConnectError::HypothesisViolated(Hypothesis::Balanced { nx: 1, ny: 2 });
        assert!(e.to_string().contains("balance"));
    }
}
