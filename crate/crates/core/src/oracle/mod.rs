//! Seeded instance generators, exhaustive oracles for small graphs, and
//! independent validators for pipeline output.

mod brute;
mod enumerate;
mod generate;
pub mod rng;
pub mod validate;

use thiserror::Error;

use crate::graph::GraphError;

pub use brute::{brute_force_connected_k_factor, brute_force_f_factor, OracleVerdict, EDGE_BUDGET};
pub use enumerate::{enumerate_small_bipartite, MAX_CLASS};
pub use generate::{generate, GenModel, GenSpec, ModelName, RETRY_BUDGET};
pub use rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid parameters: {0}")]
    ParamInvalid(String),
    #[error("no simple graph after {attempts} attempts")]
    RetryExhausted { attempts: u64 },
    #[error("{edges} edges exceed the exhaustive-search budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
