//! Connected k-factors in balanced bipartite graphs.
//!
//! - [`cli`]: the command line and the verification suites.
//! - [`connector`]: connected factors by swaps, the Hamilton pipeline,
//!   degree thresholds.
//! - [`graph`]: bipartite graphs, factors, file formats and constructions.
//! - [`engine`]: f-factors by max-flow, Ore-Ryser violator certificates,
//!   regular decomposition.
//! - [`oracle`]: seeded generators, exhaustive oracles, validators.
//! - [`structure`]: induced two-star detection, the `S_{1,2}`-free
//!   classifier, distance layering around a violator.

pub mod cli;
pub mod connector;
pub mod engine;
pub mod graph;
pub mod oracle;
pub mod structure;
