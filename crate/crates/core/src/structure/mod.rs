//! Induced two-star detection, the `S_{1,2}`-free classifier, and the
//! distance-layering diagnostics around a violator.

mod classify;
mod layering;
mod star;

use thiserror::Error;

pub use classify::{classify_s12_free, StructureClass};
pub use layering::{
    audit_layer_inequalities, build_layering, claims, AuditEntry, AuditReport, LayerParts, Layering, Part,
};
pub use star::{find_induced_star, is_skl_free, StarWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("connected graph fits no class and has no induced S_1,2")]
    Unclassified,
    #[error("malformed star witness at line {line}")]
    MalformedWitness { line: usize },
    #[error("seed set is empty")]
    EmptySeed,
    #[error("seed vertex X{0} is out of range")]
    SeedOutOfRange(usize),
}
