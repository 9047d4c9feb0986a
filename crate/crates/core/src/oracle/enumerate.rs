use super::OracleError;
use crate::graph::BipartiteGraph;

/// Largest class size [`enumerate_small_bipartite`] accepts.
pub const MAX_CLASS: usize = 5;

/// Every connected bipartite graph with `1 ≤ nx, ny ≤ max_n`, as labelled
/// edge sets: class sizes in lexicographic order, then edge masks in
/// increasing order (bit `x·ny + y` for the edge `(x, y)`). Isomorphic
/// copies are not merged.
pub fn enumerate_small_bipartite(max_n: usize) -> Result<impl Iterator<Item = BipartiteGraph>, OracleError> {
    if max_n > MAX_CLASS {
        return Err(OracleError::ParamInvalid(format!(
            "enumeration is limited to {MAX_CLASS} vertices per class, got {max_n}"
        )));
    }
    let sizes = (1..=max_n).flat_map(move |nx| (1..=max_n).map(move |ny| (nx, ny)));
    Ok(sizes.flat_map(|(nx, ny)| {
        (0u64..1 << (nx * ny)).filter_map(move |mask| {
            let edges = (0..nx * ny).filter(|&b| mask >> b & 1 == 1).map(|b| (b / ny, b % ny));
            let g = BipartiteGraph::new(nx, ny, edges).expect("mask bits are in range");
            g.is_connected().then_some(g)
        })
    }))
}
