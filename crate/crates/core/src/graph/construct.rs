use super::{BipartiteGraph, GraphError};

/// Double graph of `r`: two copies `R` and `R'` sharing the original sides,
/// with `uv`, `u'v'`, `uv'` and `u'v` for every edge `uv` of `r`.
///
/// Copy `X i` keeps index `i`, `X i'` becomes `i + nx`; likewise on `Y`.
pub fn double_graph(r: &BipartiteGraph) -> BipartiteGraph {
    let (nx, ny) = (r.nx(), r.ny());
    let edges = r
        .edges()
        .iter()
        .flat_map(|&(x, y)| [(x, y), (x + nx, y + ny), (x, y + ny), (x + nx, y)]);
    BipartiteGraph::new(2 * nx, 2 * ny, edges).expect("doubling a simple graph stays simple")
}

/// `K_{n,n}` with the pairs of `matching` removed.
pub fn complete_bipartite_minus_matching(n: usize, matching: &[(usize, usize)]) -> Result<BipartiteGraph, GraphError> {
    BipartiteGraph::complete_minus_matching(n, n, matching)
}

impl BipartiteGraph {
    /// `K_{nx,ny}` with the pairs of `matching` removed. The pairs must be
    /// in range and vertex-disjoint.
    pub fn complete_minus_matching(
        nx: usize,
        ny: usize,
        matching: &[(usize, usize)],
    ) -> Result<BipartiteGraph, GraphError> {
        let mut used_x = vec![false; nx];
        let mut used_y = vec![false; ny];
        for &(x, y) in matching {
            if x >= nx || y >= ny {
                return Err(GraphError::EdgeOutOfRange { x, y, nx, ny });
            }
            if used_x[x] || used_y[y] {
                return Err(GraphError::MatchingNotDisjoint(x, y));
            }
            used_x[x] = true;
            used_y[y] = true;
        }
        let edges = (0..nx)
            .flat_map(|x| (0..ny).map(move |y| (x, y)))
            .filter(|pair| !matching.contains(pair));
        BipartiteGraph::new(nx, ny, edges)
    }

    /// Cross pairs `(x, y)` that are not edges, in `(x, y)` order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.nx())
            .flat_map(|x| (0..self.ny()).map(move |y| (x, y)))
            .filter(|&(x, y)| !self.has_edge(x, y))
            .collect()
    }
}
