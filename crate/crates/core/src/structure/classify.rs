use super::{find_induced_star, StarWitness, StructureError};
use crate::graph::{BipartiteGraph, VertexRef};

/// Structure of a connected bipartite graph with respect to `S_{1,2}`.
///
/// Every free class carries enough data to rebuild the graph in its own
/// labelling; the non-free class carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureClass {
    /// Vertices in path order.
    Path {
        order: Vec<VertexRef>,
    },
    /// Vertices in cyclic order, starting at `X0`.
    EvenCycle {
        order: Vec<VertexRef>,
    },
    /// `K_{nx,ny}` minus the listed vertex-disjoint pairs.
    CompleteBipartiteMinusMatching {
        nx: usize,
        ny: usize,
        removed: Vec<(usize, usize)>,
    },
    NotS12Free {
        witness: StarWitness,
    },
}

impl StructureClass {
    pub fn is_s12_free(&self) -> bool {
        !matches!(self, StructureClass::NotS12Free { .. })
    }

    /// The graph described by a free class, in the original labelling.
    pub fn reconstruct(&self) -> Option<BipartiteGraph> {
        match self {
            StructureClass::Path { order } => Some(from_walk(order, false)),
            StructureClass::EvenCycle { order } => Some(from_walk(order, true)),
            StructureClass::CompleteBipartiteMinusMatching { nx, ny, removed } => Some(
                BipartiteGraph::complete_minus_matching(*nx, *ny, removed)
                    .expect("classifier only emits disjoint pairs"),
            ),
            StructureClass::NotS12Free { .. } => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            StructureClass::Path { .. } => "PATH",
            StructureClass::EvenCycle { .. } => "EVEN-CYCLE",
            StructureClass::CompleteBipartiteMinusMatching { .. } => "COMPLETE-MINUS-MATCHING",
            StructureClass::NotS12Free { .. } => "NOT-S12-FREE",
        }
    }

    /// First line is the tag with its payload; witnesses follow on their own lines.
    pub fn to_text(&self) -> String {
        let tokens = |order: &[VertexRef]| order.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            StructureClass::Path { order } | StructureClass::EvenCycle { order } => {
                format!("{} {}\n", self.tag(), tokens(order))
            }
            StructureClass::CompleteBipartiteMinusMatching { nx, ny, removed } => {
                let mut out = format!("{} {nx} {ny} {}\n", self.tag(), removed.len());
                for (x, y) in removed {
                    out.push_str(&format!("{x} {y}\n"));
                }
                out
            }
            StructureClass::NotS12Free { witness } => {
                format!("{}\n{}", self.tag(), witness.to_text())
            }
        }
    }
}

fn from_walk(order: &[VertexRef], closed: bool) -> BipartiteGraph {
    let nx = order.iter().filter(|v| v.side == crate::graph::Side::X).count();
    let ny = order.len() - nx;
    let mut steps: Vec<(VertexRef, VertexRef)> = order.windows(2).map(|w| (w[0], w[1])).collect();
    if closed && order.len() > 2 {
        steps.push((order[order.len() - 1], order[0]));
    }
    let edges = steps.into_iter().map(|(a, b)| match a.side {
        crate::graph::Side::X => (a.index, b.index),
        crate::graph::Side::Y => (b.index, a.index),
    });
    BipartiteGraph::new(nx, ny, edges).expect("walk orders come from simple graphs")
}

/// Classifies a connected bipartite graph as a path, an even cycle, or a
/// complete bipartite graph minus a matching (checked in that order), and
/// otherwise returns an induced `S_{1,2}`.
pub fn classify_s12_free(g: &BipartiteGraph) -> Result<StructureClass, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::NotConnected);
    }
    let max_degree = g.max_degree().expect("connected graphs are nonempty");
    let n = g.vertex_count();
    if max_degree <= 2 && g.edge_count() + 1 == n {
        return Ok(StructureClass::Path { order: walk(g) });
    }
    if n >= 4 && g.vertices().all(|v| g.degree(v) == 2) {
        return Ok(StructureClass::EvenCycle { order: walk(g) });
    }
    let non_edges = g.non_edges();
    let mut hit_x = vec![false; g.nx()];
    let mut hit_y = vec![false; g.ny()];
    let is_matching = non_edges.iter().all(|&(x, y)| {
        let fresh = !hit_x[x] && !hit_y[y];
        hit_x[x] = true;
        hit_y[y] = true;
        fresh
    });
    if is_matching {
        return Ok(StructureClass::CompleteBipartiteMinusMatching {
            nx: g.nx(),
            ny: g.ny(),
            removed: non_edges,
        });
    }
    find_induced_star(g, 1, 2)
        .map(|witness| StructureClass::NotS12Free { witness })
        .ok_or(StructureError::Unclassified)
}

/// Walks a connected graph of maximum degree 2, starting at the lowest
/// endpoint for a path or at the lowest vertex for a cycle, always stepping
/// to the lowest unvisited neighbour.
fn walk(g: &BipartiteGraph) -> Vec<VertexRef> {
    let start = g
        .vertices()
        .find(|&v| g.degree(v) <= 1)
        .or_else(|| g.vertices().next())
        .expect("nonempty");
    let mut visited = vec![false; g.vertex_count()];
    let mut order = vec![start];
    visited[g.vertex_id(start)] = true;
    let mut current = start;
    while let Some(next) = g.neighbors(current).find(|&w| !visited[g.vertex_id(w)]) {
        visited[g.vertex_id(next)] = true;
        order.push(next);
        current = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite_minus_matching;

    #[test]
    fn p5_is_path() {
        let g = BipartiteGraph::path(5);
        let class = classify_s12_free(&g).unwrap();
        assert!(matches!(class, StructureClass::Path { .. }));
        assert_eq!(class.reconstruct().unwrap(), g);
    }

    #[test]
    fn c6_is_even_cycle() {
        let g = BipartiteGraph::cycle(6).unwrap();
        let class = classify_s12_free(&g).unwrap();
        assert!(matches!(class, StructureClass::EvenCycle { .. }));
        assert_eq!(class.reconstruct().unwrap(), g);
    }

    #[test]
    fn k44_minus_pm() {
        let pm = [(0, 0), (1, 1), (2, 2), (3, 3)];
        let g = complete_bipartite_minus_matching(4, &pm).unwrap();
        let class = classify_s12_free(&g).unwrap();
        assert_eq!(
            class,
            StructureClass::CompleteBipartiteMinusMatching {
                nx: 4,
                ny: 4,
                removed: pm.to_vec()
            }
        );
        assert_eq!(class.reconstruct().unwrap(), g);
    }

    #[test]
    fn unbalanced_star_is_complete() {
        let g = BipartiteGraph::complete(1, 3);
        assert_eq!(
            classify_s12_free(&g).unwrap(),
            StructureClass::CompleteBipartiteMinusMatching {
                nx: 1,
                ny: 3,
                removed: vec![]
            }
        );
    }

    #[test]
    fn odd_path_with_y_endpoints() {
        // Y0 - X0 - Y1
        let g = BipartiteGraph::complete(1, 2);
        // Both degree-1 vertices are on Y; K_{1,2} is also a path.
        let class = classify_s12_free(&g).unwrap();
        assert!(matches!(class, StructureClass::Path { .. }));
        assert_eq!(class.reconstruct().unwrap(), g);
    }

    #[test]
    fn s12_itself() {
        let g = BipartiteGraph::two_star(1, 2);
        match classify_s12_free(&g).unwrap() {
            StructureClass::NotS12Free { witness } => assert!(witness.is_valid_in(&g)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn disconnected_rejected() {
        let k11 = BipartiteGraph::complete(1, 1);
        assert_eq!(
            classify_s12_free(&k11.disjoint_union(&k11)),
            Err(StructureError::NotConnected)
        );
    }

    #[test]
    fn text_forms() {
        let p3 = classify_s12_free(&BipartiteGraph::path(3)).unwrap();
        assert_eq!(p3.to_text(), "PATH X0 Y0 X1\n");
        let k = classify_s12_free(&complete_bipartite_minus_matching(3, &[(1, 2)]).unwrap()).unwrap();
        assert_eq!(k.to_text(), "COMPLETE-MINUS-MATCHING 3 3 1\n1 2\n");
    }
}
