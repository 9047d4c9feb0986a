//! Checks of pipeline output that share no code with the pipelines.

use crate::graph::{BipartiteGraph, Side, VertexRef};

/// `edges` form a spanning, `k`-regular, connected subgraph of `g`.
pub fn validate_connected_k_factor(g: &BipartiteGraph, edges: &[(usize, usize)], k: usize) -> Result<(), String> {
    check_factor(g, edges, k, true)
}

/// `edges` form a spanning `k`-regular subgraph of `g`.
pub fn validate_k_factor(g: &BipartiteGraph, edges: &[(usize, usize)], k: usize) -> Result<(), String> {
    check_factor(g, edges, k, false)
}

fn check_factor(g: &BipartiteGraph, edges: &[(usize, usize)], k: usize, connected: bool) -> Result<(), String> {
    let (nx, ny) = (g.nx(), g.ny());
    let mut degree = vec![0usize; nx + ny];
    let mut seen = std::collections::HashSet::new();
    let mut parent: Vec<usize> = (0..nx + ny).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }
    for &(x, y) in edges {
        if x >= nx || y >= ny || !g.neighbors_x(x).contains(&y) {
            return Err(format!("edge {x} {y} is not in the graph"));
        }
        if !seen.insert((x, y)) {
            return Err(format!("edge {x} {y} repeated"));
        }
        degree[x] += 1;
        degree[nx + y] += 1;
        let (a, b) = (root(&mut parent, x), root(&mut parent, nx + y));
        parent[a] = b;
    }
    if let Some(v) = (0..nx + ny).find(|&v| degree[v] != k) {
        return Err(format!("vertex {v} has degree {} instead of {k}", degree[v]));
    }
    let r = root(&mut parent, 0);
    if connected && (0..nx + ny).any(|v| root(&mut parent, v) != r) {
        return Err("subgraph is disconnected".into());
    }
    Ok(())
}

/// `rotation` visits every vertex of `g` once, alternating sides, with
/// consecutive (and last-to-first) vertices adjacent.
pub fn validate_hamilton_cycle(g: &BipartiteGraph, rotation: &[VertexRef]) -> Result<(), String> {
    let n = g.nx() + g.ny();
    if rotation.len() != n || n < 4 {
        return Err(format!("rotation has {} vertices, graph has {n}", rotation.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in rotation {
        if !seen.insert(v) {
            return Err(format!("{v} repeated"));
        }
    }
    for i in 0..n {
        let (a, b) = (rotation[i], rotation[(i + 1) % n]);
        let ok = match (a.side, b.side) {
            (Side::X, Side::Y) => a.index < g.nx() && g.neighbors_x(a.index).contains(&b.index),
            (Side::Y, Side::X) => b.index < g.nx() && g.neighbors_x(b.index).contains(&a.index),
            _ => false,
        };
        if !ok {
            return Err(format!("{a} {b} is not an edge"));
        }
    }
    Ok(())
}
