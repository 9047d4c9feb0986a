use super::OracleError;
use crate::engine::DegreeDemand;
use crate::graph::{BipartiteGraph, Factor};

/// Largest edge count the exhaustive oracles accept.
pub const EDGE_BUDGET: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub exists: bool,
    pub witness: Option<Factor>,
    /// Search nodes visited.
    pub enumerated: u64,
}

/// Exact f-factor existence by backtracking over edges in index order.
pub fn brute_force_f_factor(g: &BipartiteGraph, f: &DegreeDemand) -> Result<OracleVerdict, OracleError> {
    search(g, f, false)
}

/// Exact connected k-factor existence; every k-factor found is tested for
/// connectivity until one passes.
pub fn brute_force_connected_k_factor(g: &BipartiteGraph, k: usize) -> Result<OracleVerdict, OracleError> {
    search(g, &DegreeDemand::uniform(g, k), true)
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    nx: usize,
    need: Vec<i64>,
    avail: Vec<i64>,
    chosen: Vec<bool>,
    connected: bool,
    nodes: u64,
}

fn search(g: &BipartiteGraph, f: &DegreeDemand, connected: bool) -> Result<OracleVerdict, OracleError> {
    if g.edge_count() > EDGE_BUDGET {
        return Err(OracleError::BudgetExceeded {
            edges: g.edge_count(),
            budget: EDGE_BUDGET,
        });
    }
    let nx = g.nx();
    let mut need: Vec<i64> = (0..nx).map(|x| f.x(x) as i64).collect();
    need.extend((0..g.ny()).map(|y| f.y(y) as i64));
    let mut avail = vec![0i64; nx + g.ny()];
    for &(x, y) in g.edges() {
        avail[x] += 1;
        avail[nx + y] += 1;
    }
    let mut s = Search {
        edges: g.edges(),
        nx,
        need,
        avail,
        chosen: vec![false; g.edge_count()],
        connected,
        nodes: 0,
    };
    let feasible = s.need.iter().zip(&s.avail).all(|(n, a)| n <= a);
    let found = feasible && s.step(0);
    let witness = found.then(|| {
        let edges = s.edges.iter().zip(&s.chosen).filter(|(_, &c)| c).map(|(&e, _)| e);
        Factor::new(g, edges).expect("chosen edges come from the graph")
    });
    Ok(OracleVerdict {
        exists: found,
        witness,
        enumerated: s.nodes,
    })
}

impl Search<'_> {
    fn step(&mut self, i: usize) -> bool {
        self.nodes += 1;
        if i == self.edges.len() {
            return self.need.iter().all(|&n| n == 0) && (!self.connected || self.chosen_connected());
        }
        let (x, y) = self.edges[i];
        let (a, b) = (x, self.nx + y);
        self.avail[a] -= 1;
        self.avail[b] -= 1;
        let mut found = false;
        if self.need[a] > 0 && self.need[b] > 0 {
            self.need[a] -= 1;
            self.need[b] -= 1;
            self.chosen[i] = true;
            found = self.need[a] <= self.avail[a] && self.need[b] <= self.avail[b] && self.step(i + 1);
            if !found {
                self.chosen[i] = false;
                self.need[a] += 1;
                self.need[b] += 1;
            }
        }
        if !found && self.need[a] <= self.avail[a] && self.need[b] <= self.avail[b] {
            found = self.step(i + 1);
        }
        if !found {
            self.avail[a] += 1;
            self.avail[b] += 1;
        }
        found
    }

    /// Union-find over the chosen edges.
    fn chosen_connected(&self) -> bool {
        let n = self.need.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut parts = n;
        for (&(x, y), _) in self.edges.iter().zip(&self.chosen).filter(|(_, &c)| c) {
            let (ra, rb) = (root(&mut parent, x), root(&mut parent, self.nx + y));
            if ra != rb {
                parent[ra] = rb;
                parts -= 1;
            }
        }
        parts <= 1
    }
}
