//! Bipartite graphs with explicit partite classes.
//!
//! A vertex is identified by its side and its ordinal within that side
//! ([`VertexRef`]). Internally, traversals use a flat id where `X i` maps to
//! `i` and `Y j` maps to `nx + j`.

mod construct;
mod factor;
mod io;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use construct::{complete_bipartite_minus_matching, double_graph};
pub use factor::Factor;
pub use io::parse_graph;

/// Partite class of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => f.write_str("X"),
            Side::Y => f.write_str("Y"),
        }
    }
}

impl FromStr for Side {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" | "x" => Ok(Side::X),
            "Y" | "y" => Ok(Side::Y),
            other => Err(GraphError::BadVertexToken(other.to_string())),
        }
    }
}

/// A vertex named by `(side, index)`.
///
/// Displays as a compact token such as `X3` or `Y0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn x(index: usize) -> Self {
        VertexRef { side: Side::X, index }
    }

    pub fn y(index: usize) -> Self {
        VertexRef { side: Side::Y, index }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

impl FromStr for VertexRef {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadVertexToken(s.to_string());
        let side = s.get(..1).ok_or_else(bad)?.parse::<Side>()?;
        let index = s[1..].parse::<usize>().map_err(|_| bad())?;
        Ok(VertexRef { side, index })
    }
}

/// What went wrong on a specific line of a graph or factor file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedHeader(String),
    MalformedEdge(String),
    IndexOutOfRange { x: usize, y: usize },
    DuplicateEdge { x: usize, y: usize },
    EdgeCountMismatch { declared: usize, found: usize },
    TrailingContent(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MalformedHeader(s) => write!(f, "malformed header {s:?}"),
            ParseErrorKind::MalformedEdge(s) => write!(f, "malformed edge line {s:?}"),
            ParseErrorKind::IndexOutOfRange { x, y } => {
                write!(f, "edge ({x}, {y}) references a vertex out of range")
            }
            ParseErrorKind::DuplicateEdge { x, y } => write!(f, "duplicate edge ({x}, {y})"),
            ParseErrorKind::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were given")
            }
            ParseErrorKind::TrailingContent(s) => write!(f, "unexpected trailing content {s:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("edge ({x}, {y}) out of range for a {nx}x{ny} bipartite graph")]
    EdgeOutOfRange { x: usize, y: usize, nx: usize, ny: usize },
    #[error("duplicate edge ({x}, {y})")]
    DuplicateEdge { x: usize, y: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("removed pairs are not vertex-disjoint: ({0}, {1}) reuses a vertex")]
    MatchingNotDisjoint(usize, usize),
    #[error("edge ({x}, {y}) is not an edge of the host graph")]
    NotSubgraph { x: usize, y: usize },
    #[error("vertex counts {got:?} do not match the host {expected:?}")]
    VertexCountMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("vertex {vertex} has factor degree {degree}, expected {expected}")]
    NotRegular {
        vertex: VertexRef,
        degree: usize,
        expected: usize,
    },
    #[error("factor is not regular, so it has no factor-file form")]
    IrregularFactor,
    #[error("a cycle needs an even length of at least 4, got {0}")]
    BadCycleLength(usize),
    #[error("bad vertex token {0:?}")]
    BadVertexToken(String),
}

/// Simple bipartite graph `G = (X, Y; E)` with `E ⊆ X × Y`.
///
/// Immutable after construction. Edge lists and neighbourhoods are kept
/// sorted, so every scan over the graph runs in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    nx: usize,
    ny: usize,
    edges: Vec<(usize, usize)>,
    adj_x: Vec<Vec<usize>>,
    adj_y: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl BipartiteGraph {
    /// Builds a graph, rejecting out-of-range endpoints and duplicate edges.
    pub fn new(nx: usize, ny: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut matrix = vec![false; nx * ny];
        let mut list = Vec::new();
        for (x, y) in edges {
            if x >= nx || y >= ny {
                return Err(GraphError::EdgeOutOfRange { x, y, nx, ny });
            }
            let slot = &mut matrix[x * ny + y];
            if *slot {
                return Err(GraphError::DuplicateEdge { x, y });
            }
            *slot = true;
            list.push((x, y));
        }
        list.sort_unstable();
        let mut adj_x = vec![Vec::new(); nx];
        let mut adj_y = vec![Vec::new(); ny];
        for &(x, y) in &list {
            adj_x[x].push(y);
            adj_y[y].push(x);
        }
        for ys in &mut adj_x {
            ys.sort_unstable();
        }
        Ok(BipartiteGraph {
            nx,
            ny,
            edges: list,
            adj_x,
            adj_y,
            matrix,
        })
    }

    /// Graph on `nx + ny` vertices with no edges.
    pub fn empty(nx: usize, ny: usize) -> Self {
        Self::new(nx, ny, std::iter::empty()).expect("no edges")
    }

    pub fn complete(nx: usize, ny: usize) -> Self {
        let edges = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y)));
        Self::new(nx, ny, edges).expect("complete graph edges are in range")
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn vertex_count(&self) -> usize {
        self.nx + self.ny
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(x, y)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.nx && y < self.ny && self.matrix[x * self.ny + y]
    }

    /// Adjacency between two vertices on opposite sides; same-side pairs are never adjacent.
    pub fn adjacent(&self, a: VertexRef, b: VertexRef) -> bool {
        match (a.side, b.side) {
            (Side::X, Side::Y) => self.has_edge(a.index, b.index),
            (Side::Y, Side::X) => self.has_edge(b.index, a.index),
            _ => false,
        }
    }

    /// Y-neighbours of `X x`, sorted.
    pub fn neighbors_x(&self, x: usize) -> &[usize] {
        &self.adj_x[x]
    }

    /// X-neighbours of `Y y`, sorted.
    pub fn neighbors_y(&self, y: usize) -> &[usize] {
        &self.adj_y[y]
    }

    /// Indices (on the opposite side) of the neighbours of `v`.
    pub fn neighbor_indices(&self, v: VertexRef) -> &[usize] {
        match v.side {
            Side::X => &self.adj_x[v.index],
            Side::Y => &self.adj_y[v.index],
        }
    }

    pub fn neighbors(&self, v: VertexRef) -> impl Iterator<Item = VertexRef> + '_ {
        let side = v.side.other();
        self.neighbor_indices(v)
            .iter()
            .map(move |&index| VertexRef { side, index })
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        self.neighbor_indices(v).len()
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        match v.side {
            Side::X => v.index < self.nx,
            Side::Y => v.index < self.ny,
        }
    }

    /// All vertices, X side first, each side in index order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> {
        (0..self.nx).map(VertexRef::x).chain((0..self.ny).map(VertexRef::y))
    }

    pub fn vertex_id(&self, v: VertexRef) -> usize {
        match v.side {
            Side::X => v.index,
            Side::Y => self.nx + v.index,
        }
    }

    pub fn vertex_at(&self, id: usize) -> VertexRef {
        if id < self.nx {
            VertexRef::x(id)
        } else {
            VertexRef::y(id - self.nx)
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.nx == self.ny
    }

    /// Connected iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_labels().1 == 1
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.vertices()
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.vertices()
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Components labelled `0, 1, ...` in order of their lowest flat vertex id.
    /// Returns the per-vertex labels (indexed by flat id) and the component count.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(id) = queue.pop_front() {
                let v = self.vertex_at(id);
                for w in self.neighbors(v) {
                    let wid = self.vertex_id(w);
                    if label[wid] == usize::MAX {
                        label[wid] = count;
                        queue.push_back(wid);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Breadth-first distances from a set of sources; `None` for unreachable vertices.
    pub fn distances_from(&self, sources: &[VertexRef]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            let id = self.vertex_id(s);
            if dist[id].is_none() {
                dist[id] = Some(0);
                queue.push_back(id);
            }
        }
        while let Some(id) = queue.pop_front() {
            let d = dist[id].expect("queued vertices have a distance");
            for w in self.neighbors(self.vertex_at(id)) {
                let wid = self.vertex_id(w);
                if dist[wid].is_none() {
                    dist[wid] = Some(d + 1);
                    queue.push_back(wid);
                }
            }
        }
        dist
    }

    /// Canonical text form: header, then edges sorted by `(x, y)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("bipartite {} {} {}\n", self.nx, self.ny, self.edges.len());
        for &(x, y) in &self.edges {
            out.push_str(&format!("{x} {y}\n"));
        }
        out
    }

    /// Path on `vertices` vertices, alternating `X0 Y0 X1 Y1 ...`.
    pub fn path(vertices: usize) -> Self {
        let nx = vertices.div_ceil(2);
        let ny = vertices / 2;
        let edges = (1..vertices).map(|i| {
            // position i-1 to position i; even positions are X.
            if i % 2 == 1 {
                ((i - 1) / 2, (i - 1) / 2)
            } else {
                (i / 2, (i - 1) / 2)
            }
        });
        Self::new(nx, ny, edges).expect("path edges are in range")
    }

    /// Even cycle `X0 Y0 X1 Y1 ... X(m-1) Y(m-1) X0` with `length = 2m`.
    pub fn cycle(length: usize) -> Result<Self, GraphError> {
        if length < 4 || length % 2 != 0 {
            return Err(GraphError::BadCycleLength(length));
        }
        let m = length / 2;
        let edges = (0..m).flat_map(|i| [(i, i), ((i + 1) % m, i)]);
        Self::new(m, m, edges)
    }

    /// The two-star `S_{k,l}`: centre `X0` with leaves `Y1..=Yk`, centre `Y0`
    /// with leaves `X1..=Xl`, and the centre edge `X0 Y0`.
    pub fn two_star(k: usize, l: usize) -> Self {
        let edges = std::iter::once((0, 0))
            .chain((1..=k).map(|y| (0, y)))
            .chain((1..=l).map(|x| (x, 0)));
        Self::new(l + 1, k + 1, edges).expect("two-star edges are in range")
    }

    /// Disjoint union, with `other` placed after `self` on both sides.
    pub fn disjoint_union(&self, other: &BipartiteGraph) -> Self {
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(x, y)| (x + self.nx, y + self.ny)));
        Self::new(self.nx + other.nx, self.ny + other.ny, edges).expect("union is simple")
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BipartiteGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}
