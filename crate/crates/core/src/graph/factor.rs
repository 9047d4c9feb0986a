use super::io::{content_lines, parse_edge_line, parse_error, parse_header};
use super::{BipartiteGraph, GraphError, ParseErrorKind, VertexRef};

/// Spanning subgraph of a host graph, with its component structure.
///
/// The factor keeps every host vertex, so vertex references are shared with
/// the host. Component labels are recomputed whenever a factor is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    graph: BipartiteGraph,
    component: Vec<usize>,
    component_count: usize,
}

impl Factor {
    /// Factor of `host` with the given edges; every edge must belong to `host`.
    pub fn new(host: &BipartiteGraph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let graph = BipartiteGraph::new(host.nx(), host.ny(), edges)?;
        if let Some(&(x, y)) = graph.edges().iter().find(|&&(x, y)| !host.has_edge(x, y)) {
            return Err(GraphError::NotSubgraph { x, y });
        }
        Ok(Self::from_graph(graph))
    }

    /// Treats `graph` itself as a spanning subgraph.
    pub fn from_graph(graph: BipartiteGraph) -> Self {
        let (component, component_count) = graph.component_labels();
        Factor {
            graph,
            component,
            component_count,
        }
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn contains_edge(&self, x: usize, y: usize) -> bool {
        self.graph.has_edge(x, y)
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        self.graph.degree(v)
    }

    /// `Some(k)` when every vertex has factor degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let mut degrees = self.graph.vertices().map(|v| self.graph.degree(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn check_regular(&self, k: usize) -> Result<(), GraphError> {
        match self.graph.vertices().find(|&v| self.graph.degree(v) != k) {
            Some(vertex) => Err(GraphError::NotRegular {
                vertex,
                degree: self.graph.degree(vertex),
                expected: k,
            }),
            None => Ok(()),
        }
    }

    pub fn component_of(&self, v: VertexRef) -> usize {
        self.component[self.graph.vertex_id(v)]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    /// Vertices of each component, indexed by component label.
    pub fn components(&self) -> Vec<Vec<VertexRef>> {
        let mut out = vec![Vec::new(); self.component_count];
        for v in self.graph.vertices() {
            out[self.component_of(v)].push(v);
        }
        out
    }

    pub fn is_subgraph_of(&self, host: &BipartiteGraph) -> bool {
        self.graph.nx() == host.nx()
            && self.graph.ny() == host.ny()
            && self.edges().iter().all(|&(x, y)| host.has_edge(x, y))
    }

    /// `factor <k> <m>` followed by the edges. Fails unless the factor is regular.
    pub fn to_text(&self) -> Result<String, GraphError> {
        let k = self.regularity().ok_or(GraphError::IrregularFactor)?;
        let mut out = format!("factor {k} {}\n", self.edges().len());
        for &(x, y) in self.edges() {
            out.push_str(&format!("{x} {y}\n"));
        }
        Ok(out)
    }

    /// Reads a factor file against its companion graph. The header's `k` is
    /// checked against the edge set; a trailing `cycle ...` line is accepted.
    pub fn parse(text: &str, host: &BipartiteGraph) -> Result<Factor, GraphError> {
        let mut lines = content_lines(text);
        let (header_no, header) = lines
            .next()
            .ok_or_else(|| parse_error(1, ParseErrorKind::MalformedHeader(String::new())))?;
        let dims = parse_header(header_no, header, "factor", 2)?;
        let (k, m) = (dims[0], dims[1]);
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_no;
        for (line_no, line) in lines {
            if edges.len() == m {
                if line.starts_with("cycle") {
                    continue;
                }
                return Err(parse_error(line_no, ParseErrorKind::TrailingContent(line.to_string())));
            }
            let (x, y) = parse_edge_line(line_no, line)?;
            if x >= host.nx() || y >= host.ny() {
                return Err(parse_error(line_no, ParseErrorKind::IndexOutOfRange { x, y }));
            }
            if edges.contains(&(x, y)) {
                return Err(parse_error(line_no, ParseErrorKind::DuplicateEdge { x, y }));
            }
            edges.push((x, y));
            last_line = line_no;
        }
        if edges.len() != m {
            return Err(parse_error(
                last_line,
                ParseErrorKind::EdgeCountMismatch {
                    declared: m,
                    found: edges.len(),
                },
            ));
        }
        let factor = Factor::new(host, edges)?;
        factor.check_regular(k)?;
        Ok(factor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_c4_in_k44() {
        let host = BipartiteGraph::complete(4, 4);
        let f = Factor::new(&host, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
        assert_eq!(f.regularity(), Some(2));
        assert_eq!(f.component_count(), 2);
        assert_eq!(f.component_of(VertexRef::x(1)), f.component_of(VertexRef::y(0)));
        assert_ne!(f.component_of(VertexRef::x(1)), f.component_of(VertexRef::y(2)));
        assert_eq!(f.components()[1].len(), 4);
    }

    #[test]
    fn rejects_non_host_edges() {
        let host = BipartiteGraph::path(4);
        assert_eq!(
            Factor::new(&host, [(0, 1)]),
            Err(GraphError::NotSubgraph { x: 0, y: 1 })
        );
    }

    #[test]
    fn text_round_trip() {
        let host = BipartiteGraph::complete(3, 3);
        let c6 = BipartiteGraph::cycle(6).unwrap();
        let f = Factor::new(&host, c6.edges().iter().copied()).unwrap();
        let text = f.to_text().unwrap();
        assert!(text.starts_with("factor 2 6\n"));
        let back = Factor::parse(&text, &host).unwrap();
        assert_eq!(back, f);
        let with_cycle = format!("{text}cycle X0 Y0 X1 Y1 X2 Y2\n");
        assert_eq!(Factor::parse(&with_cycle, &host).unwrap(), f);
    }

    #[test]
    fn parse_checks_regularity() {
        let host = BipartiteGraph::complete(2, 2);
        assert!(matches!(
            Factor::parse("factor 2 2\n0 0\n1 1\n", &host),
            Err(GraphError::NotRegular { .. })
        ));
        assert!(Factor::parse("factor 1 2\n0 0\n1 1\n", &host).is_ok());
    }

    #[test]
    fn irregular_factor_has_no_text() {
        let host = BipartiteGraph::path(4);
        let f = Factor::from_graph(host.clone());
        assert_eq!(f.regularity(), None);
        assert!(f.to_text().is_err());
    }
}
