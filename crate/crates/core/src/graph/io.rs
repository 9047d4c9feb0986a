use super::{BipartiteGraph, GraphError, ParseErrorKind};

/// Lines that carry content, paired with their 1-based line numbers.
/// Blank lines and `#` comments are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

pub(crate) fn parse_error(line: usize, kind: ParseErrorKind) -> GraphError {
    GraphError::Parse { line, kind }
}

/// Parses `<x> <y>` from an edge line.
pub(crate) fn parse_edge_line(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = line.split_whitespace();
    let malformed = || parse_error(line_no, ParseErrorKind::MalformedEdge(line.to_string()));
    let x = fields.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    let y = fields.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((x, y))
}

/// Parses the header `<keyword> <a> <b> ...` with exactly `arity` integers.
pub(crate) fn parse_header(line_no: usize, line: &str, keyword: &str, arity: usize) -> Result<Vec<usize>, GraphError> {
    let malformed = || parse_error(line_no, ParseErrorKind::MalformedHeader(line.to_string()));
    let mut fields = line.split_whitespace();
    if fields.next() != Some(keyword) {
        return Err(malformed());
    }
    let values: Vec<usize> = fields
        .map(|t| t.parse().map_err(|_| malformed()))
        .collect::<Result<_, _>>()?;
    if values.len() != arity {
        return Err(malformed());
    }
    Ok(values)
}

/// Reads a graph file:
///
/// ```text
/// # optional comments
/// bipartite <nX> <nY> <m>
/// <x> <y>        (m lines, 0-based)
/// ```
pub fn parse_graph(text: &str) -> Result<BipartiteGraph, GraphError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, ParseErrorKind::MalformedHeader(String::new())))?;
    let dims = parse_header(header_no, header, "bipartite", 3)?;
    let (nx, ny, m) = (dims[0], dims[1], dims[2]);

    let mut seen = vec![false; nx * ny];
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_error(line_no, ParseErrorKind::TrailingContent(line.to_string())));
        }
        let (x, y) = parse_edge_line(line_no, line)?;
        if x >= nx || y >= ny {
            return Err(parse_error(line_no, ParseErrorKind::IndexOutOfRange { x, y }));
        }
        if std::mem::replace(&mut seen[x * ny + y], true) {
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
    BipartiteGraph::new(nx, ny, edges)
}
