//! Line-oriented text formats.
//!
//! Graph files: lines starting with `#` are comments (blank lines are also
//! skipped); the first data line is `n m`; then exactly `m` lines `u v` with
//! 0-based vertex ids separated by whitespace.
//!
//! Edge sets: a count line, then one `u v` line per edge in ascending edge id
//! order, LF-terminated with single spaces.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{DirectedGraph, EdgeId, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    ExpectedInteger(String),
    FieldCount { expected: usize, found: usize },
    EdgeCount { expected: usize, found: usize },
    UnknownEdge { tail: VertexId, head: VertexId },
    Graph(GraphError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing header line"),
            ParseErrorKind::ExpectedInteger(tok) => write!(f, "expected a non-negative integer, found {tok:?}"),
            ParseErrorKind::FieldCount { expected, found } => {
                write!(f, "expected {expected} fields, found {found}")
            }
            ParseErrorKind::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            ParseErrorKind::UnknownEdge { tail, head } => write!(f, "({tail}, {head}) is not an edge of the graph"),
            ParseErrorKind::Graph(GraphError::SelfLoop { vertex, .. }) => write!(f, "self-loop at vertex {vertex}"),
            ParseErrorKind::Graph(GraphError::DuplicateEdge { tail, head, .. }) => {
                write!(f, "duplicate edge ({tail}, {head})")
            }
            ParseErrorKind::Graph(GraphError::VertexOutOfRange {
                vertex, vertex_count, ..
            }) => write!(f, "vertex {vertex} out of range for {vertex_count} vertices"),
            ParseErrorKind::Graph(other) => write!(f, "{other}"),
        }
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

struct DataLine<'a> {
    number: usize,
    fields: Vec<(usize, &'a str)>,
}

/// Non-comment, non-blank lines with 1-based columns for each field.
fn data_lines(text: &str) -> impl Iterator<Item = DataLine<'_>> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut fields = Vec::new();
        let mut start = None;
        for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    fields.push((s + 1, &line[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        Some(DataLine { number: i + 1, fields })
    })
}

impl DataLine<'_> {
    fn numbers<const N: usize>(&self) -> Result<[usize; N], ParseError> {
        if self.fields.len() != N {
            let column = self.fields.get(N).map_or(1, |f| f.0);
            return Err(ParseError {
                line: self.number,
                column,
                kind: ParseErrorKind::FieldCount {
                    expected: N,
                    found: self.fields.len(),
                },
            });
        }
        let mut out = [0; N];
        for (slot, &(column, tok)) in out.iter_mut().zip(&self.fields) {
            *slot = tok.parse().map_err(|_| ParseError {
                line: self.number,
                column,
                kind: ParseErrorKind::ExpectedInteger(tok.to_string()),
            })?;
        }
        Ok(out)
    }
}

fn last_line_number(text: &str) -> usize {
    text.lines().count().max(1)
}

pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut lines = data_lines(text);
    let header = lines.next().ok_or(ParseError {
        line: last_line_number(text),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let [n, m] = header.numbers::<2>()?;
    let mut pairs = Vec::with_capacity(m);
    let mut line_of_edge = Vec::with_capacity(m);
    for line in lines {
        let [u, v] = line.numbers::<2>()?;
        if pairs.len() == m {
            return Err(ParseError {
                line: line.number,
                column: 1,
                kind: ParseErrorKind::EdgeCount {
                    expected: m,
                    found: m + 1,
                },
            });
        }
        pairs.push((u, v));
        line_of_edge.push(line.number);
    }
    if pairs.len() != m {
        return Err(ParseError {
            line: last_line_number(text),
            column: 1,
            kind: ParseErrorKind::EdgeCount {
                expected: m,
                found: pairs.len(),
            },
        });
    }
    DirectedGraph::new(n, &pairs).map_err(|err| {
        let edge = match err {
            GraphError::VertexOutOfRange { edge, .. }
            | GraphError::SelfLoop { edge, .. }
            | GraphError::DuplicateEdge { edge, .. } => edge,
            _ => 0,
        };
        ParseError {
            line: line_of_edge[edge],
            column: 1,
            kind: ParseErrorKind::Graph(err),
        }
    })
}

/// `n m` followed by the edges in id order.
pub fn write_graph(g: &DirectedGraph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn serialize_edge_set(g: &DirectedGraph, subset: &[EdgeId]) -> Result<String, GraphError> {
    let mask = g.edge_mask(subset)?;
    let chosen: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| mask[e]).collect();
    let mut out = String::with_capacity(8 * (chosen.len() + 1));
    writeln!(out, "{}", chosen.len()).unwrap();
    for e in chosen {
        let (u, v) = g.edge(e);
        writeln!(out, "{u} {v}").unwrap();
    }
    Ok(out)
}

/// Reads an edge set written by [`serialize_edge_set`] against `g`,
/// returning ascending edge ids.
pub fn parse_edge_set(g: &DirectedGraph, text: &str) -> Result<Vec<EdgeId>, ParseError> {
    let mut lines = data_lines(text);
    let header = lines.next().ok_or(ParseError {
        line: last_line_number(text),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let [count] = header.numbers::<1>()?;
    let mut ids = Vec::with_capacity(count);
    for line in lines {
        let [u, v] = line.numbers::<2>()?;
        let e = g.find_edge(u, v).ok_or(ParseError {
            line: line.number,
            column: 1,
            kind: ParseErrorKind::UnknownEdge { tail: u, head: v },
        })?;
        ids.push(e);
    }
    if ids.len() != count {
        return Err(ParseError {
            line: last_line_number(text),
            column: 1,
            kind: ParseErrorKind::EdgeCount {
                expected: count,
                found: ids.len(),
            },
        });
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn parses_a_triangle() {
        assert_eq!(parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap(), c3());
        assert_eq!(parse_graph("# comment\n3 3\n\n0 1\n  1\t2\n2 0").unwrap(), c3());
    }

    #[test]
    fn reports_self_loop_line() {
        let err = parse_graph("# c\n2 1\n0 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.to_string(), "line 3, column 1: self-loop at vertex 0");
    }

    #[test]
    fn reports_missing_edges() {
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EdgeCount { expected: 2, found: 1 });
        assert!(err.to_string().ends_with("expected 2 edges, found 1"));
        let err = parse_graph("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn reports_syntax_errors_with_columns() {
        let err = parse_graph("3 3\n0 x\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse_graph("3 3\n0 1 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));
        assert_eq!(parse_graph("# only\n").unwrap_err().kind, ParseErrorKind::MissingHeader);
    }

    #[test]
    fn serializes_edge_sets() {
        let g = c3();
        assert_eq!(serialize_edge_set(&g, &[2, 0, 1]).unwrap(), "3\n0 1\n1 2\n2 0\n");
        assert_eq!(serialize_edge_set(&g, &[]).unwrap(), "0\n");
        assert_eq!(serialize_edge_set(&g, &[3]), Err(GraphError::UnknownEdge(3)));
    }

    #[test]
    fn edge_sets_read_back() {
        let g = k22g();
        let text = serialize_edge_set(&g, &[0, 1, 2, 3, 4, 7]).unwrap();
        assert_eq!(text.lines().count(), 7);
        assert_eq!(parse_edge_set(&g, &text).unwrap(), vec![0, 1, 2, 3, 4, 7]);
        let err = parse_edge_set(&g, "1\n3 4\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownEdge { tail: 3, head: 4 });
    }

    #[test]
    fn graphs_round_trip() {
        let g = k22g();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
