//! Edge-list file format.
//!
//! Text format: the first non-comment line is `n m`; the following `m`
//! non-comment lines are `u v [w]` with 0-based vertex ids and an optional
//! real weight defaulting to 1. Lines starting with `#` and blank lines are
//! ignored.

use kl_sparse::{GraphError, WeightedMultigraph};
use std::io::BufRead;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: expected header 'n m', got {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected 'u v [w]', got {found:?}")]
    BadEdge { line: usize, found: String },
    #[error("line {line}: {source}")]
    BadGraph { line: usize, source: GraphError },
    #[error("expected {expected} edge lines, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("missing header line 'n m'")]
    MissingHeader,
    #[error("io error: {0}")]
    Io(String),
}

/// Parses an edge-list file into a graph, reporting the offending line on
/// failure.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<WeightedMultigraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| ParseError::Io(e.to_string()))?;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                let parsed = (|| {
                    if fields.len() != 2 {
                        return None;
                    }
                    Some((fields[0].parse().ok()?, fields[1].parse().ok()?))
                })();
                match parsed {
                    Some((n, m)) => header = Some((n, m)),
                    None => {
                        return Err(ParseError::BadHeader {
                            line: line_no,
                            found: content.to_string(),
                        })
                    }
                }
            }
            Some(_) => {
                let parsed = (|| {
                    if fields.len() != 2 && fields.len() != 3 {
                        return None;
                    }
                    let u: usize = fields[0].parse().ok()?;
                    let v: usize = fields[1].parse().ok()?;
                    let w: f64 = match fields.get(2) {
                        Some(s) => s.parse().ok()?,
                        None => 1.0,
                    };
                    Some((u, v, w))
                })();
                match parsed {
                    Some(edge) => {
                        edges.push(edge);
                        edge_lines.push(line_no);
                    }
                    None => {
                        return Err(ParseError::BadEdge {
                            line: line_no,
                            found: content.to_string(),
                        })
                    }
                }
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    WeightedMultigraph::new(n, edges).map_err(|source| {
        let line = match &source {
            GraphError::LoopEdge { index, .. }
            | GraphError::VertexOutOfRange { index, .. }
            | GraphError::NonFiniteWeight { index } => edge_lines[*index],
        };
        ParseError::BadGraph { line, source }
    })
}

/// Writes the graph back in the same format. `parse(serialize(g))` returns a
/// graph equal to `g`.
pub fn serialize_edge_list(g: &WeightedMultigraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn parse(text: &str) -> Result<WeightedMultigraph, ParseError> {
        parse_edge_list(Cursor::new(text))
    }

    #[test]
    fn parses_with_comments_and_default_weight() {
        let g = parse("# a triangle\n3 3\n0 1\n1 2 2.5\n\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge(0).weight, 1.0);
        assert_eq!(g.edge(1).weight, 2.5);
    }

    #[test]
    fn reports_the_offending_line() {
        assert_eq!(
            parse("2 1\nnope\n"),
            Err(ParseError::BadEdge { line: 2, found: "nope".into() })
        );
        assert_eq!(
            parse("# c\nbad header\n"),
            Err(ParseError::BadHeader { line: 2, found: "bad header".into() })
        );
        let err = parse("3 1\n# comment\n1 1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::BadGraph {
                line: 3,
                source: GraphError::LoopEdge { index: 0, vertex: 1 }
            }
        );
        let err = parse("2 1\n0 5\n").unwrap_err();
        assert!(matches!(err, ParseError::BadGraph { line: 2, .. }));
    }

    #[test]
    fn enforces_the_declared_edge_count() {
        assert_eq!(
            parse("3 2\n0 1\n"),
            Err(ParseError::WrongEdgeCount { expected: 2, found: 1 })
        );
        assert_eq!(
            parse("3 1\n0 1\n1 2\n"),
            Err(ParseError::WrongEdgeCount { expected: 1, found: 2 })
        );
    }

    #[test]
    fn round_trips() {
        let g = WeightedMultigraph::new(
            4,
            vec![(0, 1, 1.5), (1, 2, -0.25), (2, 3, 1.0), (0, 3, 1e-9)],
        )
        .unwrap();
        let text = serialize_edge_list(&g);
        assert_eq!(parse(&text).unwrap(), g);
    }
}
