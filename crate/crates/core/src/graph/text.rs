//! Plain-text graph format: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and lines starting with `#` are ignored.

use super::{Graph, GraphError};
use std::fmt::Write as _;

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines.by_ref() {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, content)?;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::Parse {
                    line,
                    message: format!("endpoint {w} out of range for n = {n}"),
                });
            }
        }
        if u == v {
            return Err(GraphError::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, edges)
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = content.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = fields.next().ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(GraphError::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

/// Writes the graph with edges `u < v` sorted lexicographically.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn writes_sorted_edges() {
        let g = Graph::from_edge_list(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(write_graph(&g), "4 3\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn parse_round_trips_named_graphs() {
        for g in [
            named::petersen(),
            named::cycle(7),
            named::complete(5),
            named::empty(3),
        ] {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { .. }));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_graph("# triangle\n3 3\n\n0 1\n1 2\n# closing edge\n0 2\n").unwrap();
        assert_eq!(g, named::complete(3));
    }
}
