//! Edge-list text format.
//!
//! ```text
//! # comment
//! 5
//! 0 1
//! 2 4   # trailing comments are fine
//! ```
//!
//! The first non-blank line is the vertex count, then one `u v` pair per
//! line. Everything after `#` on a line is ignored.

use std::fmt::Write;

use super::{Graph, GraphError, GraphResult};

pub fn parse_edge_list(text: &str) -> GraphResult<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::Parse {
        line,
        message: format!("expected a vertex count, found `{header}`"),
    })?;
    let mut g = Graph::empty(n);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => g.add_edge(u, v).map_err(|e| GraphError::Parse {
                line,
                message: e.to_string(),
            })?,
            _ => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected `u v`, found `{text}`"),
                })
            }
        }
    }
    Ok(g)
}

/// Writes the vertex count followed by the edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn parse_with_comments() {
        let g = parse_edge_list("# fig\n\n3\n0 1 # first\n2 1\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn writer_is_sorted() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "3\n0 1\n1 2\n");
        let fig1 = named_graph("fig1").unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&fig1)).unwrap(), fig1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list(""),
            Err(GraphError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_edge_list("x"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 1\n1 0\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 1 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }
}
