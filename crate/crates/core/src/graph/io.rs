//! Edge-list text format and its JSON mirror.
//!
//! Text: a header line `p <n> <m>` followed by exactly `m` lines `e <u> <v>`
//! with 0-based ids, single spaces and LF line endings.
//! JSON: `{"n": <int>, "edges": [[u, v], ...]}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{edge_key, Graph, GraphError};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_ints<const K: usize>(line_no: usize, fields: &[&str]) -> Result<[usize; K], GraphError> {
    if fields.len() != K {
        return Err(parse_err(
            line_no,
            format!("expected {K} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line_no, format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}

/// Parses the text format. A trailing newline is optional; duplicate edges,
/// self-loops and a wrong edge count are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.split('\n').enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.first() != Some(&"p") {
        return Err(parse_err(1, "header must start with 'p'"));
    }
    let [n, m] = parse_ints::<2>(1, &fields[1..])?;
    let mut seen = BTreeSet::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.is_empty() {
            if idx + 1 == text.split('\n').count() {
                break;
            }
            return Err(parse_err(line_no, "blank line"));
        }
        let fields: Vec<&str> = line.split(' ').collect();
        if fields[0] != "e" {
            return Err(parse_err(line_no, "edge lines must start with 'e'"));
        }
        let [u, v] = parse_ints::<2>(line_no, &fields[1..])?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line_no, "self-loop"));
        }
        if !seen.insert(edge_key(u, v)) {
            return Err(parse_err(line_no, format!("duplicate edge {u}-{v}")));
        }
    }
    if seen.len() != m {
        return Err(parse_err(
            1,
            format!("header declares {m} edges, found {}", seen.len()),
        ));
    }
    Ok(Graph::from_sorted_pairs(n, seen))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json")
}

pub fn from_json(text: &str) -> Result<Graph, GraphError> {
    let j: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Graph::try_from(j)
}

/// Accepts either format, sniffing JSON by a leading `{`.
pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn text_format_is_exact() {
        let g = generators::path(3);
        assert_eq!(write_edge_list(&g), "p 3 2\ne 0 1\ne 1 2\n");
        assert_eq!(write_edge_list(&Graph::empty(2)), "p 2 0\n");
    }

    #[test]
    fn text_round_trip() {
        let g = generators::petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_edge_list("p 2 1\ne 1 0").unwrap().edge_count(), 1);
    }

    #[test]
    fn malformed_text() {
        for bad in [
            "",
            "q 2 1\ne 0 1\n",
            "p 2 2\ne 0 1\n",
            "p 2 1\ne 0 2\n",
            "p 2 1\ne 0 0\n",
            "p 3 2\ne 0 1\ne 1 0\n",
            "p 2 1\ne  0 1\n",
            "p 2 1\n\ne 0 1\n",
            "p 2 1\ne 0 1\r\n",
            "p 2 1\nx 0 1\n",
        ] {
            assert!(parse_edge_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        let g = generators::grid(2, 3);
        let text = to_json(&g);
        assert!(text.starts_with("{\"n\":6,\"edges\":[[0,1]"));
        assert_eq!(from_json(&text).unwrap(), g);
        assert_eq!(parse_any(&text).unwrap(), g);
        assert!(from_json("{\"n\":2,\"edges\":[[0,0]]}").is_err());
    }
}
