//! Plain-text edge-list format.
//!
//! First line `n m` (vertex and edge counts), then `m` lines `u v` with
//! `0 <= u < v < n`, whitespace-separated, LF line endings. Serialization
//! emits edges sorted lexicographically, so parse/serialize round-trips to
//! the identity on adjacency.

use crate::error::{EdgeListError, EdgeListWarning};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<EdgeListWarning>), EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, header) = lines.next().ok_or(EdgeListError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts.next().and_then(|w| w.parse().ok()).ok_or_else(|| {
        EdgeListError::MalformedHeader {
            line: header.to_string(),
        }
    })?;
    let m: usize = parts.next().and_then(|w| w.parse().ok()).ok_or_else(|| {
        EdgeListError::MalformedHeader {
            line: header.to_string(),
        }
    })?;
    if parts.next().is_some() {
        return Err(EdgeListError::MalformedHeader {
            line: header.to_string(),
        });
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut warnings = Vec::new();
    let mut found = 0usize;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let parse_vertex = |w: Option<&str>| {
            w.and_then(|w| w.parse::<usize>().ok())
                .ok_or_else(|| EdgeListError::MalformedLine {
                    line_no,
                    line: line.to_string(),
                })
        };
        let u = parse_vertex(parts.next())?;
        let v = parse_vertex(parts.next())?;
        if parts.next().is_some() {
            return Err(EdgeListError::MalformedLine {
                line_no,
                line: line.to_string(),
            });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line_no, v });
        }
        for w in [u, v] {
            if w >= n {
                return Err(EdgeListError::VertexOutOfRange { line_no, v: w, n });
            }
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            warnings.push(EdgeListWarning::DuplicateEdge {
                line_no,
                u: e.0,
                v: e.1,
            });
        } else {
            edges.push(e);
        }
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { expected: m, found });
    }
    let g = Graph::from_edges(n, &edges)?;
    Ok((g, warnings))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let edges = g.edges(); // already sorted lexicographically
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
