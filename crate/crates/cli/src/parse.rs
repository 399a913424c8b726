//! Argument parsing helpers: inclusive ranges, graph sources, vertex sets.

use std::str::FromStr;

use zeroforcing::edgelist::parse_edge_list;
use zeroforcing::family::{build_family, FamilySpec};
use zeroforcing::graph::Graph;
use zeroforcing::vertexset::VertexSet;

use crate::{CliError, GraphSource};

/// Inclusive `a..b` range; a bare number is the singleton range.
#[derive(Debug, Clone, Copy)]
pub struct RangeArg {
    pub start: usize,
    pub end: usize,
}

impl RangeArg {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse_end = |w: &str| {
            w.parse::<usize>()
                .map_err(|_| format!("invalid range `{s}` (expected `a..b`)"))
        };
        if let Some((a, b)) = s.split_once("..") {
            let start = parse_end(a)?;
            let end = parse_end(b)?;
            if start > end {
                return Err(format!("empty range `{s}`"));
            }
            Ok(RangeArg { start, end })
        } else {
            let v = parse_end(s)?;
            Ok(RangeArg { start: v, end: v })
        }
    }
}

/// Builds the graph named by `--family`/`--params` or `--graph`; exactly one
/// source must be given. Edge-list warnings go to stderr.
pub fn load_graph(source: &GraphSource) -> Result<(Graph, Option<FamilySpec>), CliError> {
    match (&source.family, &source.graph) {
        (Some(name), None) => {
            let spec = FamilySpec::parse(name, &source.params)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let g = build_family(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok((g, Some(spec)))
        }
        (None, Some(path)) => {
            if !source.params.is_empty() {
                return Err(CliError::Usage(
                    "--params only applies to --family".to_string(),
                ));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let (g, warnings) =
                parse_edge_list(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            for w in g.validate() {
                eprintln!("warning: {w}");
            }
            Ok((g, None))
        }
        _ => Err(CliError::Usage(
            "give exactly one graph source: --family NAME [--params ...] or --graph FILE"
                .to_string(),
        )),
    }
}

/// Splits on commas that are not nested inside `()` or `{}`.
fn split_top_level(input: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in input.chars() {
        match c {
            '(' | '{' => {
                depth += 1;
                current.push(c);
            }
            ')' | '}' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                tokens.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    tokens.push(current.trim().to_string());
    tokens.retain(|t| !t.is_empty());
    tokens
}

/// Parses `--set`: each token is a 0-based vertex id or a vertex label of
/// the graph (e.g. `(2,1)` on product families).
pub fn parse_vertex_set(input: &str, g: &Graph) -> Result<VertexSet, CliError> {
    let tokens = split_top_level(input);
    if tokens.is_empty() {
        return Err(CliError::Usage("empty vertex set".to_string()));
    }
    let mut set = VertexSet::empty(g.vertex_count());
    for token in tokens {
        let v = if token.chars().all(|c| c.is_ascii_digit()) {
            let id: usize = token
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex id `{token}`")))?;
            if id >= g.vertex_count() {
                return Err(CliError::Usage(format!(
                    "vertex {id} out of range (n = {})",
                    g.vertex_count()
                )));
            }
            id
        } else {
            g.vertex_by_label(&token).ok_or_else(|| {
                CliError::Usage(format!("no vertex labeled `{token}` in this graph"))
            })?
        };
        set.insert(v);
    }
    Ok(set)
}
