//! Immutable simple undirected graphs with bitset adjacency.

use crate::error::{GraphError, GraphWarning};
use crate::vertexset::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex. Values are immutable
/// after construction and safe to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse silently
    /// (adjacency is a set); self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Attaches a human-readable label per vertex (e.g. `(i,j)` coordinates).
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex required");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeStats { min, max, degrees }
    }

    /// Minimum degree; the seed for the zero-forcing search lower bound.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Flags (but does not reject) isolated vertices.
    pub fn validate(&self) -> Vec<GraphWarning> {
        (0..self.n)
            .filter(|&v| self.adj[v].is_empty())
            .map(GraphWarning::IsolatedVertex)
            .collect()
    }

    /// True when adjacency is symmetric and loop-free. Construction
    /// guarantees this; exposed so tests can assert it on every fixture.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u) && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        })
    }

    /// Deletes a vertex, shifting higher ids down by one. Labels are carried
    /// over for the surviving vertices.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let remap = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
        let mut g = Graph::from_edges(self.n - 1, &edges).expect("deletion preserves validity");
        if let Some(labels) = &self.labels {
            let kept: Vec<String> = labels
                .iter()
                .enumerate()
                .filter(|&(u, _)| u != v)
                .map(|(_, l)| l.clone())
                .collect();
            g = g.with_labels(kept);
        }
        g
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "edge ({u}, {v}) not present");
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        let mut g = Graph::from_edges(self.n, &edges).expect("deletion preserves validity");
        if let Some(labels) = &self.labels {
            g = g.with_labels(labels.clone());
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut frontier = VertexSet::empty(self.n);
            frontier.insert(start);
            let mut comp = frontier;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            seen = seen.union(&comp);
            comps.push(comp.ids());
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `vertices` (ascending ids required). Returns the
    /// subgraph and the map from new ids to the original ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for u in self.adj[v].iter() {
                if u > v && position[u] != usize::MAX {
                    edges.push((i, position[u]));
                }
            }
        }
        let mut g = Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is valid");
        if let Some(labels) = &self.labels {
            g = g.with_labels(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, vertices.to_vec())
    }

    /// Labeled equality: same vertex count and identical adjacency.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Degree summary: minimum, maximum, and the per-vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

impl DegreeStats {
    /// Degrees in descending order.
    pub fn sequence(&self) -> Vec<usize> {
        let mut s = self.degrees.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Cartesian product: `(u, v) ~ (u', v')` iff `u = u'` and `v ~ v'` in `h`,
/// or `v = v'` and `u ~ u'` in `g`. Vertex `(i, j)` of the product (1-based
/// in labels) flattens to id `i * |h| + j` with 0-based `i`, `j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (s, t) = (g.vertex_count(), h.vertex_count());
    if s == 0 || t == 0 {
        return Err(GraphError::EmptyProduct);
    }
    let n = s
        .checked_mul(t)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(GraphError::TooManyVertices {
            n: s.saturating_mul(t),
            max: MAX_VERTICES,
        })?;
    let mut edges = Vec::new();
    for i in 0..s {
        for (a, b) in h.edges() {
            edges.push((i * t + a, i * t + b));
        }
    }
    for j in 0..t {
        for (a, b) in g.edges() {
            edges.push((a * t + j, b * t + j));
        }
    }
    let labels = (0..s)
        .flat_map(|i| (0..t).map(move |j| format!("({},{})", i + 1, j + 1)))
        .collect();
    Ok(Graph::from_edges(n, &edges)?.with_labels(labels))
}
