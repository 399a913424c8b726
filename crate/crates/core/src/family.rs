//! Generators for the graph families under study.
//!
//! Product-like families flatten the vertex `(i, j)` (with `1 <= i <= s`
//! indexing the first factor and `1 <= j <= t` the second) to the id
//! `(i - 1) * t + (j - 1)`, and carry `(i,j)` labels. Grid rows increase
//! downward; the triangular grid adds the diagonal `{(i,j), (i+1,j+1)}` to
//! every unit square, the king grid adds both diagonals.

use crate::error::GraphError;
use crate::graph::Graph;

/// A parameterized graph family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 2` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Complete bipartite graph with parts of size `p, q >= 1`.
    CompleteBipartite(usize, usize),
    /// Grid: path times path, `s, t >= 2`.
    Grid(usize, usize),
    /// Grid plus one diagonal per unit square, `s, t >= 2`.
    TriangularGrid(usize, usize),
    /// Grid plus both diagonals per unit square, `s, t >= 2`.
    KingGrid(usize, usize),
    /// Cycle times path, `s >= 3`, `t >= 2`.
    CycleXPath(usize, usize),
    /// Complete times path, `s, t >= 2`.
    CompleteXPath(usize, usize),
    /// Complete times complete, `s, t >= 2`.
    CompleteXComplete(usize, usize),
    /// Cycle times complete, `s >= 3`, `t >= 2`.
    CycleXComplete(usize, usize),
    /// Cycle times cycle, `s, t >= 3`.
    CycleXCycle(usize, usize),
    /// Cycles sharing one cut-vertex; `ks[i] >= 2` vertices per cycle
    /// besides the cut-vertex, sorted ascending.
    Bouquet(Vec<usize>),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Grid(..) => "grid",
            FamilySpec::TriangularGrid(..) => "triangular_grid",
            FamilySpec::KingGrid(..) => "king_grid",
            FamilySpec::CycleXPath(..) => "cycle_x_path",
            FamilySpec::CompleteXPath(..) => "complete_x_path",
            FamilySpec::CompleteXComplete(..) => "complete_x_complete",
            FamilySpec::CycleXComplete(..) => "cycle_x_complete",
            FamilySpec::CycleXCycle(..) => "cycle_x_cycle",
            FamilySpec::Bouquet(_) => "bouquet",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => vec![*n],
            FamilySpec::CompleteBipartite(p, q) => vec![*p, *q],
            FamilySpec::Grid(s, t)
            | FamilySpec::TriangularGrid(s, t)
            | FamilySpec::KingGrid(s, t)
            | FamilySpec::CycleXPath(s, t)
            | FamilySpec::CompleteXPath(s, t)
            | FamilySpec::CompleteXComplete(s, t)
            | FamilySpec::CycleXComplete(s, t)
            | FamilySpec::CycleXCycle(s, t) => vec![*s, *t],
            FamilySpec::Bouquet(ks) => ks.clone(),
        }
    }

    /// Resolves a family tag and parameter list.
    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec, GraphError> {
        let one = |family| -> Result<usize, GraphError> {
            match params {
                [n] => Ok(*n),
                _ => Err(GraphError::ParameterCount {
                    family,
                    expected: "1",
                    got: params.len(),
                }),
            }
        };
        let two = |family| -> Result<(usize, usize), GraphError> {
            match params {
                [a, b] => Ok((*a, *b)),
                _ => Err(GraphError::ParameterCount {
                    family,
                    expected: "2",
                    got: params.len(),
                }),
            }
        };
        let spec = match name {
            "path" => FamilySpec::Path(one("path")?),
            "cycle" => FamilySpec::Cycle(one("cycle")?),
            "complete" => FamilySpec::Complete(one("complete")?),
            "complete_bipartite" => {
                let (p, q) = two("complete_bipartite")?;
                FamilySpec::CompleteBipartite(p, q)
            }
            "grid" => {
                let (s, t) = two("grid")?;
                FamilySpec::Grid(s, t)
            }
            "triangular_grid" => {
                let (s, t) = two("triangular_grid")?;
                FamilySpec::TriangularGrid(s, t)
            }
            "king_grid" => {
                let (s, t) = two("king_grid")?;
                FamilySpec::KingGrid(s, t)
            }
            "cycle_x_path" => {
                let (s, t) = two("cycle_x_path")?;
                FamilySpec::CycleXPath(s, t)
            }
            "complete_x_path" => {
                let (s, t) = two("complete_x_path")?;
                FamilySpec::CompleteXPath(s, t)
            }
            "complete_x_complete" => {
                let (s, t) = two("complete_x_complete")?;
                FamilySpec::CompleteXComplete(s, t)
            }
            "cycle_x_complete" => {
                let (s, t) = two("cycle_x_complete")?;
                FamilySpec::CycleXComplete(s, t)
            }
            "cycle_x_cycle" => {
                let (s, t) = two("cycle_x_cycle")?;
                FamilySpec::CycleXCycle(s, t)
            }
            "bouquet" => {
                if params.is_empty() {
                    return Err(GraphError::ParameterCount {
                        family: "bouquet",
                        expected: "at least 1",
                        got: 0,
                    });
                }
                FamilySpec::Bouquet(params.to_vec())
            }
            other => {
                return Err(GraphError::UnknownFamily {
                    name: other.to_string(),
                })
            }
        };
        Ok(spec)
    }

    /// Grid dimensions `(s, t)` for families whose vertices carry `(i,j)`
    /// labels, used by grid-shaped trace rendering.
    pub fn grid_dims(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::Grid(s, t)
            | FamilySpec::TriangularGrid(s, t)
            | FamilySpec::KingGrid(s, t)
            | FamilySpec::CycleXPath(s, t)
            | FamilySpec::CompleteXPath(s, t)
            | FamilySpec::CompleteXComplete(s, t)
            | FamilySpec::CycleXComplete(s, t)
            | FamilySpec::CycleXCycle(s, t) => Some((s, t)),
            _ => None,
        }
    }

    fn range_error(&self, requirement: &str) -> GraphError {
        GraphError::ParameterRange {
            family: self.name(),
            requirement: requirement.to_string(),
        }
    }

    fn check_ranges(&self) -> Result<(), GraphError> {
        match self {
            FamilySpec::Path(n) if *n < 2 => Err(self.range_error("n >= 2")),
            FamilySpec::Cycle(n) if *n < 3 => Err(self.range_error("n >= 3")),
            FamilySpec::Complete(n) if *n < 1 => Err(self.range_error("n >= 1")),
            FamilySpec::CompleteBipartite(p, q) if *p < 1 || *q < 1 => {
                Err(self.range_error("p, q >= 1"))
            }
            FamilySpec::Grid(s, t)
            | FamilySpec::TriangularGrid(s, t)
            | FamilySpec::KingGrid(s, t)
            | FamilySpec::CompleteXPath(s, t)
            | FamilySpec::CompleteXComplete(s, t)
                if *s < 2 || *t < 2 =>
            {
                Err(self.range_error("s, t >= 2"))
            }
            FamilySpec::CycleXPath(s, t) | FamilySpec::CycleXComplete(s, t) if *s < 3 || *t < 2 => {
                Err(self.range_error("s >= 3 and t >= 2"))
            }
            FamilySpec::CycleXCycle(s, t) if *s < 3 || *t < 3 => Err(self.range_error("s, t >= 3")),
            FamilySpec::Bouquet(ks) => {
                if ks.is_empty() {
                    return Err(self.range_error("at least one cycle"));
                }
                if ks.iter().any(|&k| k < 2) {
                    return Err(self.range_error("every k_i >= 2"));
                }
                if ks.windows(2).any(|w| w[0] > w[1]) {
                    return Err(self.range_error("k_1 <= k_2 <= ... <= k_n"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        build_family(self)
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

/// Builds the family member with its canonical labeling.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.check_ranges()?;
    match *spec {
        FamilySpec::Path(n) => {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite(p, q) => {
            let mut edges = Vec::new();
            for u in 0..p {
                for v in p..p + q {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(p + q, &edges)
        }
        FamilySpec::Grid(s, t) => product_grid(s, t, Rows::Path, Cols::Path, Diagonals::None),
        FamilySpec::TriangularGrid(s, t) => {
            product_grid(s, t, Rows::Path, Cols::Path, Diagonals::Down)
        }
        FamilySpec::KingGrid(s, t) => product_grid(s, t, Rows::Path, Cols::Path, Diagonals::Both),
        FamilySpec::CycleXPath(s, t) => {
            product_grid(s, t, Rows::Cycle, Cols::Path, Diagonals::None)
        }
        FamilySpec::CompleteXPath(s, t) => {
            product_grid(s, t, Rows::Complete, Cols::Path, Diagonals::None)
        }
        FamilySpec::CompleteXComplete(s, t) => {
            product_grid(s, t, Rows::Complete, Cols::Complete, Diagonals::None)
        }
        FamilySpec::CycleXComplete(s, t) => {
            product_grid(s, t, Rows::Cycle, Cols::Complete, Diagonals::None)
        }
        FamilySpec::CycleXCycle(s, t) => {
            product_grid(s, t, Rows::Cycle, Cols::Cycle, Diagonals::None)
        }
        FamilySpec::Bouquet(ref ks) => bouquet(ks),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Rows {
    Path,
    Cycle,
    Complete,
}
#[derive(Clone, Copy, PartialEq)]
enum Cols {
    Path,
    Cycle,
    Complete,
}
#[derive(Clone, Copy, PartialEq)]
enum Diagonals {
    None,
    Down,
    Both,
}

/// Shared assembly for all product-shaped families: `s` rows (the first
/// factor) by `t` columns (the second factor).
fn product_grid(
    s: usize,
    t: usize,
    rows: Rows,
    cols: Cols,
    diagonals: Diagonals,
) -> Result<Graph, GraphError> {
    let id = |i: usize, j: usize| i * t + j; // 0-based here
    let mut edges = Vec::new();
    // Second-factor edges within each row.
    for i in 0..s {
        match cols {
            Cols::Path => {
                for j in 0..t - 1 {
                    edges.push((id(i, j), id(i, j + 1)));
                }
            }
            Cols::Cycle => {
                for j in 0..t {
                    edges.push((id(i, j), id(i, (j + 1) % t)));
                }
            }
            Cols::Complete => {
                for j in 0..t {
                    for j2 in j + 1..t {
                        edges.push((id(i, j), id(i, j2)));
                    }
                }
            }
        }
    }
    // First-factor edges within each column.
    for j in 0..t {
        match rows {
            Rows::Path => {
                for i in 0..s - 1 {
                    edges.push((id(i, j), id(i + 1, j)));
                }
            }
            Rows::Cycle => {
                for i in 0..s {
                    edges.push((id(i, j), id((i + 1) % s, j)));
                }
            }
            Rows::Complete => {
                for i in 0..s {
                    for i2 in i + 1..s {
                        edges.push((id(i, j), id(i2, j)));
                    }
                }
            }
        }
    }
    match diagonals {
        Diagonals::None => {}
        Diagonals::Down => {
            for i in 0..s - 1 {
                for j in 0..t - 1 {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                }
            }
        }
        Diagonals::Both => {
            for i in 0..s - 1 {
                for j in 0..t - 1 {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                    edges.push((id(i + 1, j), id(i, j + 1)));
                }
            }
        }
    }
    let labels = (0..s)
        .flat_map(|i| (0..t).map(move |j| format!("({},{})", i + 1, j + 1)))
        .collect();
    Ok(Graph::from_edges(s * t, &edges)?.with_labels(labels))
}

/// `n` cycles sharing the cut-vertex `v` (id 0); cycle `i` contributes the
/// consecutive vertices `w_{i,1} .. w_{i,k_i}`, cyclically attached to `v`.
fn bouquet(ks: &[usize]) -> Result<Graph, GraphError> {
    let n_total = 1 + ks.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut labels = vec!["v".to_string()];
    let mut start = 1;
    for (i, &k) in ks.iter().enumerate() {
        edges.push((0, start));
        edges.push((0, start + k - 1));
        for off in 0..k - 1 {
            edges.push((start + off, start + off + 1));
        }
        for off in 0..k {
            labels.push(format!("w_{{{},{}}}", i + 1, off + 1));
        }
        start += k;
    }
    Ok(Graph::from_edges(n_total, &edges)?.with_labels(labels))
}
