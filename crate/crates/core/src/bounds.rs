//! Sandwich bounds on the iteration index and perturbation checks on the
//! zero forcing number.

use serde::Serialize;

use crate::error::SolverError;
use crate::graph::Graph;
use crate::solver::{zfn_tracked, BudgetTracker, Solution, SolverConfig};

/// Bound checks attached to one solved graph. For a graph with at least one
/// edge, `max{|V|/Z - 1, 1} <= I <= |V| - Z`; the lower bound is compared as
/// an exact rational via ceiling division. Always `delta <= Z`, and
/// `P <= Z` when the path cover number was computed.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub delta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_cover: Option<usize>,
    /// `ceil(|V|/Z) - 1` clamped to at least 1; absent for edgeless graphs,
    /// where the sandwich does not apply.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iter_lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iter_upper: Option<usize>,
    pub satisfied: bool,
}

/// Validates every applicable bound. A violation is an internal error: the
/// inequalities are theorems, so failing one means the solver is wrong.
pub fn check_bounds(
    g: &Graph,
    sol: &Solution,
    path_cover: Option<usize>,
) -> Result<BoundsReport, SolverError> {
    let n = g.vertex_count();
    let delta = g.min_degree();
    let mut report = BoundsReport {
        delta,
        path_cover,
        iter_lower: None,
        iter_upper: None,
        satisfied: true,
    };
    if delta > sol.z {
        return Err(SolverError::BoundViolation(format!(
            "delta = {delta} exceeds Z = {}",
            sol.z
        )));
    }
    if let Some(p) = path_cover {
        if p > sol.z {
            return Err(SolverError::BoundViolation(format!(
                "path cover {p} exceeds Z = {}",
                sol.z
            )));
        }
    }
    if g.edge_count() > 0 {
        // ceil(n / z) - 1 == ceil((n - z) / z), compared exactly; z >= 1 here.
        let lower = (n - sol.z).div_ceil(sol.z);
        let lower = lower.max(1);
        let upper = n - sol.z;
        report.iter_lower = Some(lower);
        report.iter_upper = Some(upper);
        if sol.i < lower || sol.i > upper {
            return Err(SolverError::BoundViolation(format!(
                "I = {} outside [{lower}, {upper}] for n = {n}, Z = {}",
                sol.i, sol.z
            )));
        }
    }
    Ok(report)
}

/// Outcome of deleting one vertex or one edge.
#[derive(Debug, Clone, Serialize)]
pub struct DeletionRow {
    /// The deleted vertex, or the deleted edge's endpoints.
    pub deleted: (usize, Option<usize>),
    pub z_after: usize,
    /// `z_after - z` in `{-1, 0, +1}` when the sandwich holds.
    pub delta_z: i64,
    pub within_one: bool,
}

/// Z changes by at most one under single vertex or edge deletions.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbationReport {
    pub base_z: usize,
    pub vertex_deletions: Vec<DeletionRow>,
    pub edge_deletions: Vec<DeletionRow>,
    pub all_within_one: bool,
}

/// Recomputes Z for every single-vertex and single-edge deletion and checks
/// the resulting value stays within one of Z(G). All deletions share one
/// budget. Deletions that isolate a vertex are fine: an isolated vertex is
/// simply a forced member of every forcing set.
pub fn perturbation_check(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<PerturbationReport, SolverError> {
    let mut tracker = BudgetTracker::new(cfg.budget);
    let (base_z, _) = zfn_tracked(g, cfg, &mut tracker)?;
    let mut report = PerturbationReport {
        base_z,
        vertex_deletions: Vec::new(),
        edge_deletions: Vec::new(),
        all_within_one: true,
    };
    let record = |rows: &mut Vec<DeletionRow>, deleted, z_after: usize| {
        let delta_z = z_after as i64 - base_z as i64;
        let within_one = delta_z.abs() <= 1;
        rows.push(DeletionRow {
            deleted,
            z_after,
            delta_z,
            within_one,
        });
        within_one
    };
    for v in 0..g.vertex_count() {
        let (z_after, _) = zfn_tracked(&g.delete_vertex(v), cfg, &mut tracker)?;
        report.all_within_one &= record(&mut report.vertex_deletions, (v, None), z_after);
    }
    for (u, v) in g.edges() {
        let (z_after, _) = zfn_tracked(&g.delete_edge(u, v), cfg, &mut tracker)?;
        report.all_within_one &= record(&mut report.edge_deletions, (u, Some(v)), z_after);
    }
    Ok(report)
}
