//! Invariant reports: one solved graph with bounds, expectations, and
//! serialization to JSON and CSV.

use std::time::Instant;

use serde::Serialize;

use crate::bounds::{check_bounds, BoundsReport};
use crate::error::SolverError;
use crate::expected::{expected_invariants, ExpectedInvariants};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::pathcover::path_cover_number;
use crate::solver::{solve, SolverConfig};

#[derive(Debug, Clone, Serialize)]
pub struct GraphDesc {
    pub family: String,
    pub params: Vec<usize>,
    pub n: usize,
    pub m: usize,
    /// Number of connected components; Z and I of a disconnected graph are
    /// combined componentwise (Z sums, I is the maximum).
    pub components: usize,
}

impl GraphDesc {
    pub fn new(g: &Graph, family: Option<&FamilySpec>) -> GraphDesc {
        GraphDesc {
            family: family.map_or_else(|| "edge_list".to_string(), |f| f.name().to_string()),
            params: family.map_or_else(Vec::new, FamilySpec::params),
            n: g.vertex_count(),
            m: g.edge_count(),
            components: g.components().len().max(usize::from(g.vertex_count() > 0)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectedSection {
    pub z: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_at_most: Option<usize>,
    pub source: &'static str,
}

impl From<&ExpectedInvariants> for ExpectedSection {
    fn from(e: &ExpectedInvariants) -> Self {
        ExpectedSection {
            z: e.z,
            i: e.iter.exact(),
            i_at_most: match e.iter.exact() {
                Some(_) => None,
                None => Some(e.iter.bound()),
            },
            source: e.source,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TimingMs {
    pub solve: u64,
    pub path_cover: u64,
    pub total: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub graph: GraphDesc,
    pub z: usize,
    pub i: usize,
    pub zfs_witness: Vec<usize>,
    pub ii_witness: Vec<usize>,
    pub num_min_zfs: u64,
    pub bounds: BoundsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedSection>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    /// Present only when requested; excluded from determinism comparisons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<TimingMs>,
}

/// Solves `g` and assembles the full report. The path cover number is
/// included when the graph is small enough for the exact search; bound
/// violations abort (they indicate a solver bug).
pub fn build_report(
    g: &Graph,
    family: Option<&FamilySpec>,
    cfg: &SolverConfig,
    with_timing: bool,
) -> Result<InvariantReport, SolverError> {
    let t0 = Instant::now();
    let sol = solve(g, cfg)?;
    let t_solve = t0.elapsed();

    let t1 = Instant::now();
    let path_cover = if g.vertex_count() <= cfg.path_cover_limit {
        Some(path_cover_number(g, cfg.path_cover_limit)?)
    } else {
        None
    };
    let t_cover = t1.elapsed();

    let bounds = check_bounds(g, &sol, path_cover)?;
    let expected = family.and_then(expected_invariants);
    let matches_expected = expected
        .as_ref()
        .map(|e| e.z == sol.z && e.iter.admits(sol.i));

    Ok(InvariantReport {
        graph: GraphDesc::new(g, family),
        z: sol.z,
        i: sol.i,
        zfs_witness: sol.zfs_witness.ids(),
        ii_witness: sol.ii_witness.ids(),
        num_min_zfs: sol.num_min_zfs,
        bounds,
        expected: expected.as_ref().map(ExpectedSection::from),
        matches_expected,
        timing_ms: with_timing.then(|| TimingMs {
            solve: t_solve.as_millis() as u64,
            path_cover: t_cover.as_millis() as u64,
            total: t0.elapsed().as_millis() as u64,
        }),
    })
}

fn join_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub const CSV_HEADER: &'static str = "family,params,n,m,components,z,i,zfs_witness,\
        ii_witness,num_min_zfs,delta,path_cover,iter_lower,iter_upper,expected_z,expected_i,match";

    pub fn to_csv_row(&self) -> String {
        let expected_i = self.expected.as_ref().map(|e| match (e.i, e.i_at_most) {
            (Some(v), _) => v.to_string(),
            (None, Some(b)) => format!("<={b}"),
            (None, None) => String::new(),
        });
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph.family,
            join_ids(&self.graph.params),
            self.graph.n,
            self.graph.m,
            self.graph.components,
            self.z,
            self.i,
            join_ids(&self.zfs_witness),
            join_ids(&self.ii_witness),
            self.num_min_zfs,
            self.bounds.delta,
            opt_str(&self.bounds.path_cover),
            opt_str(&self.bounds.iter_lower),
            opt_str(&self.bounds.iter_upper),
            opt_str(&self.expected.as_ref().map(|e| e.z)),
            expected_i.unwrap_or_default(),
            opt_str(&self.matches_expected),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        out.push_str(&format!(
            "graph: {}({}) with n = {}, m = {}",
            g.family,
            join_ids(&g.params),
            g.n,
            g.m
        ));
        if g.components > 1 {
            out.push_str(&format!(" ({} components)", g.components));
        }
        out.push('\n');
        out.push_str(&format!("z = {}\n", self.z));
        out.push_str(&format!("i = {}\n", self.i));
        out.push_str(&format!(
            "zfs_witness = {{{}}}\n",
            join_ids(&self.zfs_witness)
        ));
        out.push_str(&format!(
            "ii_witness = {{{}}}\n",
            join_ids(&self.ii_witness)
        ));
        out.push_str(&format!("num_min_zfs = {}\n", self.num_min_zfs));
        out.push_str(&format!("delta = {}\n", self.bounds.delta));
        if let Some(p) = self.bounds.path_cover {
            out.push_str(&format!("path_cover = {p}\n"));
        }
        if let (Some(lo), Some(hi)) = (self.bounds.iter_lower, self.bounds.iter_upper) {
            out.push_str(&format!("iteration bounds: {lo} <= i <= {hi}\n"));
        }
        if let Some(e) = &self.expected {
            let i_txt = match (e.i, e.i_at_most) {
                (Some(v), _) => format!("i = {v}"),
                (None, Some(b)) => format!("i <= {b}"),
                (None, None) => String::new(),
            };
            out.push_str(&format!(
                "expected: z = {}, {} [{}]\n",
                e.z, i_txt, e.source
            ));
            out.push_str(&format!(
                "match = {}\n",
                self.matches_expected.unwrap_or(false)
            ));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!(
                "timing_ms: solve = {}, path_cover = {}, total = {}\n",
                t.solve, t.path_cover, t.total
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;

    #[test]
    fn report_for_a_cycle() {
        let spec = FamilySpec::Cycle(7);
        let g = build_family(&spec).unwrap();
        let report = build_report(&g, Some(&spec), &SolverConfig::default(), false).unwrap();
        assert_eq!(report.z, 2);
        assert_eq!(report.i, 3);
        assert_eq!(report.matches_expected, Some(true));
        assert!(report.timing_ms.is_none());
        let json = report.to_json();
        assert!(json.contains("\"z\": 2"));
        assert!(json.contains("\"match\": true"));
        assert!(!json.contains("timing"));
    }

    #[test]
    fn csv_row_has_all_columns() {
        let spec = FamilySpec::Path(4);
        let g = build_family(&spec).unwrap();
        let report = build_report(&g, Some(&spec), &SolverConfig::default(), false).unwrap();
        let header_cols = InvariantReport::CSV_HEADER.split(',').count();
        let row_cols = report.to_csv_row().split(',').count();
        assert_eq!(header_cols, row_cols);
    }

    #[test]
    fn edge_list_graphs_have_no_expectation() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let report = build_report(&g, None, &SolverConfig::default(), false).unwrap();
        assert_eq!(report.graph.family, "edge_list");
        assert!(report.expected.is_none());
        assert!(report.matches_expected.is_none());
    }
}
