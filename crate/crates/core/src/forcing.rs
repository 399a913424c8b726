//! The zero forcing dynamical system: global color-change steps, closures,
//! and iteration traces.
//!
//! The color-change rule turns a white vertex black when it is the only
//! white vertex in the closed neighborhood of some black vertex. A global
//! step applies every available force simultaneously.

use serde::Serialize;

use crate::bits::{BitBlock, Block256, Kernel};
use crate::graph::Graph;
use crate::vertexset::VertexSet;

pub(crate) fn kernel256(g: &Graph) -> Kernel<Block256> {
    let adj = (0..g.vertex_count())
        .map(|v| Block256::from_words(g.neighbors(v).words()))
        .collect();
    Kernel::new(adj)
}

fn to_set(g: &Graph, b: Block256) -> VertexSet {
    VertexSet::from_words(g.vertex_count(), b.to_words())
}

/// One global application of the color-change rule. Monotone in the input
/// and idempotent on fixpoints.
pub fn color_change_step(g: &Graph, black: &VertexSet) -> VertexSet {
    assert_eq!(black.ambient(), g.vertex_count());
    let kernel = kernel256(g);
    to_set(g, kernel.step(Block256::from_words(black.words())))
}

/// The chain `Z_0 subset Z_1 subset ... subset Z_m` produced by iterating
/// global color-change steps from `z0` to a fixpoint.
#[derive(Debug, Clone)]
pub struct ForcingTrace {
    z0: VertexSet,
    layers: Vec<VertexSet>,
    derived: Vec<VertexSet>,
    success: bool,
}

impl ForcingTrace {
    pub fn initial(&self) -> &VertexSet {
        &self.z0
    }

    /// `Z_0 ..= Z_m`, strictly increasing, with `Z_m` the fixpoint.
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    /// Derived sets `Z_i \ Z_{i-1}` for `i = 1 ..= m`.
    pub fn derived(&self) -> &[VertexSet] {
        &self.derived
    }

    /// Whether the fixpoint is the whole vertex set.
    pub fn success(&self) -> bool {
        self.success
    }

    /// Number of strict-growth steps; on success this is the iteration
    /// index of `z0`.
    pub fn iterations(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn final_set(&self) -> &VertexSet {
        self.layers.last().expect("at least the initial layer")
    }

    /// Vertices never turned black.
    pub fn remainder(&self) -> VertexSet {
        self.final_set().complement()
    }

    /// The step at which `v` first appears black (0 for members of `z0`).
    pub fn first_black_round(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|layer| layer.contains(v))
    }
}

/// Iterates global color-change steps from `z` to the fixpoint.
pub fn run_forcing(g: &Graph, z: &VertexSet) -> ForcingTrace {
    assert_eq!(z.ambient(), g.vertex_count());
    let kernel = kernel256(g);
    let mut layers = vec![*z];
    let mut derived = Vec::new();
    let mut black = Block256::from_words(z.words());
    loop {
        let next = kernel.step(black);
        if next == black {
            break;
        }
        derived.push(to_set(g, next.diff(black)));
        layers.push(to_set(g, next));
        black = next;
    }
    ForcingTrace {
        z0: *z,
        success: black == kernel.full,
        layers,
        derived,
    }
}

/// Whether iterating the rule from `z` blackens the whole graph.
pub fn is_zero_forcing_set(g: &Graph, z: &VertexSet) -> bool {
    assert_eq!(z.ambient(), g.vertex_count());
    kernel256(g).is_zfs(Block256::from_words(z.words()))
}

/// Serializable view of a trace: per-vertex first-black rounds plus the
/// layer and derived-set chains.
#[derive(Debug, Serialize)]
pub struct TraceReport {
    pub n: usize,
    pub initial: Vec<usize>,
    pub success: bool,
    pub iterations: usize,
    pub layers: Vec<Vec<usize>>,
    pub derived: Vec<Vec<usize>>,
    /// For each vertex, the step at which it first turns black.
    pub first_black: Vec<Option<usize>>,
    pub white_remainder: Vec<usize>,
}

impl TraceReport {
    pub fn new(g: &Graph, trace: &ForcingTrace) -> TraceReport {
        TraceReport {
            n: g.vertex_count(),
            initial: trace.initial().ids(),
            success: trace.success(),
            iterations: trace.iterations(),
            layers: trace.layers().iter().map(VertexSet::ids).collect(),
            derived: trace.derived().iter().map(VertexSet::ids).collect(),
            first_black: (0..g.vertex_count())
                .map(|v| trace.first_black_round(v))
                .collect(),
            white_remainder: trace.remainder().ids(),
        }
    }
}

/// Renders the per-vertex first-black rounds on an `s` by `t` grid, one
/// number per vertex and `.` for vertices never blackened.
pub fn render_trace_grid(trace: &ForcingTrace, s: usize, t: usize) -> String {
    let width = trace.iterations().to_string().len().max(1);
    let mut out = String::new();
    for i in 0..s {
        let row: Vec<String> = (0..t)
            .map(|j| match trace.first_black_round(i * t + j) {
                Some(m) => format!("{m:>width$}"),
                None => format!("{:>width$}", "."),
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Renders first-black rounds as one `vertex[/label]: round` line per vertex.
pub fn render_trace_list(g: &Graph, trace: &ForcingTrace) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let round = match trace.first_black_round(v) {
            Some(m) => m.to_string(),
            None => "white".to_string(),
        };
        match g.label(v) {
            Some(l) => out.push_str(&format!("{v} {l}: {round}\n")),
            None => out.push_str(&format!("{v}: {round}\n")),
        }
    }
    out
}
