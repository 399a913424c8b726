//! Chronological lists of forces, forcing chains, reversals, and the
//! longest-forcing-chain statistics.
//!
//! A chronological list applies one force `u -> w` at a time until the graph
//! is black. Once a vertex forces, it has no white neighbors left, so every
//! vertex forces at most once and is forced at most once: the recorded
//! forces form vertex-disjoint chains, one started by each vertex of the
//! initial set.

use crate::bits::{BitBlock, Block256, Kernel};
use crate::error::SolverError;
use crate::forcing::{kernel256, run_forcing};
use crate::graph::Graph;
use crate::vertexset::VertexSet;

/// A single force: `source` turned `target` black.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Force {
    pub source: usize,
    pub target: usize,
}

/// An ordered record of forces applied one at a time from `z0` until all
/// vertices are black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChronologicalList {
    z0: VertexSet,
    forces: Vec<Force>,
}

impl ChronologicalList {
    pub fn initial(&self) -> &VertexSet {
        &self.z0
    }

    pub fn forces(&self) -> &[Force] {
        &self.forces
    }
}

/// A maximal forcing chain: consecutive entries appear as forces in the
/// list. A chain that never forces is the singleton of its start vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingChain(pub Vec<usize>);

impl ForcingChain {
    /// Chain length counted in forces (edges): a single force has length 1.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("chains are nonempty")
    }
}

/// Result of enumerating chronological lists, possibly truncated at a cap.
#[derive(Debug)]
pub struct ListEnumeration {
    pub lists: Vec<ChronologicalList>,
    pub truncated: bool,
}

/// Depth-first enumeration of every valid one-force-at-a-time ordering,
/// smallest `(source, target)` pair first, truncated after `cap` lists.
pub fn enumerate_chronological_lists(
    g: &Graph,
    z: &VertexSet,
    cap: usize,
) -> Result<ListEnumeration, SolverError> {
    let mut lists = Vec::new();
    let truncated = for_each_list(g, z, cap, |list| lists.push(list.clone()))?;
    Ok(ListEnumeration { lists, truncated })
}

/// Streams every chronological list to `visit` without storing them.
/// Returns whether the enumeration was truncated by `cap`.
pub fn for_each_list(
    g: &Graph,
    z: &VertexSet,
    cap: usize,
    mut visit: impl FnMut(&ChronologicalList),
) -> Result<bool, SolverError> {
    assert_eq!(z.ambient(), g.vertex_count());
    assert!(cap >= 1, "cap must be at least 1");
    let kernel = kernel256(g);
    let start = Block256::from_words(z.words());
    if kernel.closure(start) != kernel.full {
        return Err(SolverError::NotForcingSet);
    }
    let mut state = DfsState {
        g,
        kernel: &kernel,
        forces: Vec::new(),
        z0: *z,
        emitted: 0,
        cap,
        visit: &mut visit,
    };
    let truncated = state.recurse(start);
    Ok(truncated)
}

struct DfsState<'a, F: FnMut(&ChronologicalList)> {
    g: &'a Graph,
    kernel: &'a Kernel<Block256>,
    forces: Vec<Force>,
    z0: VertexSet,
    emitted: usize,
    cap: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&ChronologicalList)> DfsState<'_, F> {
    /// Returns true once the cap is hit, which aborts the whole search.
    fn recurse(&mut self, black: Block256) -> bool {
        if black == self.kernel.full {
            let list = ChronologicalList {
                z0: self.z0,
                forces: self.forces.clone(),
            };
            (self.visit)(&list);
            self.emitted += 1;
            return self.emitted >= self.cap;
        }
        // Valid moves: black vertices with exactly one white neighbor,
        // visited in ascending source order.
        let mut scan = black;
        while !scan.is_zero() {
            let u = scan.trailing_zeros() as usize;
            scan = scan.clear_lowest();
            let white = Block256::from_words(self.g.neighbors(u).words()).diff(black);
            if white.count_ones() == 1 {
                let w = white.trailing_zeros() as usize;
                self.forces.push(Force {
                    source: u,
                    target: w,
                });
                let stop = self.recurse(black.or(white));
                self.forces.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Splits a list into its maximal chains: each vertex of the initial set
/// starts one chain (possibly a singleton), ordered by start vertex.
pub fn maximal_chains(list: &ChronologicalList) -> Vec<ForcingChain> {
    let n = list.z0.ambient();
    let mut successor = vec![None; n];
    for f in &list.forces {
        debug_assert!(successor[f.source].is_none());
        successor[f.source] = Some(f.target);
    }
    list.z0
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = successor[cur] {
                chain.push(next);
                cur = next;
            }
            ForcingChain(chain)
        })
        .collect()
}

/// The set of last vertices of the maximal chains of `list`. Always has the
/// cardinality of the initial set, and is itself a zero forcing set.
pub fn reversal(list: &ChronologicalList) -> VertexSet {
    let n = list.z0.ambient();
    VertexSet::from_ids(n, maximal_chains(list).iter().map(ForcingChain::last))
}

/// Longest-chain length statistics for a zero forcing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LongestChainStats {
    /// Minimum over lists of the longest chain length (in forces).
    pub min_longest: usize,
    /// Maximum over lists of the longest chain length (in forces).
    pub max_longest: usize,
    /// Number of distinct attribution maps (saturating).
    pub attributions: u64,
    /// Always false: the statistics are computed exactly, never from a
    /// truncated enumeration.
    pub truncated: bool,
}

/// Length of the longest forcing chain arising from `z`, aggregated by both
/// min and max over the lists that perform each force in the global round
/// where its target turns black.
///
/// Within a round the only freedom is which capable vertex each target is
/// attributed to, and capable vertices are distinct across targets, so both
/// aggregates follow from a chain-depth recurrence over the rounds — no list
/// enumeration is needed and the result is always exact. (Lists that delay
/// forces across rounds can stretch a chain past the iteration index; those
/// orderings are not what the chain statistics describe.)
pub fn llfc(g: &Graph, z: &VertexSet) -> Result<LongestChainStats, SolverError> {
    let trace = run_forcing(g, z);
    if !trace.success() {
        return Err(SolverError::NotForcingSet);
    }
    let n = g.vertex_count();
    let mut min_depth = vec![0usize; n];
    let mut max_depth = vec![0usize; n];
    let mut attributions: u64 = 1;
    for (r, forced) in trace.derived().iter().enumerate() {
        let black_before = &trace.layers()[r];
        for w in forced.iter() {
            let mut best_min = usize::MAX;
            let mut best_max = 0usize;
            let mut options = 0u64;
            for u in g.neighbors(w).intersection(black_before).iter() {
                let whites = g.neighbors(u).difference(black_before);
                if whites.len() == 1 && whites.contains(w) {
                    options += 1;
                    best_min = best_min.min(min_depth[u]);
                    best_max = best_max.max(max_depth[u]);
                }
            }
            debug_assert!(options >= 1, "every forced vertex has a capable forcer");
            min_depth[w] = best_min + 1;
            max_depth[w] = best_max + 1;
            attributions = attributions.saturating_mul(options);
        }
    }
    Ok(LongestChainStats {
        min_longest: min_depth.iter().copied().max().unwrap_or(0),
        max_longest: max_depth.iter().copied().max().unwrap_or(0),
        attributions,
        truncated: false,
    })
}
