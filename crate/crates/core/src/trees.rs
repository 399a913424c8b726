//! Enumeration of pairwise non-isomorphic trees and the search for a tree
//! whose longest forcing chain lags its iteration index.
//!
//! Trees are generated by decoding every labeled-tree code on `n` vertices
//! and deduplicating by a center-rooted canonical encoding. This is cheap
//! up to n = 9 (about 4.8M codes), which is all the search needs.

use std::collections::HashSet;

use crate::chains::llfc;
use crate::graph::Graph;
use crate::solver::{all_minimum_zfs, solve, SolverConfig};
use crate::vertexset::VertexSet;

/// Decodes a labeled-tree code into edges: repeatedly attach the smallest
/// remaining leaf to the next code entry.
fn decode_tree_code(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &c in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("a leaf always remains");
        edges.push((leaf, c));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let mut last = (0..n).filter(|&v| !used[v] && degree[v] == 1);
    let a = last.next().expect("two vertices remain");
    let b = last.next().expect("two vertices remain");
    edges.push((a, b));
    edges
}

/// Centers via leaf stripping: one or two vertices remain.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn encode_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| encode_rooted(adj, u, v))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for c in children {
        out.extend_from_slice(&c);
    }
    out.push(b')');
    out
}

/// Canonical encoding: minimum over the rooted encodings at the centers.
fn canonical_key(adj: &[Vec<usize>]) -> Vec<u8> {
    centers(adj)
        .into_iter()
        .map(|c| encode_rooted(adj, c, usize::MAX))
        .min()
        .expect("trees are nonempty")
}

/// One representative per isomorphism class of trees on `n` vertices,
/// in a deterministic order. Supported for `1 <= n <= 9`.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    assert!(
        (1..=9).contains(&n),
        "tree enumeration supports 1..=9 vertices"
    );
    if n == 1 {
        return vec![Graph::from_edges(1, &[]).unwrap()];
    }
    if n == 2 {
        return vec![Graph::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let edges = decode_tree_code(&code, n);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        if seen.insert(canonical_key(&adj)) {
            out.push(Graph::from_edges(n, &edges).unwrap());
        }
        // Odometer over all codes.
        let mut pos = 0;
        loop {
            if pos == n - 2 {
                return out;
            }
            code[pos] += 1;
            if code[pos] < n {
                break;
            }
            code[pos] = 0;
            pos += 1;
        }
    }
}

/// The invariant profile a searched-for tree must match exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeProfile {
    pub vertices: usize,
    pub z: usize,
    pub num_min_zfs: u64,
    pub i: usize,
    /// Longest-chain length (both min and max aggregation) required for
    /// every minimum forcing set.
    pub llfc: usize,
}

#[derive(Debug, Clone)]
pub struct TreeMatch {
    pub tree: Graph,
    pub min_sets: Vec<VertexSet>,
}

/// First tree (in enumeration order) whose invariants match `profile`:
/// Z, the number of minimum forcing sets, I, and a uniform longest-chain
/// length strictly tracked across every minimum set.
pub fn find_tree_matching(profile: &TreeProfile, cfg: &SolverConfig) -> Option<TreeMatch> {
    for tree in nonisomorphic_trees(profile.vertices) {
        let Ok(sol) = solve(&tree, cfg) else { continue };
        if sol.z != profile.z || sol.num_min_zfs != profile.num_min_zfs || sol.i != profile.i {
            continue;
        }
        let Ok(min_sets) = all_minimum_zfs(&tree, cfg) else {
            continue;
        };
        let uniform = min_sets.iter().all(|set| {
            llfc(&tree, set).is_ok_and(|stats| {
                stats.min_longest == profile.llfc
                    && stats.max_longest == profile.llfc
                    && !stats.truncated
            })
        });
        if uniform {
            return Some(TreeMatch { tree, min_sets });
        }
    }
    None
}
