//! Round counting for naive substitution on the generic kernel system.
//!
//! For a generic symmetric matrix `A` supported on the graph (arbitrary
//! diagonal, nonzero entries exactly on edges), solving `A x = 0` starting
//! from `x_v = 0` on an initial set proceeds by substitution: a row `u`
//! whose own variable is known zero and whose neighbor variables are all
//! known zero except one deduces that neighbor to be zero. The diagonal
//! entry is arbitrary, so a row never deduces its own variable. Rounds
//! apply every available deduction simultaneously.
//!
//! This is implemented directly on adjacency lists, independently of the
//! bitset closure engine, so the two routes can be checked against each
//! other: the deduction rule is exactly the color-change rule, and
//! `(rounds, solved)` must equal the forcing iteration count and success.

use crate::graph::Graph;
use crate::vertexset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstitutionOutcome {
    /// Number of simultaneous deduction rounds until no row deduces.
    pub rounds: usize,
    /// Whether every variable was deduced zero.
    pub solved: bool,
}

pub fn generic_kernel_rounds(g: &Graph, z: &VertexSet) -> SubstitutionOutcome {
    assert_eq!(z.ambient(), g.vertex_count());
    let n = g.vertex_count();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).ids()).collect();
    let mut known_zero = vec![false; n];
    for v in z.iter() {
        known_zero[v] = true;
    }
    let mut rounds = 0;
    loop {
        let mut deduced: Vec<usize> = Vec::new();
        for u in 0..n {
            if !known_zero[u] {
                continue;
            }
            let mut unknown = None;
            let mut unknown_count = 0;
            for &w in &adjacency[u] {
                if !known_zero[w] {
                    unknown = Some(w);
                    unknown_count += 1;
                    if unknown_count > 1 {
                        break;
                    }
                }
            }
            if unknown_count == 1 {
                deduced.push(unknown.unwrap());
            }
        }
        deduced.sort_unstable();
        deduced.dedup();
        if deduced.is_empty() {
            break;
        }
        for w in deduced {
            known_zero[w] = true;
        }
        rounds += 1;
    }
    SubstitutionOutcome {
        rounds,
        solved: known_zero.iter().all(|&k| k),
    }
}
