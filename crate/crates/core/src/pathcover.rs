//! Exact path cover number for small graphs.
//!
//! The path cover number is the minimum number of vertex-disjoint paths
//! (single vertices count) covering all vertices. Computed by subset DP:
//! `ends[m]` holds the possible last vertices of a Hamiltonian path of the
//! induced subgraph on mask `m`, and `cover[m]` is the minimum cover of `m`,
//! splitting off the path through the lowest vertex of `m`.

use crate::error::SolverError;
use crate::graph::Graph;

pub fn path_cover_number(g: &Graph, limit: usize) -> Result<usize, SolverError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(SolverError::PathCoverTooLarge { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | (1 << u)))
        .collect();
    let size = 1usize << n;

    let mut ends = vec![0u32; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..size {
        let reachable = ends[mask];
        if reachable == 0 {
            continue;
        }
        let mut scan = reachable;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let mut expand = adj[v] & !(mask as u32);
            while expand != 0 {
                let w = expand.trailing_zeros() as usize;
                expand &= expand - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }

    let mut cover = vec![u8::MAX; size];
    cover[0] = 0;
    for mask in 1..size {
        let low = 1u32 << mask.trailing_zeros();
        // Split off the path containing the lowest vertex of the mask.
        let mut sub = mask;
        let mut best = u8::MAX;
        loop {
            if sub & (low as usize) != 0 && ends[sub] != 0 {
                let rest = cover[mask & !sub];
                if rest != u8::MAX {
                    best = best.min(rest + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        cover[mask] = best;
    }
    Ok(cover[size - 1] as usize)
}
