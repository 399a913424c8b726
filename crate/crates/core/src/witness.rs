//! Explicit forcing-set constructions with verified claims.
//!
//! Each family with a known construction gets the concrete initial black
//! set; the construction is run through the engine before being returned,
//! so a returned witness is guaranteed to force and to meet its claimed
//! iteration count or bound.

use crate::error::SolverError;
use crate::family::{build_family, FamilySpec};
use crate::forcing::run_forcing;
use crate::vertexset::VertexSet;

/// Claimed iteration behavior of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationClaim {
    Exactly(usize),
    AtMost(usize),
    /// The construction only claims to force.
    Unspecified,
}

/// A verified construction: `set` forces the family member, and
/// `observed_iterations` satisfies `claim`.
#[derive(Debug, Clone)]
pub struct ProofWitness {
    pub set: VertexSet,
    pub claim: IterationClaim,
    pub observed_iterations: usize,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Builds the construction for `spec`, runs the engine over it, and checks
/// the claims. Families without a stored construction return
/// [`SolverError::NoConstruction`].
pub fn proof_witness(spec: &FamilySpec) -> Result<ProofWitness, SolverError> {
    let g = build_family(spec)?;
    let n = g.vertex_count();
    let (ids, claim): (Vec<usize>, IterationClaim) = match *spec {
        FamilySpec::Path(len) => (vec![0], IterationClaim::Exactly(len - 1)),
        FamilySpec::Cycle(len) => (vec![0, 1], IterationClaim::Exactly(ceil_div(len - 2, 2))),
        FamilySpec::Complete(size) if size >= 2 => {
            ((0..size - 1).collect(), IterationClaim::Exactly(1))
        }
        FamilySpec::CompleteBipartite(p, q) if p >= 2 && q >= 2 => {
            // Omit one vertex from each part.
            let ids = (1..p).chain(p + 1..p + q).collect();
            (ids, IterationClaim::Exactly(1))
        }
        FamilySpec::CompleteBipartite(1, q) if q >= 2 => {
            // All leaves but the last; the center is forced, then forces.
            ((1..q).collect(), IterationClaim::Exactly(2))
        }
        FamilySpec::CompleteBipartite(p, 1) if p >= 2 => {
            ((0..p - 1).collect(), IterationClaim::Exactly(2))
        }
        // First column; every row then walks rightward.
        FamilySpec::Grid(s, t) | FamilySpec::CompleteXPath(s, t) => (
            (0..s).map(|i| i * t).collect(),
            IterationClaim::Exactly(t - 1),
        ),
        FamilySpec::CycleXPath(s, t) if s < 2 * t => (
            (0..s).map(|i| i * t).collect(),
            IterationClaim::Exactly(t - 1),
        ),
        // First and last row (adjacent on the cycle); forcing meets in the
        // middle.
        FamilySpec::CycleXPath(s, t) /* s >= 2t */ | FamilySpec::CycleXComplete(s, t)
            if s >= 4 =>
        {
            let ids = (0..t).chain((s - 1) * t..s * t).collect();
            (ids, IterationClaim::Exactly(ceil_div(s - 2, 2)))
        }
        // All columns but the last, minus row 1, plus the corner (1,1):
        // column 1 forces the last column, the last row forces row 1.
        FamilySpec::CompleteXComplete(s, t) if s >= 3 && t >= 3 => {
            let mut ids = vec![0];
            for i in 1..s {
                for j in 0..t - 1 {
                    ids.push(i * t + j);
                }
            }
            (ids, IterationClaim::Exactly(2))
        }
        // Two adjacent rows minus the middle vertex of the first; two full
        // adjacent column cycles are black after (s-1)/2 rounds.
        FamilySpec::CycleXCycle(s, t) if s == t && s % 2 == 1 => {
            let skip = s.div_ceil(2) - 1; // 0-based column of the removed vertex
            let ids = (0..t)
                .filter(|&j| j != skip)
                .chain(t..2 * t)
                .collect();
            (ids, IterationClaim::Unspecified)
        }
        // Two adjacent copies of the smaller factor.
        FamilySpec::CycleXCycle(s, t) => {
            let ids = if s <= t {
                (0..s).flat_map(|i| [i * t, i * t + 1]).collect()
            } else {
                (0..2 * t).collect()
            };
            (ids, IterationClaim::Unspecified)
        }
        // First column plus first row; forcing sweeps down the diagonal.
        FamilySpec::KingGrid(s, t) if s != 3 => {
            let ids = (0..t).chain((1..s).map(|i| i * t)).collect();
            (ids, IterationClaim::AtMost(s + t - 3))
        }
        // Middle row plus the two remaining first-column vertices.
        FamilySpec::KingGrid(3, t) => {
            let ids = (t..2 * t).chain([0, 2 * t]).collect();
            (ids, IterationClaim::AtMost(t - 1))
        }
        // First column; each column forces the next within two rounds.
        FamilySpec::TriangularGrid(s, t) if t >= s => (
            (0..s).map(|i| i * t).collect(),
            IterationClaim::AtMost(2 * t + s - 4),
        ),
        // Cut-vertex plus the first vertex of every circle.
        FamilySpec::Bouquet(ref ks) if ks.len() >= 2 => {
            let len = ks.len();
            let mut ids = vec![0];
            let mut start = 1;
            for &k in ks {
                ids.push(start);
                start += k;
            }
            let claim = IterationClaim::Exactly(ceil_div(ks[len - 1] + ks[len - 2], 2) - 1);
            (ids, claim)
        }
        FamilySpec::Bouquet(ref ks) if ks.len() == 1 => {
            // A single circle is a cycle; the cut-vertex and its successor
            // are an adjacent pair.
            (vec![0, 1], IterationClaim::Exactly(ceil_div(ks[0] - 1, 2)))
        }
        _ => {
            return Err(SolverError::NoConstruction {
                family: spec.to_string(),
            })
        }
    };

    let set = VertexSet::from_ids(n, ids);
    let trace = run_forcing(&g, &set);
    if !trace.success() {
        return Err(SolverError::ConstructionFailed(format!(
            "{spec}: the construction does not force"
        )));
    }
    let observed = trace.iterations();
    let ok = match claim {
        IterationClaim::Exactly(k) => observed == k,
        IterationClaim::AtMost(k) => observed <= k,
        IterationClaim::Unspecified => true,
    };
    if !ok {
        return Err(SolverError::ConstructionFailed(format!(
            "{spec}: observed {observed} iterations, claimed {claim:?}"
        )));
    }
    Ok(ProofWitness {
        set,
        claim,
        observed_iterations: observed,
    })
}
