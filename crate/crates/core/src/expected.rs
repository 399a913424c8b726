//! Known closed-form values for Z and I per family.
//!
//! Each entry covers exactly the parameter range for which the closed form
//! is established; outside that range there is no value, not a guess. For
//! the triangular and king grids only an upper bound on I is known.

use serde::Serialize;

use crate::family::FamilySpec;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// What is known about the iteration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IterExpectation {
    Exact(usize),
    AtMost(usize),
}

impl IterExpectation {
    /// Whether a computed iteration index is consistent with the expectation.
    pub fn admits(&self, i: usize) -> bool {
        match *self {
            IterExpectation::Exact(v) => i == v,
            IterExpectation::AtMost(v) => i <= v,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            IterExpectation::Exact(v) => Some(v),
            IterExpectation::AtMost(_) => None,
        }
    }

    pub fn bound(&self) -> usize {
        match *self {
            IterExpectation::Exact(v) | IterExpectation::AtMost(v) => v,
        }
    }
}

impl std::fmt::Display for IterExpectation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            IterExpectation::Exact(v) => write!(f, "{v}"),
            IterExpectation::AtMost(v) => write!(f, "<={v}"),
        }
    }
}

/// Closed-form Z and I (or I bound) for one family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedInvariants {
    pub z: usize,
    pub iter: IterExpectation,
    /// The formula the values come from.
    pub source: &'static str,
}

/// Returns the closed-form expectations for `spec`, or `None` when no
/// formula covers these parameters.
pub fn expected_invariants(spec: &FamilySpec) -> Option<ExpectedInvariants> {
    use IterExpectation::{AtMost, Exact};
    let entry = |z, iter, source| Some(ExpectedInvariants { z, iter, source });
    match *spec {
        FamilySpec::Path(n) if n >= 2 => entry(1, Exact(n - 1), "Z=1, I=n-1"),
        FamilySpec::Cycle(n) if n >= 3 => {
            entry(2, Exact(ceil_div(n - 2, 2)), "Z=2, I=ceil((n-2)/2)")
        }
        FamilySpec::Complete(n) if n >= 2 => entry(n - 1, Exact(1), "Z=n-1, I=1"),
        FamilySpec::CompleteBipartite(p, q) if p >= 2 && q >= 2 => {
            entry(p + q - 2, Exact(1), "Z=p+q-2, I=1")
        }
        FamilySpec::CompleteBipartite(p, q) if (p == 1 && q >= 2) || (q == 1 && p >= 2) => {
            entry(p + q - 2, Exact(2), "Z=q-1, I=2 (star)")
        }
        FamilySpec::Grid(s, t) if s >= 2 && t >= 2 => {
            entry(s.min(t), Exact(s.max(t) - 1), "Z=min(s,t), I=max(s,t)-1")
        }
        FamilySpec::CycleXPath(s, t) if s >= 3 && t >= 2 => {
            let iter = if s >= 2 * t {
                Exact(ceil_div(s - 2, 2))
            } else {
                Exact(t - 1)
            };
            entry(
                s.min(2 * t),
                iter,
                "Z=min(s,2t), I=ceil((s-2)/2) if s>=2t else t-1",
            )
        }
        FamilySpec::CompleteXPath(s, t) if s >= 2 && t >= 2 => entry(s, Exact(t - 1), "Z=s, I=t-1"),
        FamilySpec::CompleteXComplete(s, t) if s >= 2 && t >= 2 => {
            let iter = if s.min(t) == 2 { Exact(1) } else { Exact(2) };
            entry(
                s * t - s - t + 2,
                iter,
                "Z=st-s-t+2, I=2 (1 when a factor is K_2)",
            )
        }
        FamilySpec::CycleXComplete(s, t) if s >= 4 && t >= 2 => {
            entry(2 * t, Exact(ceil_div(s - 2, 2)), "Z=2t, I=ceil((s-2)/2)")
        }
        FamilySpec::CycleXComplete(3, t) if t >= 2 => {
            let iter = if t == 2 { Exact(1) } else { Exact(2) };
            entry(2 * t - 1, iter, "Z=2t-1, I=2 (1 when t=2)")
        }
        // Only three cycle-times-cycle instances have established values;
        // the rest is the subject of the conjecture sweep.
        FamilySpec::CycleXCycle(3, 3) => entry(5, Exact(2), "Z=5, I=2"),
        FamilySpec::CycleXCycle(3, 4) | FamilySpec::CycleXCycle(4, 3) => {
            entry(6, Exact(1), "Z=6, I=1")
        }
        FamilySpec::CycleXCycle(4, 4) => entry(8, Exact(1), "Z=8, I=1"),
        FamilySpec::TriangularGrid(s, t) if t >= s && s >= 2 => {
            entry(s, AtMost(2 * t + s - 4), "Z=s, I<=2t+s-4")
        }
        FamilySpec::KingGrid(3, t) if t >= 2 => entry(t + 2, AtMost(t - 1), "Z=s+t-1, I<=t-1"),
        FamilySpec::KingGrid(s, t) if s >= 2 && t >= 2 => {
            entry(s + t - 1, AtMost(s + t - 3), "Z=s+t-1, I<=s+t-3")
        }
        FamilySpec::Bouquet(ref ks) if ks.len() >= 2 => {
            let n = ks.len();
            entry(
                n + 1,
                Exact(ceil_div(ks[n - 1] + ks[n - 2], 2) - 1),
                "Z=n+1, I=ceil((k_n+k_{n-1})/2)-1",
            )
        }
        FamilySpec::Bouquet(ref ks) if ks.len() == 1 => {
            // One circle is the cycle on k_1 + 1 vertices.
            let c = ks[0] + 1;
            entry(2, Exact(ceil_div(c - 2, 2)), "Z=2, I=ceil((n-2)/2) (cycle)")
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_path_split_covers_both_branches() {
        // s >= 2t: wrap-around seeding wins.
        let wide = expected_invariants(&FamilySpec::CycleXPath(6, 2)).unwrap();
        assert_eq!(wide.z, 4);
        assert_eq!(wide.iter, IterExpectation::Exact(2));
        // s < 2t: column seeding wins.
        let tall = expected_invariants(&FamilySpec::CycleXPath(4, 3)).unwrap();
        assert_eq!(tall.z, 4);
        assert_eq!(tall.iter, IterExpectation::Exact(2));
    }

    #[test]
    fn product_of_completes() {
        let e = expected_invariants(&FamilySpec::CompleteXComplete(3, 4)).unwrap();
        assert_eq!(e.z, 7);
        assert_eq!(e.iter, IterExpectation::Exact(2));
        let small = expected_invariants(&FamilySpec::CompleteXComplete(2, 2)).unwrap();
        assert_eq!(small.z, 2);
        assert_eq!(small.iter, IterExpectation::Exact(1));
    }

    #[test]
    fn bouquets() {
        let b = expected_invariants(&FamilySpec::Bouquet(vec![2, 2])).unwrap();
        assert_eq!(b.z, 3);
        assert_eq!(b.iter, IterExpectation::Exact(1));
        let single = expected_invariants(&FamilySpec::Bouquet(vec![4])).unwrap();
        assert_eq!(single.z, 2);
        assert_eq!(single.iter, IterExpectation::Exact(2));
    }

    #[test]
    fn out_of_range_has_no_value() {
        assert_eq!(
            expected_invariants(&FamilySpec::CompleteBipartite(1, 1)),
            None
        );
        assert_eq!(expected_invariants(&FamilySpec::Complete(1)), None);
        assert_eq!(expected_invariants(&FamilySpec::CycleXCycle(5, 5)), None);
        // Triangular grids are only covered for t >= s.
        assert_eq!(expected_invariants(&FamilySpec::TriangularGrid(5, 3)), None);
    }

    #[test]
    fn king_grid_small_rows_get_the_sharper_bound() {
        let e = expected_invariants(&FamilySpec::KingGrid(3, 6)).unwrap();
        assert_eq!(e.z, 8);
        assert_eq!(e.iter, IterExpectation::AtMost(5));
        let general = expected_invariants(&FamilySpec::KingGrid(4, 4)).unwrap();
        assert_eq!(general.iter, IterExpectation::AtMost(5));
    }
}
