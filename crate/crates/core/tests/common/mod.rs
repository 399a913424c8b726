//! Shared test support: an independent brute-force oracle, fixture graphs,
//! and the randomized property-suite driver.
//!
//! The oracle works on plain adjacency lists and boolean arrays with its own
//! subset enumeration, deliberately sharing no code with the bitset engine.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeroforcing::bounds::check_bounds;
use zeroforcing::chains::{enumerate_chronological_lists, llfc, reversal};
use zeroforcing::family::{build_family, FamilySpec};
use zeroforcing::forcing::{color_change_step, is_zero_forcing_set, run_forcing};
use zeroforcing::graph::{cartesian_product, Graph};
use zeroforcing::pathcover::path_cover_number;
use zeroforcing::solver::{solve, SolverConfig};
use zeroforcing::substitution::generic_kernel_rounds;
use zeroforcing::vertexset::VertexSet;

/// Brute-force reference implementation on adjacency lists.
pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

impl Naive {
    pub fn from_graph(g: &Graph) -> Naive {
        Naive {
            n: g.vertex_count(),
            adj: (0..g.vertex_count())
                .map(|v| g.neighbors(v).ids())
                .collect(),
        }
    }

    pub fn step(&self, black: &[bool]) -> Vec<bool> {
        let mut next = black.to_vec();
        for u in 0..self.n {
            if !black[u] {
                continue;
            }
            let whites: Vec<usize> = self.adj[u].iter().copied().filter(|&w| !black[w]).collect();
            if let [w] = whites[..] {
                next[w] = true;
            }
        }
        next
    }

    pub fn closure(&self, start: &[bool]) -> Vec<bool> {
        let mut black = start.to_vec();
        loop {
            let next = self.step(&black);
            if next == black {
                return black;
            }
            black = next;
        }
    }

    /// `(iterations, success)` of the global dynamics.
    pub fn iterations(&self, start: &[bool]) -> (usize, bool) {
        let mut black = start.to_vec();
        let mut rounds = 0;
        loop {
            let next = self.step(&black);
            if next == black {
                break;
            }
            black = next;
            rounds += 1;
        }
        (rounds, black.iter().all(|&b| b))
    }

    pub fn is_zfs(&self, ids: &[usize]) -> bool {
        let mut black = vec![false; self.n];
        for &v in ids {
            black[v] = true;
        }
        self.closure(&black).iter().all(|&b| b)
    }

    /// Visits all k-subsets of `0..n` in colexicographic order (ascending
    /// numeric masks); stops early when the visitor returns false.
    fn for_each_subset(&self, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        fn rec(
            n: usize,
            k: usize,
            chosen: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            if chosen.len() == k {
                return visit(chosen);
            }
            // Colex: the largest remaining element varies outermost.
            let remaining = k - chosen.len();
            let upper = chosen.last().map_or(n, |&top| top);
            for top in (remaining - 1)..upper {
                chosen.push(top);
                if !rec(n, k, chosen, visit) {
                    chosen.pop();
                    return false;
                }
                chosen.pop();
            }
            true
        }
        // The recursion above picks elements from largest to smallest.
        let mut chosen = Vec::with_capacity(k);
        rec(self.n, k, &mut chosen, &mut |ids_desc| {
            let mut asc = ids_desc.to_vec();
            asc.reverse();
            visit(&asc)
        })
    }

    /// `(Z, first witness in ascending mask order)`.
    pub fn zero_forcing_number(&self) -> (usize, Vec<usize>) {
        for k in 0..=self.n {
            let mut found: Option<Vec<usize>> = None;
            self.for_each_subset(k, &mut |ids| {
                if self.is_zfs(ids) {
                    found = Some(ids.to_vec());
                    false
                } else {
                    true
                }
            });
            if let Some(w) = found {
                return (k, w);
            }
        }
        unreachable!("the whole vertex set forces");
    }

    pub fn all_min_zfs(&self) -> Vec<Vec<usize>> {
        let (z, _) = self.zero_forcing_number();
        let mut out = Vec::new();
        self.for_each_subset(z, &mut |ids| {
            if self.is_zfs(ids) {
                out.push(ids.to_vec());
            }
            true
        });
        out
    }

    /// Iteration index: min over minimum sets, with the first witness.
    pub fn iteration_index(&self) -> (usize, Vec<usize>) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for ids in self.all_min_zfs() {
            let mut black = vec![false; self.n];
            for &v in &ids {
                black[v] = true;
            }
            let (rounds, ok) = self.iterations(&black);
            assert!(ok);
            if best.as_ref().is_none_or(|(b, _)| rounds < *b) {
                best = Some((rounds, ids));
            }
        }
        best.expect("every graph has a minimum forcing set")
    }
}

pub fn vset(g: &Graph, ids: &[usize]) -> VertexSet {
    VertexSet::from_ids(g.vertex_count(), ids.iter().copied())
}

/// The star `K_{1,m}` whose center is joined to one end of `P_n`:
/// center 0, star leaves `1..=m`, path vertices `m+1..=m+n`.
pub fn star_path(m: usize, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|leaf| (0, leaf)).collect();
    edges.push((0, m + 1));
    for i in 1..n {
        edges.push((m + i, m + i + 1));
    }
    Graph::from_edges(m + n + 1, &edges).unwrap()
}

/// Named fixtures with at most `max_n` vertices.
pub fn fixtures_upto(max_n: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push_spec = |spec: FamilySpec| {
        let g = build_family(&spec).unwrap();
        out.push((spec.to_string(), g));
    };
    for n in 2..=6 {
        push_spec(FamilySpec::Path(n));
    }
    for n in 3..=6 {
        push_spec(FamilySpec::Cycle(n));
    }
    for n in 2..=5 {
        push_spec(FamilySpec::Complete(n));
    }
    push_spec(FamilySpec::CompleteBipartite(1, 3));
    push_spec(FamilySpec::CompleteBipartite(2, 3));
    push_spec(FamilySpec::CompleteBipartite(3, 3));
    push_spec(FamilySpec::Grid(2, 3));
    push_spec(FamilySpec::Grid(3, 3));
    push_spec(FamilySpec::Grid(2, 4));
    push_spec(FamilySpec::TriangularGrid(2, 3));
    push_spec(FamilySpec::TriangularGrid(3, 3));
    push_spec(FamilySpec::KingGrid(2, 3));
    push_spec(FamilySpec::KingGrid(3, 3));
    push_spec(FamilySpec::CycleXComplete(3, 2));
    push_spec(FamilySpec::CycleXPath(4, 3));
    push_spec(FamilySpec::CycleXPath(5, 2));
    push_spec(FamilySpec::CompleteXPath(3, 2));
    push_spec(FamilySpec::CompleteXComplete(3, 3));
    push_spec(FamilySpec::CycleXCycle(3, 3));
    push_spec(FamilySpec::Bouquet(vec![2, 2]));
    push_spec(FamilySpec::Bouquet(vec![2, 3]));
    push_spec(FamilySpec::Bouquet(vec![2, 2, 2]));
    out.push(("star_path(3,4)".into(), star_path(3, 4)));
    out.push(("star_path(2,3)".into(), star_path(2, 3)));
    out.push((
        "path3+cycle4".into(),
        Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap(),
    ));
    out.retain(|(_, g)| g.vertex_count() <= max_n);
    out
}

fn random_subset(rng: &mut ChaCha8Rng, g: &Graph) -> VertexSet {
    let p = rng.random_range(0.15..0.65);
    let mut s = VertexSet::empty(g.vertex_count());
    for v in 0..g.vertex_count() {
        if rng.random_bool(p) {
            s.insert(v);
        }
    }
    s
}

/// Applies single forces in a random order until none is possible;
/// returns the final black set.
fn random_sequential_closure(rng: &mut ChaCha8Rng, g: &Graph, start: &VertexSet) -> VertexSet {
    let naive = Naive::from_graph(g);
    let mut black = vec![false; g.vertex_count()];
    for v in start.iter() {
        black[v] = true;
    }
    loop {
        let mut moves: Vec<usize> = Vec::new();
        for u in 0..naive.n {
            if !black[u] {
                continue;
            }
            let whites: Vec<usize> = naive.adj[u]
                .iter()
                .copied()
                .filter(|&w| !black[w])
                .collect();
            if let [w] = whites[..] {
                moves.push(w);
            }
        }
        moves.sort_unstable();
        moves.dedup();
        if moves.is_empty() {
            break;
        }
        let w = moves[rng.random_range(0..moves.len())];
        black[w] = true;
    }
    VertexSet::from_ids(
        g.vertex_count(),
        (0..g.vertex_count()).filter(|&v| black[v]),
    )
}

fn check_forcing_set_properties(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    z: &VertexSet,
    failures: &mut Vec<String>,
    name: &str,
) {
    let trace = run_forcing(g, z);
    assert!(trace.success());
    // Supersets of a forcing set force.
    let mut superset = *z;
    for v in 0..g.vertex_count() {
        if rng.random_bool(0.3) {
            superset.insert(v);
        }
    }
    if !is_zero_forcing_set(g, &superset) {
        failures.push(format!("{name}: superset {superset} of {z} does not force"));
    }
    // Every reversal of an enumerated list forces.
    let lists = enumerate_chronological_lists(g, z, 60).expect("z forces");
    for list in &lists.lists {
        let rev = reversal(list);
        if rev.len() != z.len() {
            failures.push(format!(
                "{name}: reversal size {} != {}",
                rev.len(),
                z.len()
            ));
        }
        if !is_zero_forcing_set(g, &rev) {
            failures.push(format!("{name}: reversal {rev} of {z} does not force"));
        }
    }
    // Longest chains never exceed the iteration count.
    let stats = llfc(g, z).expect("z forces");
    if stats.max_longest > trace.iterations() {
        failures.push(format!(
            "{name}: llfc max {} exceeds iterations {}",
            stats.max_longest,
            trace.iterations()
        ));
    }
}

/// Seed-fixed randomized property suite over the fixtures. Returns failure
/// descriptions (empty = all properties hold).
pub fn run_property_suite(cases: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let fixtures = fixtures_upto(12);
    let cfg = SolverConfig::default();

    // Deterministic sweep: bounds on every fixture, one canonical minimum
    // set exercised per fixture.
    for (name, g) in &fixtures {
        let sol = solve(g, &cfg).expect("fixtures fit the default budget");
        let p = path_cover_number(g, 16).ok();
        if let Err(e) = check_bounds(g, &sol, p) {
            failures.push(format!("{name}: {e}"));
        }
        check_forcing_set_properties(&mut rng, g, &sol.zfs_witness, &mut failures, name);
    }

    // Randomized cases.
    for case in 0..cases {
        let (name, g) = &fixtures[case % fixtures.len()];
        let s = random_subset(&mut rng, g);
        let stepped = color_change_step(g, &s);
        if !s.is_subset_of(&stepped) {
            failures.push(format!("{name}: step is not monotone on {s}"));
        }
        let trace = run_forcing(g, &s);
        let fixpoint = trace.final_set();
        if color_change_step(g, fixpoint) != *fixpoint {
            failures.push(format!("{name}: fixpoint of {s} is not fixed"));
        }
        // Confluence: any maximal sequential order reaches the same set.
        let sequential = random_sequential_closure(&mut rng, g, &s);
        if sequential != *fixpoint {
            failures.push(format!(
                "{name}: sequential closure {sequential} != global {fixpoint} from {s}"
            ));
        }
        // Derived layers never exceed the seed size.
        for d in trace.derived() {
            if d.len() > s.len() {
                failures.push(format!("{name}: derived {d} larger than seed {s}"));
            }
        }
        // Substitution rounds agree with the dynamics.
        let sub = generic_kernel_rounds(g, &s);
        if (sub.rounds, sub.solved) != (trace.iterations(), trace.success()) {
            failures.push(format!(
                "{name}: substitution ({}, {}) != forcing ({}, {}) on {s}",
                sub.rounds,
                sub.solved,
                trace.iterations(),
                trace.success()
            ));
        }
        if trace.success() {
            check_forcing_set_properties(&mut rng, g, &s, &mut failures, name);
        }
    }
    failures
}

/// Product-bound data for Z(G x H) <= min(Z(G)|H|, Z(H)|G|).
pub fn product_bound_cases() -> Vec<(String, Graph, Graph)> {
    let specs: Vec<(FamilySpec, FamilySpec)> = vec![
        (FamilySpec::Path(2), FamilySpec::Path(3)),
        (FamilySpec::Path(3), FamilySpec::Path(3)),
        (FamilySpec::Cycle(3), FamilySpec::Complete(2)),
        (FamilySpec::Cycle(4), FamilySpec::Path(2)),
        (FamilySpec::Cycle(3), FamilySpec::Cycle(3)),
        (FamilySpec::Complete(3), FamilySpec::Path(3)),
        (FamilySpec::Complete(3), FamilySpec::Complete(3)),
        (FamilySpec::Cycle(5), FamilySpec::Path(2)),
    ];
    specs
        .into_iter()
        .map(|(a, b)| {
            let name = format!("{a} x {b}");
            (name, build_family(&a).unwrap(), build_family(&b).unwrap())
        })
        .collect()
}

/// Checks the product upper bound on all cases; returns failures.
pub fn check_product_bounds(cfg: &SolverConfig) -> Vec<String> {
    let mut failures = Vec::new();
    for (name, a, b) in product_bound_cases() {
        let prod = cartesian_product(&a, &b).unwrap();
        let za = solve(&a, cfg).unwrap().z;
        let zb = solve(&b, cfg).unwrap().z;
        let zp = solve(&prod, cfg).unwrap().z;
        let bound = (za * b.vertex_count()).min(zb * a.vertex_count());
        if zp > bound {
            failures.push(format!(
                "{name}: Z = {zp} exceeds the product bound {bound}"
            ));
        }
    }
    failures
}
