//! Exact computation of the zero forcing number and iteration index by
//! subset enumeration.
//!
//! Candidate sets of size `k` are enumerated in ascending numeric order of
//! their bitmasks, for `k` from the minimum degree upward; the first size
//! with a forcing set is the zero forcing number. The enumeration is
//! partitioned into buckets by the highest vertex of the candidate set
//! (bucket order is mask order), so workers can process buckets in parallel
//! while results stay independent of the worker count and schedule.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::bits::{BitBlock, Block256, Combinations, Kernel};
use crate::error::SolverError;
use crate::graph::Graph;
use crate::vertexset::VertexSet;

/// Tunables for the exact searches.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Maximum number of closure evaluations a single request may plan.
    /// Sizes are charged up front at their worst case `C(n, k)`.
    pub budget: u64,
    /// Worker threads for the subset scan. Results are identical for every
    /// worker count.
    pub workers: usize,
    /// Largest vertex count for the exact path-cover search.
    pub path_cover_limit: usize,
    /// Cap on enumerated chronological lists.
    pub list_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: 1 << 31,
            workers: 1,
            path_cover_limit: 16,
            list_cap: 1_000_000,
        }
    }
}

/// Exact invariants of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Zero forcing number.
    pub z: usize,
    /// Minimum forcing set with the numerically least bitmask.
    pub zfs_witness: VertexSet,
    /// Number of minimum forcing sets (saturating).
    pub num_min_zfs: u64,
    /// Iteration index: minimum over minimum forcing sets of the number of
    /// global color-change rounds.
    pub i: usize,
    /// Minimum forcing set achieving the iteration index, ties broken by
    /// ascending bitmask.
    pub ii_witness: VertexSet,
}

/// `C(n, k)` saturating at `u64::MAX`.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Deterministic up-front accounting of planned closure evaluations.
pub(crate) struct BudgetTracker {
    budget: u64,
    planned: u64,
}

impl BudgetTracker {
    pub fn new(budget: u64) -> Self {
        BudgetTracker { budget, planned: 0 }
    }

    /// Charges the worst case of the next enumeration; `ruled_out` is the
    /// largest set size already known impossible when the refusal fires.
    pub fn charge(&mut self, cost: u64, ruled_out: usize) -> Result<(), SolverError> {
        let total = self.planned.saturating_add(cost);
        if total > self.budget {
            return Err(SolverError::BudgetExceeded {
                planned: total,
                budget: self.budget,
                exhausted: ruled_out,
            });
        }
        self.planned = total;
        Ok(())
    }
}

fn build_kernel<B: BitBlock>(g: &Graph) -> Kernel<B> {
    let adj = (0..g.vertex_count())
        .map(|v| B::from_words(g.neighbors(v).words()))
        .collect();
    Kernel::new(adj)
}

fn to_vset<B: BitBlock>(n: usize, mask: B) -> VertexSet {
    VertexSet::from_words(n, mask.to_words())
}

/// Hands buckets `0..num` to `workers` threads and returns the per-bucket
/// results in bucket order. `process` receives the shared
/// lowest-successful-bucket cell so early-exit scans can skip and abort
/// buckets that can no longer win.
fn run_buckets<R: Send>(
    num: usize,
    workers: usize,
    process: impl Fn(usize, &AtomicUsize) -> Option<R> + Sync,
) -> Vec<Option<R>> {
    let found = AtomicUsize::new(usize::MAX);
    if workers <= 1 || num <= 1 {
        return (0..num).map(|i| process(i, &found)).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Vec<Mutex<Option<R>>> = (0..num).map(|_| Mutex::new(None)).collect();
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= num {
                    break;
                }
                let r = process(i, &found);
                *results[i].lock().unwrap() = r;
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap())
        .collect()
}

/// Aggregates over all size-`k` candidates of one scan.
#[derive(Debug)]
struct SizeScan<B> {
    count: u64,
    first: Option<B>,
    /// Fewest global rounds among forcing sets, with the first mask
    /// achieving it.
    best: Option<(usize, B)>,
}

impl<B> Default for SizeScan<B> {
    fn default() -> Self {
        SizeScan {
            count: 0,
            first: None,
            best: None,
        }
    }
}

impl<B: BitBlock> SizeScan<B> {
    fn observe(&mut self, kernel: &Kernel<B>, mask: B) {
        if kernel.is_zfs(mask) {
            self.count += 1;
            if self.first.is_none() {
                self.first = Some(mask);
            }
            let (rounds, success, _) = kernel.rounds(mask);
            debug_assert!(success);
            match self.best {
                Some((best, _)) if best <= rounds => {}
                _ => self.best = Some((rounds, mask)),
            }
        }
    }

    fn absorb(&mut self, later: SizeScan<B>) {
        self.count += later.count;
        if self.first.is_none() {
            self.first = later.first;
        }
        if let Some((rounds, mask)) = later.best {
            match self.best {
                Some((best, _)) if best <= rounds => {}
                _ => self.best = Some((rounds, mask)),
            }
        }
    }
}

/// Full scan of all size-`k` subsets: count, first witness, and the
/// fewest-rounds witness.
fn scan_size_full<B: BitBlock>(kernel: &Kernel<B>, n: u32, k: u32, workers: usize) -> SizeScan<B> {
    if k == 0 {
        let mut out = SizeScan::default();
        out.observe(kernel, B::zero());
        return out;
    }
    let buckets: Vec<u32> = (k - 1..n).collect();
    let partials = run_buckets(buckets.len(), workers, |idx, _| {
        let v = buckets[idx];
        let high = B::bit(v);
        let mut out = SizeScan::default();
        for sub in Combinations::<B>::new(v, k - 1) {
            out.observe(kernel, sub.or(high));
        }
        Some(out)
    });
    let mut total = SizeScan::default();
    for partial in partials.into_iter().flatten() {
        total.absorb(partial);
    }
    total
}

/// First (numerically least) forcing set of size `k`, if any.
fn scan_size_first<B: BitBlock>(kernel: &Kernel<B>, n: u32, k: u32, workers: usize) -> Option<B> {
    if k == 0 {
        return kernel.is_zfs(B::zero()).then(B::zero);
    }
    let buckets: Vec<u32> = (k - 1..n).collect();
    let results = run_buckets(buckets.len(), workers, |idx, found| {
        if idx > found.load(Ordering::Relaxed) {
            return None;
        }
        let v = buckets[idx];
        let high = B::bit(v);
        for (seen, sub) in Combinations::<B>::new(v, k - 1).enumerate() {
            let mask = sub.or(high);
            if kernel.is_zfs(mask) {
                found.fetch_min(idx, Ordering::Relaxed);
                return Some(mask);
            }
            if seen & 0xFFF == 0xFFF && idx > found.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    });
    results.into_iter().flatten().next()
}

/// All forcing sets of size `k` with their round counts, ascending by mask.
fn scan_size_collect<B: BitBlock>(
    kernel: &Kernel<B>,
    n: u32,
    k: u32,
    workers: usize,
) -> Vec<(B, usize)> {
    if k == 0 {
        return if kernel.is_zfs(B::zero()) {
            vec![(B::zero(), 0)]
        } else {
            Vec::new()
        };
    }
    let buckets: Vec<u32> = (k - 1..n).collect();
    let partials = run_buckets(buckets.len(), workers, |idx, _| {
        let v = buckets[idx];
        let high = B::bit(v);
        let mut out = Vec::new();
        for sub in Combinations::<B>::new(v, k - 1) {
            let mask = sub.or(high);
            if kernel.is_zfs(mask) {
                out.push((mask, kernel.rounds(mask).0));
            }
        }
        Some(out)
    });
    partials.into_iter().flatten().flatten().collect()
}

fn solve_connected(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<Solution, SolverError> {
    if g.vertex_count() <= 64 {
        solve_connected_impl::<u64>(g, cfg, tracker)
    } else {
        solve_connected_impl::<Block256>(g, cfg, tracker)
    }
}

fn solve_connected_impl<B: BitBlock>(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<Solution, SolverError> {
    let n = g.vertex_count() as u32;
    let kernel = build_kernel::<B>(g);
    for k in g.min_degree() as u32..=n {
        tracker.charge(binomial(n as u64, k as u64), k.saturating_sub(1) as usize)?;
        let scan = scan_size_full(&kernel, n, k, cfg.workers);
        if scan.count > 0 {
            let (rounds, ii_mask) = scan.best.expect("successes imply a best");
            return Ok(Solution {
                z: k as usize,
                zfs_witness: to_vset(g.vertex_count(), scan.first.expect("count > 0")),
                num_min_zfs: scan.count,
                i: rounds,
                ii_witness: to_vset(g.vertex_count(), ii_mask),
            });
        }
    }
    unreachable!("the full vertex set is always a forcing set")
}

/// Minimum forcing sets of a connected graph with their round counts,
/// ascending by mask.
fn collect_connected(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<Vec<(VertexSet, usize)>, SolverError> {
    fn imp<B: BitBlock>(
        g: &Graph,
        cfg: &SolverConfig,
        tracker: &mut BudgetTracker,
    ) -> Result<Vec<(VertexSet, usize)>, SolverError> {
        let n = g.vertex_count() as u32;
        let kernel = build_kernel::<B>(g);
        for k in g.min_degree() as u32..=n {
            tracker.charge(binomial(n as u64, k as u64), k.saturating_sub(1) as usize)?;
            let sets = scan_size_collect(&kernel, n, k, cfg.workers);
            if !sets.is_empty() {
                return Ok(sets
                    .into_iter()
                    .map(|(m, r)| (to_vset(g.vertex_count(), m), r))
                    .collect());
            }
        }
        unreachable!("the full vertex set is always a forcing set")
    }
    if g.vertex_count() <= 64 {
        imp::<u64>(g, cfg, tracker)
    } else {
        imp::<Block256>(g, cfg, tracker)
    }
}

fn zfn_connected(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<(usize, VertexSet), SolverError> {
    fn imp<B: BitBlock>(
        g: &Graph,
        cfg: &SolverConfig,
        tracker: &mut BudgetTracker,
    ) -> Result<(usize, VertexSet), SolverError> {
        let n = g.vertex_count() as u32;
        let kernel = build_kernel::<B>(g);
        for k in g.min_degree() as u32..=n {
            tracker.charge(binomial(n as u64, k as u64), k.saturating_sub(1) as usize)?;
            if let Some(mask) = scan_size_first(&kernel, n, k, cfg.workers) {
                return Ok((k as usize, to_vset(g.vertex_count(), mask)));
            }
        }
        unreachable!("the full vertex set is always a forcing set")
    }
    if g.vertex_count() <= 64 {
        imp::<u64>(g, cfg, tracker)
    } else {
        imp::<Block256>(g, cfg, tracker)
    }
}

fn lift(n: usize, ids: &[usize], local: &VertexSet) -> VertexSet {
    VertexSet::from_ids(n, local.iter().map(|i| ids[i]))
}

/// Zero forcing number with a minimum witness (numerically least bitmask).
/// The search runs sizes from the minimum degree upward and stops at the
/// first witness.
pub fn zero_forcing_number(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<(usize, VertexSet), SolverError> {
    let mut tracker = BudgetTracker::new(cfg.budget);
    zfn_tracked(g, cfg, &mut tracker)
}

pub(crate) fn zfn_tracked(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<(usize, VertexSet), SolverError> {
    let comps = g.components();
    if comps.len() <= 1 {
        return zfn_connected(g, cfg, tracker);
    }
    // Forcing never crosses components, so Z sums and witnesses combine
    // bitwise over disjoint supports.
    let n = g.vertex_count();
    let mut z = 0;
    let mut witness = VertexSet::empty(n);
    for ids in &comps {
        let (sub, _) = g.induced(ids);
        let (zc, wc) = zfn_connected(&sub, cfg, tracker)?;
        z += zc;
        witness = witness.union(&lift(n, ids, &wc));
    }
    Ok((z, witness))
}

/// Computes Z, the number of minimum forcing sets, the iteration index, and
/// both witnesses in one pass.
///
/// Disconnected graphs are solved per component: Z sums, the iteration index
/// is the maximum over components (global rounds run components in
/// parallel), and witnesses are the componentwise least choices, which are
/// also the global numerically least ones.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Result<Solution, SolverError> {
    let mut tracker = BudgetTracker::new(cfg.budget);
    solve_tracked(g, cfg, &mut tracker)
}

pub(crate) fn solve_tracked(
    g: &Graph,
    cfg: &SolverConfig,
    tracker: &mut BudgetTracker,
) -> Result<Solution, SolverError> {
    let comps = g.components();
    if comps.len() <= 1 {
        return solve_connected(g, cfg, tracker);
    }
    let n = g.vertex_count();
    let mut per_comp = Vec::with_capacity(comps.len());
    for ids in &comps {
        let (sub, _) = g.induced(ids);
        let sets = collect_connected(&sub, cfg, tracker)?;
        per_comp.push((ids, sets));
    }
    let i = per_comp
        .iter()
        .map(|(_, sets)| sets.iter().map(|&(_, r)| r).min().expect("nonempty"))
        .max()
        .expect("at least two components");
    let mut z = 0;
    let mut num: u64 = 1;
    let mut zfs_witness = VertexSet::empty(n);
    let mut ii_witness = VertexSet::empty(n);
    for (ids, sets) in &per_comp {
        z += sets[0].0.len();
        num = num.saturating_mul(sets.len() as u64);
        zfs_witness = zfs_witness.union(&lift(n, ids, &sets[0].0));
        // Any componentwise choice with at most `i` rounds yields a global
        // witness achieving `i`; the first such choice is the least mask.
        let pick = sets
            .iter()
            .find(|&&(_, r)| r <= i)
            .expect("component minimum is at most the overall maximum");
        ii_witness = ii_witness.union(&lift(n, ids, &pick.0));
    }
    Ok(Solution {
        z,
        zfs_witness,
        num_min_zfs: num,
        i,
        ii_witness,
    })
}

/// All minimum forcing sets in ascending bitmask order.
pub fn all_minimum_zfs(g: &Graph, cfg: &SolverConfig) -> Result<Vec<VertexSet>, SolverError> {
    let mut tracker = BudgetTracker::new(cfg.budget);
    let comps = g.components();
    if comps.len() <= 1 {
        return Ok(collect_connected(g, cfg, &mut tracker)?
            .into_iter()
            .map(|(s, _)| s)
            .collect());
    }
    let n = g.vertex_count();
    let mut per_comp = Vec::with_capacity(comps.len());
    let mut z = 0;
    let mut product: u64 = 1;
    for ids in &comps {
        let (sub, _) = g.induced(ids);
        let sets = collect_connected(&sub, cfg, &mut tracker)?;
        z += sets[0].0.len();
        product = product.saturating_mul(sets.len() as u64);
        per_comp.push((ids, sets));
    }
    // The combinations are materialized; guard the cross product like any
    // other enumeration.
    tracker.charge(product, z.saturating_sub(1))?;
    let mut combos = vec![VertexSet::empty(n)];
    for (ids, sets) in &per_comp {
        combos = combos
            .iter()
            .flat_map(|base| sets.iter().map(|(s, _)| base.union(&lift(n, ids, s))))
            .collect();
    }
    combos.sort();
    Ok(combos)
}

/// Iteration index with its witness (ties broken by ascending bitmask).
pub fn iteration_index(g: &Graph, cfg: &SolverConfig) -> Result<(usize, VertexSet), SolverError> {
    solve(g, cfg).map(|s| (s.i, s.ii_witness))
}
