//! Exact search for an interval t-coloring of a connected multigraph.
//!
//! Two stages. Stage A assigns each vertex a window start s(v), so vertex v
//! will see exactly the colors s(v)..s(v)+d(v)-1. Interval arc consistency
//! propagates the per-edge overlap requirement (parallel edges need overlap
//! at least their multiplicity), and a counting rule prunes on color
//! coverage: in any interval t-coloring the number of vertex windows
//! containing a color is twice the number of edges carrying it, so it must
//! be even and at least 2 for every color. Stage B seeks a proper coloring
//! with every edge inside the overlap of its endpoint windows; each vertex
//! then uses each window color exactly once, and for connected graphs the
//! window union is a gap-free run, so hitting colors 1 and t makes the
//! coloring interval.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::coloring::{EdgeColoring, IntervalCertificate};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub(crate) struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub threads: usize,
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

struct Counters {
    nodes: AtomicU64,
    prunes: AtomicU64,
    budget: Option<u64>,
    /// Index of the least root branch known to succeed; larger branches abort.
    best_branch: AtomicUsize,
}

impl Counters {
    fn tick(&self, my_branch: usize) -> Result<bool> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if let Some(budget) = self.budget {
            if n >= budget {
                return Err(Error::NodeBudget { budget });
            }
        }
        Ok(self.best_branch.load(Ordering::Relaxed) >= my_branch)
    }

    fn prune(&self) {
        self.prunes.fetch_add(1, Ordering::Relaxed);
    }
}

enum Outcome {
    Found(Vec<u32>),
    Exhausted,
    Aborted,
}

/// Shared, immutable description of one (graph, t) problem.
struct Problem {
    n: usize,
    t: i64,
    deg: Vec<i64>,
    /// Distinct neighbor pairs as (neighbor, multiplicity) per vertex.
    nbrs: Vec<Vec<(usize, i64)>>,
    /// Edge endpoints for stage B.
    ends: Vec<(usize, usize)>,
    /// Incident edge indices per vertex.
    inc_edges: Vec<Vec<usize>>,
    /// Slots from v to u, counting parallels, for the branching heuristic.
    slot_nbrs: Vec<Vec<usize>>,
}

pub(crate) fn search(
    g: &Multigraph,
    t: u32,
    limits: &SearchLimits,
) -> Result<(Option<IntervalCertificate>, SearchStats)> {
    debug_assert!(g.is_connected());
    let counters = Counters {
        nodes: AtomicU64::new(0),
        prunes: AtomicU64::new(0),
        budget: limits.max_nodes,
        best_branch: AtomicUsize::new(usize::MAX),
    };
    let colors = run(g, t, limits, &counters)?;
    let stats = SearchStats {
        nodes: counters.nodes.load(Ordering::Relaxed),
        prunes: counters.prunes.load(Ordering::Relaxed),
    };
    let cert = colors.map(|cs| {
        let coloring = EdgeColoring::new(cs).expect("search colors start at 1");
        IntervalCertificate::assemble(g.clone(), coloring, t)
            .expect("search result is an interval coloring")
    });
    Ok((cert, stats))
}

fn run(g: &Multigraph, t: u32, limits: &SearchLimits, counters: &Counters) -> Result<Option<Vec<u32>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 || t == 0 {
        return Ok(None); // no edge can carry color 1
    }
    let t = t as i64;
    // A connected window union spans at most sum(d) - (n-1) colors.
    if t > 2 * m as i64 - n as i64 + 1 {
        return Ok(None);
    }
    if (0..n).any(|v| g.degree(v) as i64 > t) {
        return Ok(None);
    }

    let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
    let mut nbrs: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for v in 0..n {
        let mut counts: Vec<(usize, i64)> = Vec::new();
        for &(w, _) in g.incidences(v) {
            match counts.iter_mut().find(|(x, _)| *x == w) {
                Some((_, c)) => *c += 1,
                None => counts.push((w, 1)),
            }
        }
        nbrs[v] = counts;
    }
    let slot_nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| g.incidences(v).iter().map(|&(w, _)| w).collect())
        .collect();
    let inc_edges: Vec<Vec<usize>> = (0..n)
        .map(|v| g.incidences(v).iter().map(|&(_, e)| e).collect())
        .collect();
    let problem = Problem {
        n,
        t,
        deg,
        nbrs,
        ends: g.edges().to_vec(),
        inc_edges,
        slot_nbrs,
    };

    let init: Vec<(i64, i64)> = (0..n).map(|v| (1, t - problem.deg[v] + 1)).collect();

    // Root branch vertex: nothing is assigned yet, so the tie rule picks 0.
    let root = 0usize;
    let root_values: Vec<i64> = (init[root].0..=init[root].1).collect();

    let branch_count = root_values.len();
    let threads = limits.threads.max(1).min(branch_count.max(1));
    if threads <= 1 {
        for (i, &x) in root_values.iter().enumerate() {
            match explore_root(&problem, &init, root, x, i, counters)? {
                Outcome::Found(colors) => return Ok(Some(colors)),
                Outcome::Exhausted | Outcome::Aborted => {}
            }
        }
        return Ok(None);
    }

    let next = AtomicUsize::new(0);
    let results: Vec<Mutex<Option<Result<Outcome>>>> =
        (0..branch_count).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= branch_count {
                    break;
                }
                let outcome = explore_root(&problem, &init, root, root_values[i], i, counters);
                if let Ok(Outcome::Found(_)) = &outcome {
                    counters.best_branch.fetch_min(i, Ordering::Relaxed);
                }
                *results[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    for slot in results {
        match slot.into_inner().unwrap() {
            Some(Ok(Outcome::Found(colors))) => return Ok(Some(colors)),
            Some(Ok(_)) => {}
            Some(Err(e)) => return Err(e),
            None => {}
        }
    }
    Ok(None)
}

fn explore_root(
    problem: &Problem,
    init: &[(i64, i64)],
    root: usize,
    value: i64,
    branch: usize,
    counters: &Counters,
) -> Result<Outcome> {
    let mut doms = init.to_vec();
    let mut assigned = vec![false; problem.n];
    let mut to_assigned = vec![0usize; problem.n];
    let mut state = State {
        problem,
        counters,
        branch,
        doms: &mut doms,
        assigned: &mut assigned,
        to_assigned: &mut to_assigned,
    };
    state.assign(root, value)
}

struct State<'a> {
    problem: &'a Problem,
    counters: &'a Counters,
    branch: usize,
    doms: &'a mut Vec<(i64, i64)>,
    assigned: &'a mut Vec<bool>,
    to_assigned: &'a mut Vec<usize>,
}

impl State<'_> {
    /// Fixes s(v) = x, propagates, and recurses. The caller owns snapshots.
    fn assign(&mut self, v: usize, x: i64) -> Result<Outcome> {
        if !self.counters.tick(self.branch)? {
            return Ok(Outcome::Aborted);
        }
        let snapshot = self.doms.clone();
        self.doms[v] = (x, x);
        let feasible = self.propagate(v) && self.cover_check();
        let outcome = if feasible {
            self.assigned[v] = true;
            for &w in &self.problem.slot_nbrs[v] {
                self.to_assigned[w] += 1;
            }
            let out = self.descend();
            for &w in &self.problem.slot_nbrs[v] {
                self.to_assigned[w] -= 1;
            }
            self.assigned[v] = false;
            out
        } else {
            self.counters.prune();
            Ok(Outcome::Exhausted)
        };
        *self.doms = snapshot;
        outcome
    }

    /// Picks the next vertex (most slots into the assigned region, ties by
    /// index) and branches over its window starts in ascending order.
    fn descend(&mut self) -> Result<Outcome> {
        let mut pick: Option<usize> = None;
        for v in 0..self.problem.n {
            if self.assigned[v] {
                continue;
            }
            match pick {
                None => pick = Some(v),
                Some(best) => {
                    if self.to_assigned[v] > self.to_assigned[best] {
                        pick = Some(v);
                    }
                }
            }
        }
        let Some(v) = pick else {
            return self.leaf();
        };
        let (lo, hi) = self.doms[v];
        for x in lo..=hi {
            match self.assign(v, x)? {
                Outcome::Found(colors) => return Ok(Outcome::Found(colors)),
                Outcome::Aborted => return Ok(Outcome::Aborted),
                Outcome::Exhausted => {}
            }
        }
        Ok(Outcome::Exhausted)
    }

    /// Interval arc consistency from `seed` to a fixpoint.
    fn propagate(&mut self, seed: usize) -> bool {
        let mut queue = vec![seed];
        while let Some(v) = queue.pop() {
            let (lo_v, hi_v) = self.doms[v];
            for &(u, mu) in &self.problem.nbrs[v] {
                // Overlap >= mu: s(u) in [s(v) - d(u) + mu, s(v) + d(v) - mu].
                let lo = lo_v - self.problem.deg[u] + mu;
                let hi = hi_v + self.problem.deg[v] - mu;
                let (lo_u, hi_u) = self.doms[u];
                let nlo = lo_u.max(lo);
                let nhi = hi_u.min(hi);
                if nlo > nhi {
                    return false;
                }
                if (nlo, nhi) != (lo_u, hi_u) {
                    self.doms[u] = (nlo, nhi);
                    queue.push(u);
                }
            }
        }
        true
    }

    /// For every color c: the count of windows containing c must be able to
    /// reach an even number >= 2.
    fn cover_check(&self) -> bool {
        let p = self.problem;
        for c in 1..=p.t {
            let mut must = 0usize;
            let mut may = 0usize;
            for v in 0..p.n {
                // c in window(v) iff s(v) in [c - d(v) + 1, c].
                let lo_c = c - p.deg[v] + 1;
                let (lo, hi) = self.doms[v];
                if lo > c || hi < lo_c {
                    continue; // cannot contain c
                }
                may += 1;
                if lo >= lo_c && hi <= c {
                    must += 1;
                }
            }
            if may < 2 {
                return false;
            }
            if must == may && must % 2 == 1 {
                return false;
            }
        }
        true
    }

    /// All starts fixed: check the global cover conditions and color edges.
    fn leaf(&mut self) -> Result<Outcome> {
        let p = self.problem;
        let mut min_start = i64::MAX;
        let mut max_end = i64::MIN;
        for v in 0..p.n {
            let (lo, hi) = self.doms[v];
            debug_assert_eq!(lo, hi);
            min_start = min_start.min(lo);
            max_end = max_end.max(lo + p.deg[v] - 1);
        }
        if min_start != 1 || max_end != p.t {
            self.counters.prune();
            return Ok(Outcome::Exhausted);
        }
        self.color_edges()
    }

    /// Stage B: proper coloring with each edge inside its endpoint window
    /// overlap. Colors are bits (c-1) of a u64.
    fn color_edges(&mut self) -> Result<Outcome> {
        let p = self.problem;
        let m = p.ends.len();
        let win: Vec<u64> = (0..p.n)
            .map(|v| low_bits(p.deg[v]) << (self.doms[v].0 - 1))
            .collect();
        let lists: Vec<u64> = p.ends.iter().map(|&(u, v)| win[u] & win[v]).collect();
        let mut used = vec![0u64; p.n];
        let mut colors = vec![0u32; m];
        let mut colored = vec![false; m];
        let found = self.extend_colors(&win, &lists, &mut used, &mut colors, &mut colored, m)?;
        Ok(match found {
            Some(()) => Outcome::Found(colors),
            None => Outcome::Exhausted,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_colors(
        &mut self,
        win: &[u64],
        lists: &[u64],
        used: &mut [u64],
        colors: &mut [u32],
        colored: &mut [bool],
        remaining: usize,
    ) -> Result<Option<()>> {
        if !self.counters.tick(self.branch)? {
            return Ok(None); // abort folds into exhaustion; result unused
        }
        if remaining == 0 {
            return Ok(Some(()));
        }
        let p = self.problem;
        // Most-constrained edge first; ties by index.
        let mut pick = usize::MAX;
        let mut pick_cand = 0u64;
        let mut pick_count = u32::MAX;
        for e in 0..lists.len() {
            if colored[e] {
                continue;
            }
            let (u, v) = p.ends[e];
            let cand = lists[e] & !used[u] & !used[v];
            let count = cand.count_ones();
            if count == 0 {
                self.counters.prune();
                return Ok(None);
            }
            if count < pick_count {
                pick = e;
                pick_cand = cand;
                pick_count = count;
            }
        }
        let e = pick;
        let (u, v) = p.ends[e];
        let mut cand = pick_cand;
        while cand != 0 {
            let bit = cand & cand.wrapping_neg();
            cand ^= bit;
            colors[e] = bit.trailing_zeros() + 1;
            colored[e] = true;
            used[u] |= bit;
            used[v] |= bit;
            let viable = self.vertices_coverable(win, lists, used, colored);
            if viable {
                if let Some(()) =
                    self.extend_colors(win, lists, used, colors, colored, remaining - 1)?
                {
                    return Ok(Some(()));
                }
            } else {
                self.counters.prune();
            }
            used[u] &= !bit;
            used[v] &= !bit;
            colored[e] = false;
            colors[e] = 0;
        }
        Ok(None)
    }

    /// Every window color still missing at a vertex must be available on
    /// some uncolored incident edge.
    fn vertices_coverable(
        &self,
        win: &[u64],
        lists: &[u64],
        used: &[u64],
        colored: &[bool],
    ) -> bool {
        let p = self.problem;
        'vertices: for w in 0..p.n {
            let mut needed = win[w] & !used[w];
            if needed == 0 {
                continue;
            }
            for &e in &p.inc_edges[w] {
                if colored[e] {
                    continue;
                }
                let (u, v) = p.ends[e];
                needed &= !(lists[e] & !used[u] & !used[v]);
                if needed == 0 {
                    continue 'vertices;
                }
            }
            return false;
        }
        true
    }
}

fn low_bits(k: i64) -> u64 {
    debug_assert!((0..=63).contains(&k));
    (1u64 << k) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn run_search(g: &Multigraph, t: u32) -> Option<IntervalCertificate> {
        let limits = SearchLimits {
            max_nodes: None,
            threads: 1,
        };
        search(g, t, &limits).unwrap().0
    }

    #[test]
    fn k4_spans() {
        let k4 = families::k4().unwrap();
        assert!(run_search(&k4, 3).is_some());
        assert!(run_search(&k4, 4).is_some());
        assert!(run_search(&k4, 2).is_none());
        assert!(run_search(&k4, 5).is_none());
    }

    #[test]
    fn single_edge() {
        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(run_search(&k2, 1).is_some());
        assert!(run_search(&k2, 2).is_none());
    }

    #[test]
    fn triangle_has_no_interval_coloring() {
        let c3 = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        for t in 1..=5 {
            assert!(run_search(&c3, t).is_none(), "triangle at t={t}");
        }
    }

    #[test]
    fn parallel_edges_get_distinct_colors() {
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let cert = run_search(&digon, 2).expect("digon is interval colorable with 2 colors");
        assert_ne!(cert.coloring.color(0), cert.coloring.color(1));
        assert!(run_search(&digon, 1).is_none());
    }

    #[test]
    fn threads_agree_with_sequential() {
        let g = families::prism(3).unwrap();
        for t in 2..=7 {
            let seq = search(
                &g,
                t,
                &SearchLimits {
                    max_nodes: None,
                    threads: 1,
                },
            )
            .unwrap()
            .0;
            let par = search(
                &g,
                t,
                &SearchLimits {
                    max_nodes: None,
                    threads: 4,
                },
            )
            .unwrap()
            .0;
            assert_eq!(seq.is_some(), par.is_some(), "t={t}");
            if let (Some(a), Some(b)) = (seq, par) {
                assert_eq!(a.coloring, b.coloring, "deterministic certificate at t={t}");
            }
        }
    }

    #[test]
    fn node_budget_stops_the_search() {
        let g = families::moebius_ladder(4).unwrap();
        let limits = SearchLimits {
            max_nodes: Some(3),
            threads: 1,
        };
        assert!(matches!(
            search(&g, 6, &limits),
            Err(Error::NodeBudget { budget: 3 })
        ));
    }
}
