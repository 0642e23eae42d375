//! Exact chromatic index by backtracking proper edge coloring.

use crate::graph::Multigraph;

/// Nodes expanded while deciding colorability.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct EdgeColorStats {
    pub nodes: u64,
}

/// Least t admitting a proper edge coloring, found by trying t upward from
/// the maximum degree. A loopless multigraph never needs more than
/// max degree + max multiplicity colors.
pub(crate) fn chromatic_index(g: &Multigraph, stats: &mut EdgeColorStats) -> u32 {
    if g.edge_count() == 0 {
        return 0;
    }
    let delta = g.max_degree() as u32;
    let upper = delta + g.max_multiplicity() as u32;
    for t in delta..=upper {
        if let Some(_colors) = proper_coloring(g, t, stats) {
            return t;
        }
    }
    unreachable!("max degree + max multiplicity colors always suffice")
}

/// Searches for a proper edge coloring with colors 1..=t; resulting vector
/// maps edge index to color. Colors are introduced in first-use order, which
/// cuts color-permutation symmetry without losing completeness.
pub(crate) fn proper_coloring(
    g: &Multigraph,
    t: u32,
    stats: &mut EdgeColorStats,
) -> Option<Vec<u32>> {
    if t >= 64 {
        return None; // caller guards keep spans far below this
    }
    let m = g.edge_count();
    if m == 0 {
        return Some(Vec::new());
    }
    let mut used = vec![0u64; g.vertex_count()];
    let mut colors = vec![0u32; m];
    let mut colored = vec![false; m];
    let full = (1u64 << t) - 1;
    extend(g, full, &mut used, &mut colors, &mut colored, m, 0, stats).then_some(colors)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Multigraph,
    full: u64,
    used: &mut [u64],
    colors: &mut [u32],
    colored: &mut [bool],
    remaining: usize,
    max_used: u32,
    stats: &mut EdgeColorStats,
) -> bool {
    stats.nodes += 1;
    if remaining == 0 {
        return true;
    }
    // Most-constrained uncolored edge, ties by index.
    let mut pick = usize::MAX;
    let mut pick_cand = 0u64;
    let mut pick_count = u32::MAX;
    for e in 0..colors.len() {
        if colored[e] {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let cand = full & !used[u] & !used[v];
        let count = cand.count_ones();
        if count == 0 {
            return false;
        }
        if count < pick_count {
            pick = e;
            pick_cand = cand;
            pick_count = count;
        }
    }
    let e = pick;
    let (u, v) = g.endpoints(e);
    // A fresh color may only be the next one after those already in use.
    let cap = ((max_used + 1).min(full.count_ones())) as u64;
    let mut cand = pick_cand & ((1u64 << cap) - 1);
    while cand != 0 {
        let bit = cand & cand.wrapping_neg();
        cand ^= bit;
        let c = bit.trailing_zeros() + 1;
        colors[e] = c;
        colored[e] = true;
        used[u] |= bit;
        used[v] |= bit;
        if extend(g, full, used, colors, colored, remaining - 1, max_used.max(c), stats) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
        colored[e] = false;
        colors[e] = 0;
    }
    false
}
