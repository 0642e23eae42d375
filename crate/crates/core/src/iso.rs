//! Brute-force multigraph isomorphism for small graphs.
//!
//! Backtracks over vertex assignments with degree and multiplicity pruning.
//! Intended for the enumeration dedup and for tests; hard-capped by default
//! at 12 vertices.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const DEFAULT_MAX_VERTICES: usize = 12;

/// Searches for a vertex bijection from `g` to `h` that preserves edge
/// multiplicities. Returns the mapping `m` with `m[v_g] = v_h`, or `None`
/// when the graphs are not isomorphic.
pub fn find_isomorphism(g: &Multigraph, h: &Multigraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with_limit(g, h, DEFAULT_MAX_VERTICES)
}

pub fn find_isomorphism_with_limit(
    g: &Multigraph,
    h: &Multigraph,
    max_vertices: usize,
) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > max_vertices || h.vertex_count() > max_vertices {
        return Err(Error::SizeGuard {
            what: "isomorphism vertex count",
            actual: n.max(h.vertex_count()),
            limit: max_vertices,
        });
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hdeg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    gdeg.sort_unstable();
    hdeg.sort_unstable();
    if gdeg != hdeg {
        return Ok(None);
    }

    let gm = multiplicity_matrix(g);
    let hm = multiplicity_matrix(h);

    // Local multiplicity profiles must match as multisets.
    let profile = |m: &[Vec<usize>], v: usize| {
        let mut p: Vec<usize> = m[v].iter().copied().filter(|&c| c > 0).collect();
        p.sort_unstable();
        p
    };
    let mut gprof: Vec<_> = (0..n).map(|v| profile(&gm, v)).collect();
    let mut hprof: Vec<_> = (0..n).map(|v| profile(&hm, v)).collect();
    gprof.sort();
    hprof.sort();
    if gprof != hprof {
        return Ok(None);
    }

    // Assign g's vertices in descending-degree order (ties by index): high
    // degree first fails fast.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(&gm, &hm, g, h, &order, 0, &mut mapping, &mut used) {
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

fn multiplicity_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    m
}

fn assign(
    gm: &[Vec<usize>],
    hm: &[Vec<usize>],
    g: &Multigraph,
    h: &Multigraph,
    order: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let gv = order[depth];
    'candidates: for hv in 0..used.len() {
        if used[hv] || g.degree(gv) != h.degree(hv) {
            continue;
        }
        for &prev in &order[..depth] {
            if gm[gv][prev] != hm[hv][mapping[prev]] {
                continue 'candidates;
            }
        }
        mapping[gv] = hv;
        used[hv] = true;
        if assign(gm, hm, g, h, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[gv] = usize::MAX;
        used[hv] = false;
    }
    false
}

/// Checks that `mapping` sends `g`'s edge multiset exactly onto `h`'s.
pub fn is_valid_isomorphism(g: &Multigraph, h: &Multigraph, mapping: &[usize]) -> bool {
    if mapping.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return false;
    }
    match g.relabeled(mapping) {
        Ok(relabeled) => relabeled.edge_multiset() == h.edge_multiset(),
        Err(_) => false,
    }
}
