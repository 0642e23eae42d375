//! Isomorphism-free enumeration of small connected cubic (multi)graphs.
//!
//! Backtracks over vertex pairs in lexicographic order assigning edge
//! multiplicities, with remaining-capacity pruning and a first-vertex
//! symmetry cut (vertex 0's neighborhood uses the smallest labels with
//! non-increasing multiplicities). Survivors are filtered for connectivity
//! and deduplicated with the exact isomorphism test.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::iso;

pub const DEFAULT_MAX_SIMPLE: usize = 10;
pub const DEFAULT_MAX_MULTI: usize = 6;

/// One representative per isomorphism class of connected 3-regular loopless
/// (multi)graphs on `n` vertices, sorted by edge list.
pub fn connected_cubic(n: usize, allow_multi: bool) -> Result<Vec<Multigraph>> {
    let limit = if allow_multi { DEFAULT_MAX_MULTI } else { DEFAULT_MAX_SIMPLE };
    connected_cubic_with_limit(n, allow_multi, limit)
}

pub fn connected_cubic_with_limit(
    n: usize,
    allow_multi: bool,
    max_vertices: usize,
) -> Result<Vec<Multigraph>> {
    if n % 2 == 1 {
        return Err(Error::OddCubicOrder { n });
    }
    if n > max_vertices {
        return Err(Error::SizeGuard {
            what: "cubic enumeration vertex count",
            actual: n,
            limit: max_vertices,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut classes: Vec<Multigraph> = Vec::new();
    let mut sink = |g: Multigraph| -> Result<()> {
        for rep in &classes {
            if iso::find_isomorphism_with_limit(rep, &g, n.max(12))?.is_some() {
                return Ok(());
            }
        }
        classes.push(g);
        Ok(())
    };
    generate(n, allow_multi, true, &mut sink)?;
    classes.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(classes)
}

/// Generates all labeled connected cubic graphs; `symmetry_cut` restricts
/// vertex 0's neighborhood to its canonical shape. Tests disable the cut to
/// get an independent count of the same classes.
pub(crate) fn generate(
    n: usize,
    allow_multi: bool,
    symmetry_cut: bool,
    sink: &mut dyn FnMut(Multigraph) -> Result<()>,
) -> Result<()> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut deg = vec![0usize; n];
    let mut mult = vec![0usize; pairs.len()];
    let max_mult = if allow_multi { 3 } else { 1 };
    let mut state = Gen {
        n,
        pairs,
        max_mult,
        symmetry_cut,
        sink,
    };
    state.recurse(0, &mut deg, &mut mult)
}

struct Gen<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    max_mult: usize,
    symmetry_cut: bool,
    sink: &'a mut dyn FnMut(Multigraph) -> Result<()>,
}

impl Gen<'_> {
    fn recurse(&mut self, idx: usize, deg: &mut [usize], mult: &mut [usize]) -> Result<()> {
        if idx == self.pairs.len() {
            if deg.iter().all(|&d| d == 3) {
                let mut edges = Vec::with_capacity(3 * self.n / 2);
                for (k, &(i, j)) in self.pairs.iter().enumerate() {
                    for _ in 0..mult[k] {
                        edges.push((i, j));
                    }
                }
                let g = Multigraph::new(self.n, edges)?;
                if g.is_connected() {
                    (self.sink)(g)?;
                }
            }
            return Ok(());
        }
        let (i, j) = self.pairs[idx];
        // Vertex i sees no further pairs once we pass (i, n-1).
        let i_closes = j == self.n - 1;
        let cap = self
            .max_mult
            .min(3 - deg[i])
            .min(3 - deg[j]);
        for m in 0..=cap {
            if i_closes && deg[i] + m != 3 {
                continue;
            }
            if self.symmetry_cut && i == 0 {
                // Multiplicities from vertex 0 must be non-increasing and
                // contiguous: neighborhoods {1,1,1}, {1,1,2} or {1,2,3}.
                if j >= 2 {
                    let prev = mult[idx - 1];
                    if m > prev {
                        continue;
                    }
                    if prev == 0 && m > 0 {
                        continue;
                    }
                }
            }
            if !self.capacity_ok(idx, i, deg, m) {
                continue;
            }
            mult[idx] = m;
            deg[i] += m;
            deg[j] += m;
            self.recurse(idx + 1, deg, mult)?;
            deg[i] -= m;
            deg[j] -= m;
            mult[idx] = 0;
        }
        Ok(())
    }

    /// Every vertex must still be able to reach degree 3 from the remaining
    /// pairs.
    fn capacity_ok(&self, idx: usize, i: usize, deg: &[usize], m: usize) -> bool {
        let (pi, pj) = self.pairs[idx];
        let mut need: i64 = 0;
        for v in 0..self.n {
            let mut d = deg[v];
            if v == pi || v == pj {
                d += m;
            }
            if v < i {
                if d != 3 {
                    return false;
                }
                continue;
            }
            need += 3i64 - d as i64;
        }
        // Remaining slots after idx can absorb at most 2*max_mult per pair.
        let remaining = (self.pairs.len() - idx - 1) as i64;
        need <= remaining * 2 * self.max_mult as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn odd_order_is_rejected() {
        assert_eq!(connected_cubic(3, false), Err(Error::OddCubicOrder { n: 3 }));
    }

    #[test]
    fn size_guard_applies() {
        assert!(matches!(
            connected_cubic(8, true),
            Err(Error::SizeGuard { .. })
        ));
        assert!(connected_cubic_with_limit(8, true, 8).is_ok());
    }

    #[test]
    fn simple_counts_at_small_orders() {
        assert!(connected_cubic(2, false).unwrap().is_empty());
        let on4 = connected_cubic(4, false).unwrap();
        assert_eq!(on4.len(), 1);
        let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(iso::find_isomorphism(&on4[0], &k4).unwrap().is_some());

        let on6 = connected_cubic(6, false).unwrap();
        assert_eq!(on6.len(), 2);
        let k33 = families::complete_bipartite(3, 3).unwrap();
        let prism = families::prism(3).unwrap();
        assert!(on6
            .iter()
            .any(|g| iso::find_isomorphism(g, &k33).unwrap().is_some()));
        assert!(on6
            .iter()
            .any(|g| iso::find_isomorphism(g, &prism).unwrap().is_some()));
    }

    #[test]
    fn five_simple_classes_on_eight_vertices() {
        assert_eq!(connected_cubic(8, false).unwrap().len(), 5);
    }

    #[test]
    fn multigraph_counts_at_small_orders() {
        let on2 = connected_cubic(2, true).unwrap();
        assert_eq!(on2.len(), 1);
        assert_eq!(on2[0].multiplicity(0, 1), 3);

        let on4 = connected_cubic(4, true).unwrap();
        assert_eq!(on4.len(), 2); // K4 and the doubled 4-cycle
        let necklace = families::digon_necklace(2).unwrap();
        assert!(on4
            .iter()
            .any(|g| iso::find_isomorphism(g, &necklace).unwrap().is_some()));
    }

    #[test]
    fn outputs_are_cubic_connected_and_pairwise_distinct() {
        for (n, multi) in [(4usize, true), (6, true), (6, false), (8, false)] {
            let classes = connected_cubic_with_limit(n, multi, 8).unwrap();
            for g in &classes {
                assert!(g.is_cubic());
                assert!(g.is_connected());
                if !multi {
                    assert!(g.is_simple());
                }
            }
            for a in 0..classes.len() {
                for b in (a + 1)..classes.len() {
                    assert!(
                        iso::find_isomorphism(&classes[a], &classes[b]).unwrap().is_none(),
                        "classes {} and {} of n={} multi={} are isomorphic",
                        a,
                        b,
                        n,
                        multi
                    );
                }
            }
        }
    }

    /// Independent oracle: enumerate without the symmetry cut and dedup; the
    /// class counts must agree.
    #[test]
    fn symmetry_cut_preserves_class_count() {
        for (n, multi) in [(4usize, false), (4, true), (6, false), (6, true)] {
            let fast = connected_cubic(n, multi).unwrap();
            let mut slow: Vec<Multigraph> = Vec::new();
            let mut sink = |g: Multigraph| -> crate::error::Result<()> {
                for rep in &slow {
                    if iso::find_isomorphism(rep, &g)?.is_some() {
                        return Ok(());
                    }
                }
                slow.push(g);
                Ok(())
            };
            generate(n, multi, false, &mut sink).unwrap();
            assert_eq!(
                fast.len(),
                slow.len(),
                "class count mismatch at n={} multi={}",
                n,
                multi
            );
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_sorted() {
        let a = connected_cubic(6, true).unwrap();
        let b = connected_cubic(6, true).unwrap();
        assert_eq!(a, b);
        for w in a.windows(2) {
            assert!(w[0].edges() <= w[1].edges());
        }
    }
}
