//! Deterministic generators for the named graph families plus seeded random
//! corpora. `(family, parameters, seed)` fully determines the output,
//! including vertex numbering and edge index order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Parameterized descriptor of a generator invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    MoebiusLadder { n: usize },
    Prism { n: usize },
    RingOfDiamonds { k: usize },
    CompleteBipartite { m: usize, n: usize },
    K4,
    Petersen,
    DigonNecklace { n: usize },
    Halin { internal: usize, seed: u64 },
    RandomBipartiteSubcubic {
        n1: usize,
        n2: usize,
        target_m: usize,
        allow_multi: bool,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Multigraph> {
        match *self {
            FamilySpec::MoebiusLadder { n } => moebius_ladder(n),
            FamilySpec::Prism { n } => prism(n),
            FamilySpec::RingOfDiamonds { k } => ring_of_diamonds(k),
            FamilySpec::CompleteBipartite { m, n } => complete_bipartite(m, n),
            FamilySpec::K4 => k4(),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::DigonNecklace { n } => digon_necklace(n),
            FamilySpec::Halin { internal, seed } => random_cubic_halin(internal, seed),
            FamilySpec::RandomBipartiteSubcubic {
                n1,
                n2,
                target_m,
                allow_multi,
                seed,
            } => random_bipartite_subcubic(n1, n2, target_m, allow_multi, seed),
        }
    }

    /// Families built by an explicit plane construction. Only these may set
    /// the planar tag; nothing in the crate tests planarity.
    pub fn planar_by_construction(&self) -> bool {
        matches!(
            self,
            FamilySpec::Prism { .. }
                | FamilySpec::RingOfDiamonds { .. }
                | FamilySpec::K4
                | FamilySpec::Halin { .. }
        )
    }

    pub fn label(&self) -> String {
        match *self {
            FamilySpec::MoebiusLadder { n } => format!("moebius_ladder(n={n})"),
            FamilySpec::Prism { n } => format!("prism(n={n})"),
            FamilySpec::RingOfDiamonds { k } => format!("ring_of_diamonds(k={k})"),
            FamilySpec::CompleteBipartite { m, n } => format!("complete_bipartite(m={m},n={n})"),
            FamilySpec::K4 => "k4".to_string(),
            FamilySpec::Petersen => "petersen".to_string(),
            FamilySpec::DigonNecklace { n } => format!("digon_necklace(n={n})"),
            FamilySpec::Halin { internal, seed } => format!("halin(internal={internal},seed={seed})"),
            FamilySpec::RandomBipartiteSubcubic {
                n1,
                n2,
                target_m,
                allow_multi,
                seed,
            } => format!(
                "bipartite_subcubic(n1={n1},n2={n2},m={target_m},multi={allow_multi},seed={seed})"
            ),
        }
    }
}

/// Moebius ladder on `2n` vertices: the cycle 0..2n-1 plus the n antipodal
/// rungs {i, i+n}.
pub fn moebius_ladder(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::InvalidFamily {
            family: "moebius_ladder",
            reason: format!("need n >= 2, got {n}"),
        });
    }
    let order = 2 * n;
    let mut edges: Vec<(usize, usize)> = (0..order).map(|i| (i, (i + 1) % order)).collect();
    edges.extend((0..n).map(|i| (i, i + n)));
    Multigraph::new(order, edges)
}

/// Prism on `2n` vertices: two disjoint n-cycles joined by a perfect
/// matching of rungs.
pub fn prism(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::InvalidFamily {
            family: "prism",
            reason: format!("need n >= 3, got {n}"),
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, i + n)));
    Multigraph::new(2 * n, edges)
}

/// Ring of `k` diamonds. Diamond `i` occupies vertices 4i..4i+3 and is a
/// K4 minus the edge {4i, 4i+3}; the connector joins the exit pole 4i+3 to
/// the entry pole of the next diamond.
pub fn ring_of_diamonds(k: usize) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::InvalidFamily {
            family: "ring_of_diamonds",
            reason: format!("need k >= 2, got {k}"),
        });
    }
    let mut edges = Vec::with_capacity(6 * k);
    for i in 0..k {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
    }
    for i in 0..k {
        edges.push((4 * i + 3, 4 * ((i + 1) % k)));
    }
    Multigraph::new(4 * k, edges)
}

/// Complete bipartite graph with parts {0..m-1} and {m..m+n-1}.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidFamily {
            family: "complete_bipartite",
            reason: "both parts must be nonempty".to_string(),
        });
    }
    let edges = (0..m)
        .flat_map(|u| (0..n).map(move |v| (u, m + v)))
        .collect();
    Multigraph::new(m + n, edges)
}

pub fn k4() -> Result<Multigraph> {
    Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Multigraph::new(10, edges).expect("fixed edge list")
}

/// Cubic multigraph on `2n` vertices: a cycle where every other edge is
/// doubled. Edge order per segment i: the digon {2i, 2i+1} twice, then the
/// single {2i+1, 2i+2 mod 2n}.
pub fn digon_necklace(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::InvalidFamily {
            family: "digon_necklace",
            reason: format!("need n >= 2, got {n}"),
        });
    }
    let order = 2 * n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        let a = 2 * i;
        edges.push((a, a + 1));
        edges.push((a, a + 1));
        edges.push((a + 1, (a + 2) % order));
    }
    Multigraph::new(order, edges)
}

/// Joins the leaves of a cubic tree (internal degree 3, no degree-2
/// vertices, at least 4 vertices) with a cycle in the given order. The
/// caller's order stands in for a plane embedding; any depth-first leaf
/// order of the tree is realizable.
pub fn halin_from_tree(tree: &Multigraph, leaf_cycle: &[usize]) -> Result<Multigraph> {
    let n = tree.vertex_count();
    if n < 4 {
        return Err(Error::InvalidFamily {
            family: "halin",
            reason: format!("tree needs at least 4 vertices, got {n}"),
        });
    }
    if tree.edge_count() != n - 1 || !tree.is_connected() {
        return Err(Error::InvalidFamily {
            family: "halin",
            reason: "input is not a tree".to_string(),
        });
    }
    let mut leaves = Vec::new();
    for v in 0..n {
        match tree.degree(v) {
            1 => leaves.push(v),
            2 => {
                return Err(Error::InvalidFamily {
                    family: "halin",
                    reason: format!("vertex {v} has degree 2"),
                })
            }
            3 => {}
            d => {
                return Err(Error::InvalidFamily {
                    family: "halin",
                    reason: format!("internal vertex {v} has degree {d}, need 3"),
                })
            }
        }
    }
    let mut sorted_cycle = leaf_cycle.to_vec();
    sorted_cycle.sort_unstable();
    if sorted_cycle != leaves {
        return Err(Error::InvalidFamily {
            family: "halin",
            reason: "leaf cycle is not a permutation of the tree's leaves".to_string(),
        });
    }
    let mut edges = tree.edges().to_vec();
    for i in 0..leaf_cycle.len() {
        edges.push((leaf_cycle[i], leaf_cycle[(i + 1) % leaf_cycle.len()]));
    }
    let g = Multigraph::new(n, edges)?;
    if !g.is_cubic() {
        return Err(Error::InvalidFamily {
            family: "halin",
            reason: "result is not cubic".to_string(),
        });
    }
    Ok(g)
}

/// Seeded random cubic Halin graph with `internal` internal tree vertices
/// (so 2*internal + 2 vertices overall). Grows a cubic tree by repeatedly
/// splitting a random leaf into an internal vertex with two fresh leaves,
/// then closes a depth-first leaf order into the cycle.
pub fn random_cubic_halin(internal: usize, seed: u64) -> Result<Multigraph> {
    if internal < 1 {
        return Err(Error::InvalidFamily {
            family: "halin",
            reason: "need at least one internal vertex".to_string(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Start from the star on {0;1,2,3}.
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3)];
    let mut leaves: Vec<usize> = vec![1, 2, 3];
    let mut next = 4;
    for _ in 1..internal {
        let pick = rng.gen_range(0..leaves.len());
        let v = leaves.swap_remove(pick);
        edges.push((v, next));
        edges.push((v, next + 1));
        leaves.push(next);
        leaves.push(next + 1);
        next += 2;
    }
    let tree = Multigraph::new(next, edges)?;
    let order = dfs_leaf_order(&tree);
    halin_from_tree(&tree, &order)
}

fn dfs_leaf_order(tree: &Multigraph) -> Vec<usize> {
    let mut order = Vec::new();
    let mut seen = vec![false; tree.vertex_count()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        if tree.degree(v) == 1 {
            order.push(v);
        }
        let mut nbrs: Vec<usize> = tree.incidences(v).iter().map(|&(w, _)| w).collect();
        nbrs.sort_unstable();
        for w in nbrs.into_iter().rev() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    order
}

/// Seeded random bipartite multigraph with parts {0..n1-1}, {n1..n1+n2-1},
/// maximum degree 3 and exactly `target_m` edge slots. Draws edges uniformly
/// over the pairs with remaining capacity; restarts on dead ends.
pub fn random_bipartite_subcubic(
    n1: usize,
    n2: usize,
    target_m: usize,
    allow_multi: bool,
    seed: u64,
) -> Result<Multigraph> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidFamily {
            family: "bipartite_subcubic",
            reason: "both parts must be nonempty".to_string(),
        });
    }
    let cap = 3 * n1.min(n2);
    if target_m > cap {
        return Err(Error::InvalidFamily {
            family: "bipartite_subcubic",
            reason: format!("target_m = {target_m} exceeds the degree capacity {cap}"),
        });
    }
    if !allow_multi && target_m > n1 * n2 {
        return Err(Error::InvalidFamily {
            family: "bipartite_subcubic",
            reason: format!("target_m = {target_m} exceeds the {} simple pairs", n1 * n2),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..1000 {
        let mut remaining: Vec<usize> = vec![3; n1 + n2];
        let mut mult = vec![vec![0usize; n2]; n1];
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(target_m);
        while edges.len() < target_m {
            let mut candidates = Vec::new();
            for u in 0..n1 {
                if remaining[u] == 0 {
                    continue;
                }
                for v in 0..n2 {
                    if remaining[n1 + v] == 0 {
                        continue;
                    }
                    if !allow_multi && mult[u][v] > 0 {
                        continue;
                    }
                    candidates.push((u, v));
                }
            }
            if candidates.is_empty() {
                continue 'attempt;
            }
            let (u, v) = candidates[rng.gen_range(0..candidates.len())];
            mult[u][v] += 1;
            remaining[u] -= 1;
            remaining[n1 + v] -= 1;
            edges.push((u, n1 + v));
        }
        return Multigraph::new(n1 + n2, edges);
    }
    Err(Error::InvalidFamily {
        family: "bipartite_subcubic",
        reason: format!("no feasible draw for target_m = {target_m} after 1000 attempts"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn moebius_ladders() {
        let m4 = moebius_ladder(2).unwrap();
        assert!(find_isomorphism(&m4, &k4().unwrap()).unwrap().is_some());
        let m8 = moebius_ladder(4).unwrap();
        assert_eq!(m8.vertex_count(), 8);
        assert_eq!(m8.edge_count(), 12);
        assert!(m8.is_cubic());
        assert!(!moebius_ladder(3).unwrap().is_bipartite());
        assert!(moebius_ladder(1).is_err());
    }

    #[test]
    fn prisms() {
        let p3 = prism(3).unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (6, 9));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert!(find_isomorphism(&p3, &k33).unwrap().is_none());
        let cube = prism(4).unwrap();
        assert!(cube.is_bipartite());
        assert!(prism(2).is_err());
    }

    #[test]
    fn rings_of_diamonds() {
        let d2 = ring_of_diamonds(2).unwrap();
        assert_eq!((d2.vertex_count(), d2.edge_count()), (8, 12));
        assert!(d2.is_cubic());
        let d3 = ring_of_diamonds(3).unwrap();
        assert!(d3.is_cubic());
        assert!(d3.is_bridgeless().unwrap());
        assert!(ring_of_diamonds(1).is_err());
    }

    #[test]
    fn complete_bipartite_graphs() {
        let k2 = complete_bipartite(1, 1).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert!(k33.is_cubic());
        assert_eq!(k33.edge_count(), 9);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.max_degree(), 3);
        assert_eq!(k23.regular_degree(), None);
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn digon_necklaces() {
        let d2 = digon_necklace(2).unwrap();
        assert_eq!((d2.vertex_count(), d2.edge_count()), (4, 6));
        let d3 = digon_necklace(3).unwrap();
        assert_eq!((d3.vertex_count(), d3.edge_count()), (6, 9));
        for n in 2..6 {
            let g = digon_necklace(n).unwrap();
            assert!(g.is_cubic(), "necklace {n} not cubic");
            assert!(g.is_connected());
        }
        assert!(digon_necklace(1).is_err());
    }

    #[test]
    fn halin_star_is_k4() {
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let g = halin_from_tree(&star, &[1, 2, 3]).unwrap();
        assert!(find_isomorphism(&g, &k4().unwrap()).unwrap().is_some());
    }

    #[test]
    fn halin_six_vertices() {
        // Internal edge a-b with leaves 2,3 on a=0 and 4,5 on b=1.
        let tree = Multigraph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let g = halin_from_tree(&tree, &[2, 3, 4, 5]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.is_cubic());
        // Tree edges survive as a prefix of the edge list.
        assert_eq!(&g.edges()[..5], tree.edges());
    }

    #[test]
    fn halin_rejects_bad_input() {
        let path = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(halin_from_tree(&path, &[0, 3]).is_err()); // degree-2 vertices
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(halin_from_tree(&star, &[1, 2]).is_err()); // not a permutation
        assert!(halin_from_tree(&star, &[1, 2, 2]).is_err());
        let not_tree = k4().unwrap();
        assert!(halin_from_tree(&not_tree, &[]).is_err());
    }

    #[test]
    fn random_halin_smallest_cases() {
        let g = random_cubic_halin(1, 7).unwrap();
        assert!(find_isomorphism(&g, &k4().unwrap()).unwrap().is_some());
        let h = random_cubic_halin(2, 99).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert!(h.is_cubic());
        // Same parameters, same seed: identical edge lists.
        assert_eq!(
            random_cubic_halin(4, 5).unwrap(),
            random_cubic_halin(4, 5).unwrap()
        );
    }

    #[test]
    fn random_bipartite_corner_cases() {
        let triple = random_bipartite_subcubic(1, 1, 3, true, 3).unwrap();
        assert_eq!(triple.multiplicity(0, 1), 3);
        let full = random_bipartite_subcubic(3, 3, 9, false, 11).unwrap();
        assert!(find_isomorphism(&full, &complete_bipartite(3, 3).unwrap())
            .unwrap()
            .is_some());
        let g = random_bipartite_subcubic(4, 4, 10, true, 17).unwrap();
        assert!(g.max_degree() <= 3);
        assert_eq!(g.edge_count(), 10);
        assert!(g.is_bipartite());
        assert!(random_bipartite_subcubic(2, 2, 7, true, 0).is_err());
        assert!(random_bipartite_subcubic(2, 2, 5, false, 0).is_err());
        // Determinism.
        assert_eq!(
            random_bipartite_subcubic(5, 4, 11, true, 23).unwrap(),
            random_bipartite_subcubic(5, 4, 11, true, 23).unwrap()
        );
    }

    #[test]
    fn petersen_structure() {
        let p = petersen();
        assert!(p.is_cubic());
        assert!(p.is_connected());
        assert!(p.is_triangle_free());
        assert!(!p.is_bipartite());
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
    }

    #[test]
    fn closed_forms_and_determinism() {
        for n in 2..6 {
            assert_eq!(moebius_ladder(n).unwrap().edge_count(), 3 * n);
        }
        for n in 3..6 {
            assert_eq!(prism(n).unwrap().edge_count(), 3 * n);
        }
        for k in 2..5 {
            assert_eq!(ring_of_diamonds(k).unwrap().edge_count(), 6 * k);
        }
        let spec = FamilySpec::RandomBipartiteSubcubic {
            n1: 4,
            n2: 5,
            target_m: 9,
            allow_multi: true,
            seed: 42,
        };
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }
}
