//! Loopless undirected multigraphs with indexed edge slots.
//!
//! Vertices are `0..n`. Edges live in an ordered list; parallel edges are
//! distinct slots with distinct indices, and the degree of a vertex counts
//! incident slots (each parallel edge contributes 1).

use crate::error::{Error, Result};

/// An undirected multigraph without loops.
///
/// The edge list order is part of the value: colorings and certificates are
/// maps on edge indices, so two graphs with the same edge multiset but a
/// different edge order are distinct values (though isomorphic).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // vertex -> [(neighbor, edge index)]
}

impl Multigraph {
    /// Builds a multigraph from an edge list. Endpoints are stored with the
    /// smaller vertex first; edge indices follow the input order.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, (u, v)) in edges.into_iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge { index, vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for (index, &(u, v)) in normalized.iter().enumerate() {
            adj[u].push((v, index));
            adj[v].push((u, index));
        }
        Ok(Multigraph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge slot `e`, smaller vertex first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Incident (neighbor, edge index) pairs of `v`, one entry per slot.
    pub fn incidences(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Number of edge slots incident to `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {} out of range 0..{}", v, self.n);
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|&&(w, _)| w == v).count()
    }

    pub fn max_multiplicity(&self) -> usize {
        let mut best = 0;
        for v in 0..self.n {
            let mut counts = std::collections::HashMap::new();
            for &(w, _) in &self.adj[v] {
                *counts.entry(w).or_insert(0usize) += 1;
            }
            for (_, c) in counts {
                best = best.max(c);
            }
        }
        best
    }

    /// True when no pair of vertices is joined by more than one edge.
    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Two-colors the vertices if possible. Returns the parts sorted
    /// ascending, the part containing the lowest vertex of each component
    /// first. Parallel edges are irrelevant to the 2-coloring.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if side[root] != usize::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == 0).collect();
        let right = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when no three distinct vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        for e in 0..self.edges.len() {
            let (u, v) = self.edges[e];
            for &(w, _) in &self.adj[u] {
                if w != v && self.multiplicity(v, w) > 0 {
                    return false;
                }
            }
        }
        true
    }

    /// All vertices of equal degree: returns that degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.regular_degree() == Some(3)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// True when no single edge disconnects the graph. A parallel pair is
    /// never a bridge. Rejects disconnected input.
    pub fn is_bridgeless(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                operation: "is_bridgeless",
            });
        }
        if self.n == 1 {
            return Ok(true);
        }
        // Iterative DFS lowlink search; the entering edge index (not the
        // parent vertex) is skipped, so a parallel slot back to the parent
        // counts as a back edge and neutralizes the bridge.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut timer = 0usize;
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)]; // (v, in-edge, next slot)
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (v, in_edge, ref mut slot)) = stack.last_mut() {
            if *slot < self.adj[v].len() {
                let (w, e) = self.adj[v][*slot];
                *slot += 1;
                if e == in_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    if low[v] > disc[p] {
                        return Ok(false); // the tree edge p-v is a bridge
                    }
                    low[p] = low[p].min(low[v]);
                }
            }
        }
        Ok(true)
    }

    /// Splits into connected components. Each entry is the component as a
    /// standalone multigraph plus the original vertex ids in local order.
    pub fn connected_components(&self) -> Vec<(Multigraph, Vec<usize>)> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = count;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut vertices: Vec<Vec<usize>> = vec![Vec::new(); count];
        for v in 0..self.n {
            vertices[comp[v]].push(v);
        }
        let mut local = vec![0usize; self.n];
        for verts in &vertices {
            for (i, &v) in verts.iter().enumerate() {
                local[v] = i;
            }
        }
        let mut edge_lists: Vec<Vec<(usize, usize)>> = vec![Vec::new(); count];
        for &(u, v) in &self.edges {
            edge_lists[comp[u]].push((local[u], local[v]));
        }
        vertices
            .into_iter()
            .zip(edge_lists)
            .map(|(verts, edges)| {
                let g = Multigraph::new(verts.len(), edges).expect("component of a valid graph");
                (g, verts)
            })
            .collect()
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`. Edge
    /// indices are preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Multigraph> {
        if perm.len() != self.n {
            return Err(Error::VertexOutOfRange {
                vertex: perm.len(),
                n: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange { vertex: p, n: self.n });
            }
            seen[p] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::VertexOutOfRange {
                vertex: self.n,
                n: self.n,
            });
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Multigraph::new(self.n, edges)
    }

    /// Sorted edge multiset, for order-insensitive comparisons.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut es = self.edges.clone();
        es.sort_unstable();
        es
    }
}

/// Structural class flags for a multigraph. All fields except
/// `planar_by_construction` are derived by the corresponding predicate;
/// planarity is only ever asserted by a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassTags {
    pub simple: bool,
    pub connected: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub triangle_free: bool,
    pub cubic: bool,
    pub subcubic: bool,
    pub regular_degree: Option<usize>,
    pub bridgeless: bool,
    pub planar_by_construction: bool,
}

impl GraphClassTags {
    pub fn derive(g: &Multigraph) -> Self {
        let connected = g.is_connected();
        GraphClassTags {
            simple: g.is_simple(),
            connected,
            bipartition: g.bipartition(),
            triangle_free: g.is_triangle_free(),
            cubic: g.is_cubic(),
            subcubic: g.is_subcubic(),
            regular_degree: g.regular_degree(),
            bridgeless: connected && g.is_bridgeless().unwrap_or(false),
            planar_by_construction: false,
        }
    }

    pub fn derive_with_planar(g: &Multigraph, planar: bool) -> Self {
        let mut tags = Self::derive(g);
        tags.planar_by_construction = planar;
        tags
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}
