//! Upper bounds on the maximum span W(G), gated on verified class tags.
//!
//! Each rule applies only when its hypothesis holds. The window-cover rule
//! is hypothesis-free: per component, vertex windows overlap along a
//! spanning tree, so a component spans at most 2m - n + 1 colors, and the
//! components' runs must jointly cover {1..t}.

use crate::graph::{GraphClassTags, Multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRule {
    /// Connected simple graph: 2|V| - 3.
    Connected2V3,
    /// Connected simple graph on at least 3 vertices: 2|V| - 4.
    Connected2V4,
    /// Connected simple r-regular graph with |V| >= 2r + 2: 2|V| - 5.
    RegularWide,
    /// Connected simple triangle-free graph: |V| - 1.
    TriangleFree,
    /// Connected simple planar-tagged graph: ceil(11 |V| / 6).
    PlanarTagged,
    /// Connected cubic multigraph: |V| + 1.
    CubicMultigraph,
    /// Connected simple cubic graph: |V|.
    CubicSimple,
    /// Connected simple cubic graph other than the complete graph on 4
    /// vertices: |V| - 1.
    CubicSimpleBeyondK4,
    /// Connected simple (a,b)-biregular bipartite graph with
    /// |V| >= 2(a+b): |V| - 3.
    BiregularWide,
    /// Any multigraph: 2|E| - |V| + (number of components).
    WindowCover,
}

impl BoundRule {
    pub fn id(self) -> &'static str {
        match self {
            BoundRule::Connected2V3 => "connected-2v-3",
            BoundRule::Connected2V4 => "connected-2v-4",
            BoundRule::RegularWide => "regular-wide-2v-5",
            BoundRule::TriangleFree => "triangle-free-v-1",
            BoundRule::PlanarTagged => "planar-11v-6",
            BoundRule::CubicMultigraph => "cubic-multi-v-plus-1",
            BoundRule::CubicSimple => "cubic-simple-v",
            BoundRule::CubicSimpleBeyondK4 => "cubic-simple-v-1",
            BoundRule::BiregularWide => "biregular-v-3",
            BoundRule::WindowCover => "window-cover",
        }
    }
}

/// The applicable upper bounds for one graph, plus their minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSet {
    pub entries: Vec<(BoundRule, u32)>,
    pub effective: u32,
}

impl BoundSet {
    pub fn value(&self, rule: BoundRule) -> Option<u32> {
        self.entries.iter().find(|&&(r, _)| r == rule).map(|&(_, v)| v)
    }
}

/// Collects every bound whose hypothesis holds for `g` under `tags`.
/// `planar_by_construction` is trusted as given; everything else in `tags`
/// is assumed to be derived from `g`.
pub fn bound_set(g: &Multigraph, tags: &GraphClassTags) -> BoundSet {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut entries: Vec<(BoundRule, u32)> = Vec::new();

    if m > 0 {
        let components = g.connected_components().len();
        entries.push((
            BoundRule::WindowCover,
            (2 * m + components - n) as u32,
        ));
    }
    if tags.connected && tags.simple && m > 0 {
        if n >= 2 {
            entries.push((BoundRule::Connected2V3, (2 * n - 3) as u32));
        }
        if n >= 3 {
            entries.push((BoundRule::Connected2V4, (2 * n - 4) as u32));
        }
        if let Some(r) = tags.regular_degree {
            if r >= 1 && n >= 2 * r + 2 {
                entries.push((BoundRule::RegularWide, (2 * n - 5) as u32));
            }
        }
        if tags.triangle_free {
            entries.push((BoundRule::TriangleFree, (n - 1) as u32));
        }
        if tags.planar_by_construction {
            entries.push((BoundRule::PlanarTagged, (11 * n).div_ceil(6) as u32));
        }
        if tags.cubic {
            entries.push((BoundRule::CubicSimple, n as u32));
            // The only simple cubic graph on 4 vertices is complete.
            if n >= 6 {
                entries.push((BoundRule::CubicSimpleBeyondK4, (n - 1) as u32));
            }
        }
        if let Some((a, b)) = biregular_degrees(g, tags) {
            if n >= 2 * (a + b) {
                entries.push((BoundRule::BiregularWide, (n - 3) as u32));
            }
        }
    }
    if tags.connected && tags.cubic {
        entries.push((BoundRule::CubicMultigraph, (n + 1) as u32));
    }

    let effective = entries.iter().map(|&(_, v)| v).min().unwrap_or(0);
    BoundSet { entries, effective }
}

/// Part-wise uniform degrees of a bipartite graph.
fn biregular_degrees(g: &Multigraph, tags: &GraphClassTags) -> Option<(usize, usize)> {
    let (left, right) = tags.bipartition.as_ref()?;
    let (&first_left, &first_right) = (left.first()?, right.first()?);
    let a = g.degree(first_left);
    let b = g.degree(first_right);
    (left.iter().all(|&v| g.degree(v) == a) && right.iter().all(|&v| g.degree(v) == b))
        .then_some((a, b))
}
