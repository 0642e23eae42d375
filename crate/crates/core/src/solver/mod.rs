//! Exact decision and optimization: feasibility of an interval t-coloring,
//! the span extremes w(G) and W(G), the full feasible spectrum, and the
//! chromatic index.

mod bounds;
mod edge_color;
mod oracle;
mod search;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

pub use bounds::{bound_set, BoundRule, BoundSet};
pub use oracle::{brute_force_oracle, ORACLE_MAX_EDGES, ORACLE_MAX_SPAN};

use crate::coloring::IntervalCertificate;
use crate::error::{Error, Result};
use crate::graph::{GraphClassTags, Multigraph};
use search::{SearchLimits, SearchStats};

/// How the downward W-search picks its starting point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CapSource {
    /// Start at the least applicable class bound (fast path).
    #[default]
    Bounds,
    /// Start at the hypothesis-free window-cover bound only. Use this when a
    /// class bound is itself the claim under test, so the search does not
    /// presuppose it.
    WindowCoverOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMode {
    #[default]
    Full,
    MinSpanOnly,
    MaxSpanOnly,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Cap on any span submitted to the search; `None` derives
    /// max(2n-3, 2m-n+1), which never cuts below an attainable span.
    pub max_span: Option<u32>,
    pub max_nodes: Option<u64>,
    pub threads: usize,
    /// Decide colorability of regular graphs through the chromatic index
    /// (interval-colorable iff properly colorable with exactly max-degree
    /// colors) before any window search.
    pub regular_shortcut: bool,
    pub cap_source: CapSource,
    pub mode: SolveMode,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_vertices: 14,
            max_edges: 24,
            max_span: None,
            max_nodes: None,
            threads: 1,
            regular_shortcut: true,
            cap_source: CapSource::Bounds,
            mode: SolveMode::Full,
        }
    }
}

impl SolverConfig {
    fn span_cap(&self, g: &Multigraph) -> u32 {
        match self.max_span {
            Some(cap) => cap,
            None => {
                let n = g.vertex_count() as i64;
                let m = g.edge_count() as i64;
                (2 * n - 3).max(2 * m - n + 1).max(1) as u32
            }
        }
    }

    fn check_graph(&self, g: &Multigraph) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::SizeGuard {
                what: "solver vertex count",
                actual: g.vertex_count(),
                limit: self.max_vertices,
            });
        }
        if g.edge_count() > self.max_edges {
            return Err(Error::SizeGuard {
                what: "solver edge count",
                actual: g.edge_count(),
                limit: self.max_edges,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub prunes: u64,
    pub wall: Duration,
}

/// Verdict and optimization results for one connected multigraph.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub colorable: bool,
    pub min_span: Option<u32>,
    pub max_span: Option<u32>,
    /// Every feasible span found (all of [w, W] is tested in full mode; no
    /// contiguity is assumed).
    pub spectrum: Vec<u32>,
    /// One verified certificate per feasible span reported.
    pub certificates: BTreeMap<u32, IntervalCertificate>,
    pub stats: SolveStats,
    /// Spans proven infeasible by exhausted search during this solve.
    pub refuted: Vec<u32>,
}

/// Searches for an interval t-coloring of a connected multigraph and
/// returns a verified certificate when one exists.
pub fn feasible(g: &Multigraph, t: u32) -> Result<Option<IntervalCertificate>> {
    feasible_with(g, t, &SolverConfig::default())
}

pub fn feasible_with(
    g: &Multigraph,
    t: u32,
    config: &SolverConfig,
) -> Result<Option<IntervalCertificate>> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "feasible",
        });
    }
    config.check_graph(g)?;
    let cap = config.span_cap(g).min(62);
    if t > cap {
        return Err(Error::SizeGuard {
            what: "span",
            actual: t as usize,
            limit: cap as usize,
        });
    }
    let limits = SearchLimits {
        max_nodes: config.max_nodes,
        threads: config.threads,
    };
    search::search(g, t, &limits).map(|(cert, _)| cert)
}

/// Exact chromatic index by upward search from the maximum degree.
pub fn chromatic_index(g: &Multigraph) -> Result<u32> {
    chromatic_index_with(g, &SolverConfig::default())
}

pub fn chromatic_index_with(g: &Multigraph, config: &SolverConfig) -> Result<u32> {
    config.check_graph(g)?;
    let mut stats = edge_color::EdgeColorStats::default();
    Ok(edge_color::chromatic_index(g, &mut stats))
}

/// Full solve: colorability, w, W, and the spectrum, with certificates.
pub fn solve(g: &Multigraph) -> Result<SolveReport> {
    solve_with(g, &SolverConfig::default())
}

pub fn solve_with(g: &Multigraph, config: &SolverConfig) -> Result<SolveReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected { operation: "solve" });
    }
    config.check_graph(g)?;
    let start = Instant::now();
    let mut stats = SolveStats::default();
    let mut report = SolveReport {
        colorable: false,
        min_span: None,
        max_span: None,
        spectrum: Vec::new(),
        certificates: BTreeMap::new(),
        stats: SolveStats::default(),
        refuted: Vec::new(),
    };

    if g.edge_count() == 0 {
        // A single vertex: no edge can carry color 1.
        report.stats.wall = start.elapsed();
        return Ok(report);
    }

    let delta = g.max_degree() as u32;
    let tags = GraphClassTags::derive(g);
    let bounds = bound_set(g, &tags);
    let upper = match config.cap_source {
        CapSource::Bounds => bounds.effective,
        CapSource::WindowCoverOnly => bounds
            .value(BoundRule::WindowCover)
            .unwrap_or(bounds.effective),
    }
    .min(config.span_cap(g))
    .min(62);

    let limits = SearchLimits {
        max_nodes: config.max_nodes,
        threads: config.threads,
    };

    // Regular graphs: interval-colorable iff the chromatic index equals the
    // degree, and a proper delta-coloring is itself an interval coloring.
    let mut min_span_cert: Option<IntervalCertificate> = None;
    if config.regular_shortcut && tags.regular_degree.is_some() {
        let mut ec_stats = edge_color::EdgeColorStats::default();
        let chi = edge_color::chromatic_index(g, &mut ec_stats);
        stats.nodes += ec_stats.nodes;
        if chi != delta {
            report.stats = stats;
            report.stats.wall = start.elapsed();
            return Ok(report);
        }
        let mut ec_stats = edge_color::EdgeColorStats::default();
        let colors = edge_color::proper_coloring(g, delta, &mut ec_stats)
            .expect("chromatic index equals max degree");
        stats.nodes += ec_stats.nodes;
        let coloring = crate::coloring::EdgeColoring::new(colors)?;
        min_span_cert = Some(IntervalCertificate::assemble(g.clone(), coloring, delta)?);
    }

    let mut run = |t: u32, stats: &mut SolveStats| -> Result<Option<IntervalCertificate>> {
        let (cert, s): (Option<IntervalCertificate>, SearchStats) = search::search(g, t, &limits)?;
        stats.nodes += s.nodes;
        stats.prunes += s.prunes;
        Ok(cert)
    };

    // Minimum span: upward from the max degree to first success.
    let mut min_span = None;
    if let Some(cert) = min_span_cert {
        min_span = Some(delta);
        report.certificates.insert(delta, cert);
    } else if config.mode != SolveMode::MaxSpanOnly {
        for t in delta..=upper {
            if let Some(cert) = run(t, &mut stats)? {
                min_span = Some(t);
                report.certificates.insert(t, cert);
                break;
            }
            report.refuted.push(t);
        }
        if min_span.is_none() {
            // Exhausted every span up to a sound upper bound.
            report.stats = stats;
            report.stats.wall = start.elapsed();
            return Ok(report);
        }
    }

    // Maximum span: downward from the bound to first success.
    let mut max_span = None;
    if config.mode != SolveMode::MinSpanOnly {
        let floor = min_span.unwrap_or(delta);
        for t in (floor..=upper).rev() {
            if let Some(cert) = run(t, &mut stats)? {
                max_span = Some(t);
                report.certificates.insert(t, cert);
                break;
            }
            report.refuted.push(t);
        }
        if max_span.is_none() {
            // Only reachable in max-only mode: nothing feasible at all.
            report.stats = stats;
            report.stats.wall = start.elapsed();
            return Ok(report);
        }
        if min_span.is_none() {
            // Max-only mode found some span, so the graph is colorable.
            min_span = max_span;
        }
    }

    // Spectrum: every span between the extremes, no contiguity assumed.
    if config.mode == SolveMode::Full {
        let (w, big_w) = (min_span.unwrap(), max_span.unwrap());
        for t in w..=big_w {
            if report.certificates.contains_key(&t) {
                continue;
            }
            if let Some(cert) = run(t, &mut stats)? {
                report.certificates.insert(t, cert);
            } else {
                report.refuted.push(t);
            }
        }
        report.spectrum = report.certificates.keys().copied().collect();
    } else {
        report.spectrum = report.certificates.keys().copied().collect();
    }

    report.colorable = min_span.is_some();
    report.min_span = min_span;
    report.max_span = max_span.or(min_span).filter(|_| config.mode != SolveMode::MinSpanOnly);
    if config.mode == SolveMode::MinSpanOnly {
        report.max_span = None;
    }
    report.refuted.sort_unstable();
    report.refuted.dedup();
    report.stats = stats;
    report.stats.wall = start.elapsed();
    Ok(report)
}
