//! Edge colorings, the interval property, and self-contained certificates.
//!
//! An interval t-coloring assigns colors 1..=t to the edge slots so that
//! every color is used, the colors at each vertex are distinct, and they
//! form a run of d(v) consecutive integers.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// A total map from edge index to a positive color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(index) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { index });
        }
        Ok(EdgeColoring { colors })
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn min_color(&self) -> u32 {
        self.colors.iter().copied().min().unwrap_or(0)
    }
}

/// Outcome of the interval check: the span on success, or the first failure
/// in scan order (vertices ascending, then colors ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalVerdict {
    Ok { t: u32 },
    Violation(Violation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two slots at `vertex` share a color.
    NotProper { vertex: usize },
    /// The colors at `vertex` are distinct but not consecutive.
    NotConsecutive { vertex: usize },
    /// Color 1 is unused (the coloring does not start at 1).
    NotStartingAt1 { min_color: u32 },
    /// `color` lies strictly between used colors but no edge carries it.
    GapInColors { color: u32 },
}

impl IntervalVerdict {
    pub fn ok_t(&self) -> Option<u32> {
        match self {
            IntervalVerdict::Ok { t } => Some(*t),
            IntervalVerdict::Violation(_) => None,
        }
    }
}

fn check_total(g: &Multigraph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::PartialColoring {
            got: c.len(),
            expected: g.edge_count(),
        });
    }
    Ok(())
}

/// Sorted multiset of the colors on `v`'s incident slots.
pub fn vertex_spectrum(g: &Multigraph, c: &EdgeColoring, v: usize) -> Result<Vec<u32>> {
    check_total(g, c)?;
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    let mut spectrum: Vec<u32> = g.incidences(v).iter().map(|&(_, e)| c.color(e)).collect();
    spectrum.sort_unstable();
    Ok(spectrum)
}

/// Decides whether `c` is an interval t-coloring of `g` and reports the
/// span or the first violation.
pub fn interval_verdict(g: &Multigraph, c: &EdgeColoring) -> Result<IntervalVerdict> {
    check_total(g, c)?;
    for v in 0..g.vertex_count() {
        let spectrum = vertex_spectrum(g, c, v)?;
        for pair in spectrum.windows(2) {
            if pair[0] == pair[1] {
                return Ok(IntervalVerdict::Violation(Violation::NotProper { vertex: v }));
            }
        }
        for pair in spectrum.windows(2) {
            if pair[1] != pair[0] + 1 {
                return Ok(IntervalVerdict::Violation(Violation::NotConsecutive {
                    vertex: v,
                }));
            }
        }
    }
    let min = c.min_color();
    if min != 1 {
        return Ok(IntervalVerdict::Violation(Violation::NotStartingAt1 {
            min_color: min,
        }));
    }
    let max = c.max_color();
    let mut used = vec![false; (max + 1) as usize];
    for &color in c.colors() {
        used[color as usize] = true;
    }
    for color in 1..=max {
        if !used[color as usize] {
            return Ok(IntervalVerdict::Violation(Violation::GapInColors { color }));
        }
    }
    Ok(IntervalVerdict::Ok { t: max })
}

/// Shifts all colors down so the minimum becomes 1. Preserves the interval
/// verdict and span.
pub fn normalize(g: &Multigraph, c: &EdgeColoring) -> Result<EdgeColoring> {
    check_total(g, c)?;
    if c.is_empty() {
        return Ok(c.clone());
    }
    let shift = c.min_color() - 1;
    EdgeColoring::new(c.colors().iter().map(|&x| x - shift).collect())
}

/// Mirror symmetry c -> t+1-c of an interval t-coloring. Errors when the
/// input is not an interval t-coloring for the given `t`.
pub fn reverse(g: &Multigraph, c: &EdgeColoring, t: u32) -> Result<EdgeColoring> {
    match interval_verdict(g, c)? {
        IntervalVerdict::Ok { t: got } if got == t => {}
        verdict => {
            return Err(Error::NotInterval {
                t,
                reason: format!("{verdict:?}"),
            })
        }
    }
    EdgeColoring::new(c.colors().iter().map(|&x| t + 1 - x).collect())
}

/// A self-contained proof that a graph admits an interval t-coloring: the
/// graph, the coloring, the span, and the per-vertex color windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCertificate {
    pub graph: Multigraph,
    pub coloring: EdgeColoring,
    pub t: u32,
    /// Inclusive (lo, hi) per vertex; (1, 0) for an isolated vertex.
    pub windows: Vec<(u32, u32)>,
}

impl IntervalCertificate {
    /// Assembles a certificate from a verified interval coloring, computing
    /// the windows. Errors when the coloring is not interval with span `t`.
    pub fn assemble(graph: Multigraph, coloring: EdgeColoring, t: u32) -> Result<Self> {
        match interval_verdict(&graph, &coloring)? {
            IntervalVerdict::Ok { t: got } if got == t => {}
            verdict => {
                return Err(Error::NotInterval {
                    t,
                    reason: format!("{verdict:?}"),
                })
            }
        }
        let windows = (0..graph.vertex_count())
            .map(|v| {
                let spectrum = vertex_spectrum(&graph, &coloring, v).expect("total coloring");
                match (spectrum.first(), spectrum.last()) {
                    (Some(&lo), Some(&hi)) => (lo, hi),
                    _ => (1, 0),
                }
            })
            .collect();
        Ok(IntervalCertificate {
            graph,
            coloring,
            t,
            windows,
        })
    }
}

/// Result of re-checking a certificate from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// Recomputes every certificate invariant: the coloring is total, is an
/// interval coloring with span exactly `t`, and the stored windows equal
/// the recomputed vertex spectra ranges.
pub fn verify_certificate(cert: &IntervalCertificate) -> CertificateCheck {
    let mut diagnostics = Vec::new();
    let g = &cert.graph;
    if cert.coloring.len() != g.edge_count() {
        diagnostics.push(format!(
            "coloring assigns {} edges but the graph has {}",
            cert.coloring.len(),
            g.edge_count()
        ));
        return CertificateCheck {
            ok: false,
            diagnostics,
        };
    }
    match interval_verdict(g, &cert.coloring) {
        Ok(IntervalVerdict::Ok { t }) => {
            if t != cert.t {
                diagnostics.push(format!(
                    "certificate claims span {} but the coloring has span {}",
                    cert.t, t
                ));
            }
        }
        Ok(IntervalVerdict::Violation(v)) => {
            diagnostics.push(format!("not an interval coloring: {v:?}"));
        }
        Err(e) => diagnostics.push(e.to_string()),
    }
    if cert.windows.len() != g.vertex_count() {
        diagnostics.push(format!(
            "certificate stores {} windows for {} vertices",
            cert.windows.len(),
            g.vertex_count()
        ));
    } else {
        for v in 0..g.vertex_count() {
            let spectrum = match vertex_spectrum(g, &cert.coloring, v) {
                Ok(s) => s,
                Err(_) => break,
            };
            let recomputed = match (spectrum.first(), spectrum.last()) {
                (Some(&lo), Some(&hi)) => (lo, hi),
                _ => (1, 0),
            };
            if cert.windows[v] != recomputed {
                diagnostics.push(format!(
                    "window mismatch at vertex {v}: stored {:?}, recomputed {:?}",
                    cert.windows[v], recomputed
                ));
            }
            let d = g.degree(v) as u32;
            let (lo, hi) = cert.windows[v];
            if hi + 1 < lo || hi + 1 - lo != d {
                diagnostics.push(format!(
                    "window ({lo},{hi}) at vertex {v} does not span its degree {d}"
                ));
            }
        }
    }
    CertificateCheck {
        ok: diagnostics.is_empty(),
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn k4() -> Multigraph {
        families::k4().unwrap()
    }

    /// The reference 4-coloring of K4 on edges ab,ac,ad,bc,bd,cd.
    fn k4_four_coloring() -> EdgeColoring {
        EdgeColoring::new(vec![1, 2, 3, 3, 2, 4]).unwrap()
    }

    #[test]
    fn spectra_of_the_reference_coloring() {
        let g = k4();
        let c = k4_four_coloring();
        assert_eq!(vertex_spectrum(&g, &c, 0).unwrap(), vec![1, 2, 3]);
        assert_eq!(vertex_spectrum(&g, &c, 2).unwrap(), vec![2, 3, 4]);
        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let c2 = EdgeColoring::new(vec![1]).unwrap();
        assert_eq!(vertex_spectrum(&k2, &c2, 0).unwrap(), vec![1]);
        assert_eq!(vertex_spectrum(&k2, &c2, 1).unwrap(), vec![1]);
    }

    #[test]
    fn verdicts() {
        let g = k4();
        assert_eq!(
            interval_verdict(&g, &k4_four_coloring()).unwrap(),
            IntervalVerdict::Ok { t: 4 }
        );
        // Perfect-matching 3-coloring: ab=cd=1, ac=bd=2, ad=bc=3.
        let matchings = EdgeColoring::new(vec![1, 2, 3, 3, 2, 1]).unwrap();
        assert_eq!(
            interval_verdict(&g, &matchings).unwrap(),
            IntervalVerdict::Ok { t: 3 }
        );
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = EdgeColoring::new(vec![1, 3]).unwrap();
        assert_eq!(
            interval_verdict(&path, &c).unwrap(),
            IntervalVerdict::Violation(Violation::NotConsecutive { vertex: 1 })
        );
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let clash = EdgeColoring::new(vec![2, 2]).unwrap();
        assert_eq!(
            interval_verdict(&digon, &clash).unwrap(),
            IntervalVerdict::Violation(Violation::NotProper { vertex: 0 })
        );
        let shifted = EdgeColoring::new(vec![2, 3]).unwrap();
        assert_eq!(
            interval_verdict(&digon, &shifted).unwrap(),
            IntervalVerdict::Violation(Violation::NotStartingAt1 { min_color: 2 })
        );
        // Two disjoint edges colored 1 and 3: color 2 is missing.
        let pair = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let gappy = EdgeColoring::new(vec![1, 3]).unwrap();
        assert_eq!(
            interval_verdict(&pair, &gappy).unwrap(),
            IntervalVerdict::Violation(Violation::GapInColors { color: 2 })
        );
        let partial = EdgeColoring::new(vec![1]).unwrap();
        assert!(interval_verdict(&g, &partial).is_err());
    }

    #[test]
    fn normalize_shifts_to_one() {
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = EdgeColoring::new(vec![5, 6]).unwrap();
        assert_eq!(normalize(&path, &c).unwrap().colors(), &[1, 2]);
        let already = EdgeColoring::new(vec![1, 2]).unwrap();
        assert_eq!(normalize(&path, &already).unwrap(), already);
        let g = k4();
        let shifted =
            EdgeColoring::new(k4_four_coloring().colors().iter().map(|&x| x + 10).collect())
                .unwrap();
        assert_eq!(normalize(&g, &shifted).unwrap(), k4_four_coloring());
    }

    #[test]
    fn reverse_is_an_involution() {
        let g = k4();
        let c = k4_four_coloring();
        let r = reverse(&g, &c, 4).unwrap();
        assert_eq!(r.colors(), &[4, 3, 2, 2, 3, 1]);
        assert_eq!(interval_verdict(&g, &r).unwrap(), IntervalVerdict::Ok { t: 4 });
        assert_eq!(reverse(&g, &r, 4).unwrap(), c);
        // t = 1 is a fixed point.
        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let one = EdgeColoring::new(vec![1]).unwrap();
        assert_eq!(reverse(&k2, &one, 1).unwrap(), one);
        // Rejects a non-interval input.
        let bad = EdgeColoring::new(vec![1, 1, 1, 1, 1, 1]).unwrap();
        assert!(reverse(&g, &bad, 1).is_err());
        assert!(reverse(&g, &c, 5).is_err());
    }

    #[test]
    fn certificates_verify_and_fail_closed() {
        let cert = IntervalCertificate::assemble(k4(), k4_four_coloring(), 4).unwrap();
        assert_eq!(cert.windows, vec![(1, 3), (1, 3), (2, 4), (2, 4)]);
        assert!(verify_certificate(&cert).ok);

        let mut wrong_t = cert.clone();
        wrong_t.t = 5;
        let check = verify_certificate(&wrong_t);
        assert!(!check.ok);
        assert!(check.diagnostics[0].contains("span"));

        let mut wrong_window = cert.clone();
        wrong_window.windows[0] = (2, 4);
        let check = verify_certificate(&wrong_window);
        assert!(!check.ok);
        assert!(check.diagnostics.iter().any(|d| d.contains("window mismatch")));

        assert!(IntervalCertificate::assemble(k4(), k4_four_coloring(), 5).is_err());
    }
}
