//! Definition-level oracle: enumerate every coloring and test it.
//!
//! Exists to validate the window search on small instances; it shares no
//! code with the search. Hard caps keep the t^m sweep at desk scale.

use crate::coloring::{interval_verdict, EdgeColoring, IntervalVerdict};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const ORACLE_MAX_EDGES: usize = 8;
pub const ORACLE_MAX_SPAN: u32 = 8;

/// True iff some assignment of colors 1..=t to the edge slots is an
/// interval t-coloring (span exactly t).
pub fn brute_force_oracle(g: &Multigraph, t: u32) -> Result<bool> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::SizeGuard {
            what: "oracle edge count",
            actual: m,
            limit: ORACLE_MAX_EDGES,
        });
    }
    if t > ORACLE_MAX_SPAN {
        return Err(Error::SizeGuard {
            what: "oracle span",
            actual: t as usize,
            limit: ORACLE_MAX_SPAN as usize,
        });
    }
    if m == 0 || t == 0 {
        return Ok(false);
    }
    let mut assignment = vec![1u32; m];
    loop {
        let coloring = EdgeColoring::new(assignment.clone())?;
        if interval_verdict(g, &coloring)? == (IntervalVerdict::Ok { t }) {
            return Ok(true);
        }
        // Odometer increment over base-t digits.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(false);
            }
            if assignment[i] < t {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 1;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_never_interval() {
        let c3 = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        for t in 1..=4 {
            assert!(!brute_force_oracle(&c3, t).unwrap(), "t={t}");
        }
    }

    #[test]
    fn paths_and_even_cycles() {
        let p3 = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(brute_force_oracle(&p3, 2).unwrap());
        assert!(!brute_force_oracle(&p3, 3).unwrap());
        let c4 = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(brute_force_oracle(&c4, 2).unwrap());
        assert!(brute_force_oracle(&c4, 3).unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let big = crate::families::prism(3).unwrap();
        assert!(matches!(
            brute_force_oracle(&big, 3),
            Err(Error::SizeGuard { .. })
        ));
        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(matches!(
            brute_force_oracle(&k2, 9),
            Err(Error::SizeGuard { .. })
        ));
    }
}
