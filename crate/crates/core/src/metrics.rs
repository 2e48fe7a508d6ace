//! Distances, eccentricities, diameter and radii.
//!
//! All distances are measured in the associated digraph: an edge can be
//! traversed both ways, an arc only forwards.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::graph::MixedGraph;

/// A path length, or `Infinite` when no path exists. `Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

const UNREACHED: u32 = u32::MAX;

fn bfs_row(g: &MixedGraph, src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for v in g.successors(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn to_distance(d: u32) -> Distance {
    if d == UNREACHED {
        Distance::Infinite
    } else {
        Distance::Finite(d)
    }
}

/// Shortest mixed-path lengths from `src` to every vertex.
pub fn distances_from(g: &MixedGraph, src: usize) -> Vec<Distance> {
    assert!(src < g.n(), "source {src} out of range");
    bfs_row(g, src).into_iter().map(to_distance).collect()
}

/// All-pairs distances, one BFS per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &MixedGraph) -> Self {
        let n = g.n();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect();
        Self {
            n,
            data: rows.concat(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        to_distance(self.data[u * self.n + v])
    }

    pub fn diameter(&self) -> Distance {
        self.data
            .iter()
            .copied()
            .map(to_distance)
            .max()
            .unwrap_or(Distance::Finite(0))
    }
}

/// Eccentricities, diameter and radii of a mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityReport {
    pub ecc_out: Vec<Distance>,
    pub ecc_in: Vec<Distance>,
    pub diameter: Distance,
    pub out_radius: Distance,
    pub in_radius: Distance,
    pub out_central: Vec<usize>,
    pub in_central: Vec<usize>,
}

pub fn eccentricity_report(g: &MixedGraph) -> EccentricityReport {
    report_from_matrix(&DistanceMatrix::compute(g))
}

pub fn report_from_matrix(dm: &DistanceMatrix) -> EccentricityReport {
    let n = dm.n();
    let ecc_out: Vec<Distance> = (0..n)
        .map(|u| (0..n).map(|v| dm.get(u, v)).max().unwrap_or(Distance::Finite(0)))
        .collect();
    let ecc_in: Vec<Distance> = (0..n)
        .map(|u| (0..n).map(|v| dm.get(v, u)).max().unwrap_or(Distance::Finite(0)))
        .collect();
    let zero = Distance::Finite(0);
    let diameter = ecc_out.iter().copied().max().unwrap_or(zero);
    let out_radius = ecc_out.iter().copied().min().unwrap_or(zero);
    let in_radius = ecc_in.iter().copied().min().unwrap_or(zero);
    let central = |ecc: &[Distance], r: Distance| -> Vec<usize> {
        (0..n).filter(|&u| ecc[u] == r).collect()
    };
    EccentricityReport {
        out_central: central(&ecc_out, out_radius),
        in_central: central(&ecc_in, in_radius),
        ecc_out,
        ecc_in,
        diameter,
        out_radius,
        in_radius,
    }
}

/// Diameter only; cheaper than a full report.
pub fn diameter(g: &MixedGraph) -> Distance {
    (0..g.n())
        .into_par_iter()
        .map(|s| {
            bfs_row(g, s)
                .into_iter()
                .max()
                .map_or(Distance::Finite(0), to_distance)
        })
        .max()
        .unwrap_or(Distance::Finite(0))
}

/// True iff every vertex reaches every other within `k` steps. Each BFS stops
/// at depth `k`, and the scan stops at the first failing source.
pub fn diameter_at_most(g: &MixedGraph, k: u32) -> bool {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = UNREACHED);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for v in g.successors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    seen += 1;
                    queue.push_back(v);
                }
            }
        }
        if seen < n {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> MixedGraph {
        let mut g = MixedGraph::new(n);
        for i in 0..n {
            g.add_arc(i, (i + 1) % n).unwrap();
        }
        g
    }

    #[test]
    fn cycle_distances() {
        let row: Vec<_> = distances_from(&directed_cycle(5), 0)
            .into_iter()
            .map(|d| d.finite().unwrap())
            .collect();
        assert_eq!(row, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn single_edge() {
        let mut g = MixedGraph::new(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(
            distances_from(&g, 0),
            vec![Distance::Finite(0), Distance::Finite(1)]
        );
        assert_eq!(diameter(&g), Distance::Finite(1));
    }

    #[test]
    fn cycle_report() {
        for n in 2..9 {
            let r = eccentricity_report(&directed_cycle(n));
            let want = Distance::Finite(n as u32 - 1);
            assert_eq!(r.diameter, want);
            assert_eq!(r.out_radius, want);
            assert_eq!(r.in_radius, want);
            assert_eq!(r.out_central.len(), n);
        }
    }

    #[test]
    fn unreachable_pairs_make_diameter_infinite() {
        let mut g = MixedGraph::new(3);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 2).unwrap();
        assert_eq!(diameter(&g), Distance::Infinite);
        assert_eq!(eccentricity_report(&g).diameter, Distance::Infinite);
        assert_eq!(eccentricity_report(&g).out_radius, Distance::Finite(2));
        assert!(!diameter_at_most(&g, 10));
    }

    #[test]
    fn bounded_check_matches_diameter() {
        let g = directed_cycle(6);
        assert!(diameter_at_most(&g, 5));
        assert!(!diameter_at_most(&g, 4));
    }
}
