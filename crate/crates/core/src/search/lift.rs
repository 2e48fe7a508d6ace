//! Voltage-lift search over cyclic groups.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::families::{lift, DartKind, VoltageBaseGraph};
use crate::format::to_edge_list;
use crate::graph::{bipartition, validate_and_profile, MixedGraph};

use super::reach::{successor_pairs, Reach};
use super::report::{SearchKind, SearchReport};

/// Witnesses kept in a lift report; the class count is still exact.
pub const MAX_LIFT_WITNESSES: usize = 8;

/// Base graphs whose voltages (and, for `FourVertex`, arc heads) are searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftTemplate {
    /// Vertices 0 and 1, edge `0~1` with voltage 0, arcs `0->1` and `1->0`.
    TwoVertex,
    /// Colour classes `{0,2}` and `{1,3}`, edges `0~1` and `2~3` with voltage
    /// 0, and one arc from each vertex to either vertex of the other class.
    FourVertex,
    /// The darts of the given base, every voltage free.
    Fixed(VoltageBaseGraph),
}

impl LiftTemplate {
    fn order(&self) -> usize {
        match self {
            LiftTemplate::TwoVertex => 2,
            LiftTemplate::FourVertex => 4,
            LiftTemplate::Fixed(b) => b.order(),
        }
    }

    /// Number of assignments over `Z_q`, saturating.
    pub fn space_size(&self, q: u64) -> u64 {
        let pow = |e: u32| q.checked_pow(e).unwrap_or(u64::MAX);
        match self {
            LiftTemplate::TwoVertex => pow(2),
            LiftTemplate::FourVertex => pow(4).saturating_mul(16),
            LiftTemplate::Fixed(b) => pow(b.darts().len() as u32),
        }
    }

    /// The base graph for assignment `idx < space_size(q)`; `None` when the
    /// assignment is not a legal base (an arc loop with voltage 0).
    pub fn decode(&self, q: u64, mut idx: u64) -> Option<VoltageBaseGraph> {
        let topo = idx % 16;
        if *self == LiftTemplate::FourVertex {
            idx /= 16;
        }
        let mut digit = || {
            let d = idx % q;
            idx /= q;
            d as i64
        };
        let mut base = VoltageBaseGraph::new(self.order(), q).ok()?;
        match self {
            LiftTemplate::TwoVertex => {
                base.add_edge(0, 1, 0).ok()?;
                base.add_arc(0, 1, digit()).ok()?;
                base.add_arc(1, 0, digit()).ok()?;
            }
            LiftTemplate::FourVertex => {
                base.add_edge(0, 1, 0).ok()?;
                base.add_edge(2, 3, 0).ok()?;
                let heads = [[1, 3], [0, 2], [1, 3], [0, 2]];
                for (v, h) in heads.iter().enumerate() {
                    let head = h[((topo >> v) & 1) as usize];
                    let g = digit();
                    base.add_arc(v, head, g).ok()?;
                }
            }
            LiftTemplate::Fixed(b) => {
                for d in b.darts() {
                    let g = digit();
                    match d.kind {
                        DartKind::Edge => base.add_edge(d.tail, d.head, g).ok()?,
                        DartKind::Arc => base.add_arc(d.tail, d.head, g).ok()?,
                    }
                }
            }
        }
        Some(base)
    }
}

/// Lift of assignment `idx` if it is a valid bipartite (1,1) graph with
/// diameter at most `k`.
fn evaluate(template: &LiftTemplate, q: u64, idx: u64, k: u32) -> Option<MixedGraph> {
    let base = template.decode(q, idx)?;
    let g = lift(&base).ok()?;
    let profile = validate_and_profile(&g).ok()?;
    if profile.max_undirected() > 1 || profile.max_out() > 1 {
        return None;
    }
    let succ = successor_pairs(&g)?;
    if !Reach::new(g.n()).within(&succ, k) || bipartition(&g).is_none() {
        return None;
    }
    Some(g)
}

/// Best lift of diameter at most `k` over `Z_q` for each `q` in `q_range`.
///
/// Each `q` gets `budget / |q_range|` candidates (at least one). When the
/// space fits it is enumerated; otherwise indices are drawn from a ChaCha8
/// stream keyed by `seed` and `q`, so reports depend only on the arguments.
pub fn lift_search(
    k: u32,
    template: &LiftTemplate,
    q_range: &[u64],
    budget: u64,
    seed: u64,
) -> Result<SearchReport> {
    if budget == 0 {
        return Err(Error::BadParams("budget must be positive".into()));
    }
    if q_range.contains(&0) {
        return Err(Error::BadParams("group order must be positive".into()));
    }
    let start = Instant::now();
    let mut report = SearchReport::empty(SearchKind::Lift, k, Some(seed));
    if q_range.is_empty() {
        return Ok(report);
    }
    let per_q = (budget / q_range.len() as u64).max(1);
    let mut best: BTreeMap<usize, BTreeMap<Vec<(u32, u32)>, MixedGraph>> = BTreeMap::new();
    for &q in q_range {
        let order = template.order() * q as usize;
        report.orders_tested.push(order);
        let space = template.space_size(q);
        let indices: Vec<u64> = if space <= per_q {
            (0..space).collect()
        } else {
            report.exhaustive = false;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(q);
            let mut v: Vec<u64> = (0..per_q).map(|_| rng.random_range(0..space)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        report.candidates += indices.len() as u64;
        let hits: Vec<MixedGraph> = indices
            .par_iter()
            .filter_map(|&i| evaluate(template, q, i, k))
            .collect();
        let slot = best.entry(order).or_default();
        for g in hits {
            let cf = canonical_form(&g).expect("strongly connected (1,1) graph");
            slot.entry(cf.code.clone()).or_insert_with(|| cf.graph(&g));
        }
    }
    if let Some((&order, classes)) = best.iter().rev().find(|(_, c)| !c.is_empty()) {
        report.order = Some(order);
        report.witness_classes = classes.len();
        let mut ws: Vec<(String, MixedGraph)> = classes
            .values()
            .map(|g| (to_edge_list(g), g.clone()))
            .collect();
        ws.sort_by(|a, b| a.0.cmp(&b.0));
        report.witnesses = ws
            .into_iter()
            .take(MAX_LIFT_WITNESSES)
            .map(|(_, g)| g)
            .collect();
    }
    report.wall_time = start.elapsed();
    Ok(report)
}
