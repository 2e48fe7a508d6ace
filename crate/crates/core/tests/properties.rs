mod common;

use proptest::prelude::*;

use bimixed::bounds::{crm_upper, eta, improved_bound, moore_bipartite, MooreParams};
use bimixed::canon::{canonical_form, isomorphic};
use bimixed::format::{parse_any, parse_edge_list, to_dot, to_edge_list, to_json};
use bimixed::graph::{
    bipartition, contract_edges, converse, relabel, validate_and_profile, verify_isomorphism,
};
use bimixed::metrics::{diameter, diameter_at_most, eccentricity_report, Distance, DistanceMatrix};
use bimixed::search::{exhaustive_max_order, lift_search, LiftTemplate};
use bimixed::MixedGraph;

use common::{bfs, binet, forced_isomorphic, moore_closed_form, oracle_diameter};

/// Totally regular bipartite (1,1) graph from two arc permutations, or
/// `None` when they create a digon or an arc parallel to an edge.
fn regular_graph(s0: &[usize], s1: &[usize]) -> Option<MixedGraph> {
    let p = s0.len();
    let mut g = MixedGraph::new(2 * p);
    for j in 0..p {
        g.add_edge(2 * j, 2 * j + 1).ok()?;
        g.add_arc(2 * j, 2 * s0[j] + 1).ok()?;
        g.add_arc(2 * j + 1, 2 * s1[j]).ok()?;
    }
    validate_and_profile(&g).ok()?;
    Some(g)
}

fn regular_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
    (2usize..9).prop_flat_map(|p| {
        let perm = |n: usize| Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (perm(p), perm(p), perm(2 * p))
    })
}

/// Arbitrary graph with at most one edge and one arc per vertex (not
/// necessarily valid as a mixed graph).
fn sparse_strategy() -> impl Strategy<Value = MixedGraph> {
    (2usize..12).prop_flat_map(|n| {
        (
            Just(n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(prop::option::of(0..n), n),
            0..=n / 2,
        )
            .prop_map(|(n, order, arcs, pairs)| {
                let mut g = MixedGraph::new(n);
                for c in order.chunks(2).take(pairs) {
                    if let [u, v] = c {
                        g.add_edge(*u, *v).unwrap();
                    }
                }
                for (u, t) in arcs.into_iter().enumerate() {
                    if let Some(v) = t.filter(|&v| v != u) {
                        g.add_arc(u, v).unwrap();
                    }
                }
                g
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_relabelling_invariant((s0, s1, p) in regular_strategy()) {
        let Some(g) = regular_graph(&s0, &s1) else { return Ok(()); };
        prop_assume!(oracle_diameter(&g).is_some());
        let h = relabel(&g, &p).unwrap();
        prop_assert!(verify_isomorphism(&g, &h, &p).unwrap());
        let (cg, ch) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(&cg.code, &ch.code);
        prop_assert!(cg.graph(&g).same_structure(&ch.graph(&h)));
        prop_assert_eq!(isomorphic(&g, &h), Some(true));
    }

    #[test]
    fn canonical_form_agrees_with_forced_isomorphism(
        (a0, a1, _) in regular_strategy(),
        (b0, b1, _) in regular_strategy(),
    ) {
        let (Some(g), Some(h)) = (regular_graph(&a0, &a1), regular_graph(&b0, &b1)) else {
            return Ok(());
        };
        prop_assume!(oracle_diameter(&g).is_some() && oracle_diameter(&h).is_some());
        prop_assert_eq!(isomorphic(&g, &h), Some(forced_isomorphic(&g, &h)));
    }

    #[test]
    fn formats_round_trip(g in sparse_strategy()) {
        let text = to_edge_list(&g);
        prop_assert_eq!(to_edge_list(&parse_edge_list(&text).unwrap()), text.clone());
        prop_assert!(parse_any(&to_json(&g)).unwrap().same_structure(&g));
        let dot = parse_any(&to_dot(&g)).unwrap();
        // every vertex is emitted as a node, so isolated ones survive
        prop_assert!(dot.same_structure(&g));
    }

    #[test]
    fn distances_match_oracle(g in sparse_strategy()) {
        let dm = DistanceMatrix::compute(&g);
        for u in 0..g.n() {
            for (v, d) in bfs(&g, u).into_iter().enumerate() {
                prop_assert_eq!(dm.get(u, v), d.map_or(Distance::Infinite, Distance::Finite));
            }
        }
        let d = oracle_diameter(&g).map_or(Distance::Infinite, Distance::Finite);
        prop_assert_eq!(diameter(&g), d);
        for k in 0..8 {
            prop_assert_eq!(diameter_at_most(&g, k), d <= Distance::Finite(k));
        }
    }

    #[test]
    fn converse_swaps_eccentricities(g in sparse_strategy()) {
        let (a, b) = (eccentricity_report(&g), eccentricity_report(&converse(&g)));
        prop_assert_eq!(&a.ecc_out, &b.ecc_in);
        prop_assert_eq!(&a.ecc_in, &b.ecc_out);
        prop_assert_eq!(a.out_radius, b.in_radius);
        prop_assert_eq!(a.diameter, b.diameter);
        prop_assert!(converse(&converse(&g)).same_structure(&g));
    }

    #[test]
    fn bipartite_distances_have_colour_parity(g in sparse_strategy()) {
        let Some(cert) = bipartition(&g) else { return Ok(()); };
        prop_assert!(cert.verify(&g));
        let dm = DistanceMatrix::compute(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if let Distance::Finite(d) = dm.get(u, v) {
                    prop_assert_eq!(d % 2 == 0, cert.colour[u] == cert.colour[v]);
                }
            }
        }
    }

    #[test]
    fn contraction_of_regular_graphs((s0, s1, _) in regular_strategy()) {
        let Some(g) = regular_graph(&s0, &s1) else { return Ok(()); };
        let Ok(c) = contract_edges(&g) else { return Ok(()); };
        prop_assert_eq!(c.n(), g.n() / 2);
        prop_assert_eq!(c.edge_count(), 0);
        prop_assert!(c.arc_count() <= g.n());
    }

    #[test]
    fn moore_closed_form_rounds_cleanly(r in 1u64..4, z in 1u64..4, k in 1u32..12) {
        let m = moore_bipartite(r, z, k).unwrap();
        let x = MooreParams::new(r, z).closed_form(k).unwrap();
        prop_assert!((x - m as f64).abs() < 1e-6 * (m as f64).max(1.0));
    }
}

#[test]
fn moore_recurrence_matches_closed_form() {
    for k in 1..=16 {
        let m = moore_bipartite(1, 1, k).unwrap() as f64;
        assert!((m - moore_closed_form(k)).abs() < 1e-6, "k={k}");
    }
}

#[test]
fn eta_matches_binet() {
    assert_eq!(eta(1), 1);
    for t in 2..=40 {
        assert_eq!(eta(t), binet(t - 1), "t={t}");
    }
}

#[test]
fn bounds_are_ordered() {
    for k in 3..=22 {
        let (m, i, c) = (moore_bipartite(1, 1, k).unwrap(), improved_bound(k).unwrap(), crm_upper(k));
        assert!(c <= i && i <= m, "k={k}: {c} {i} {m}");
    }
}

#[test]
fn exhaustive_search_respects_improved_bound() {
    for k in 3..=4 {
        let r = exhaustive_max_order(k, 16, true, u64::MAX).unwrap();
        assert!(r.order.unwrap() as u64 <= improved_bound(k).unwrap());
        r.validate().unwrap();
    }
}

#[test]
fn lift_search_ignores_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| lift_search(6, &LiftTemplate::FourVertex, &[5, 6, 7, 8], 2_000, 9).unwrap())
    };
    let (a, b) = (run(1), run(4));
    assert_eq!(a.to_text(), b.to_text());
    a.validate().unwrap();
}
