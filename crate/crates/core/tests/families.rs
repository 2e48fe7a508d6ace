mod common;

use std::collections::BTreeSet;

use bimixed::families::{
    bdm, bdm_star, canonical_m, cdrm, crm, lift, max_distance_row, CdrmConvention,
    VoltageBaseGraph,
};
use bimixed::search::cdrm_scan;
use bimixed::Distance;

use common::{bfs, forced_isomorphic, oracle_diameter};

/// Rows 1..8 of the max-distance table for CRM(n,c), each vertex written as
/// `a·c + b`.
const TABLE5: [&[(i64, i64)]; 8] = [
    &[(-1, 1), (0, 1)],
    &[(-1, 2), (0, 2)],
    &[(-2, 2), (-1, 3), (0, 3), (1, 2)],
    &[(-2, 3), (-1, 4), (0, 4), (1, 3)],
    &[(-3, 3), (-2, 4), (-1, 5), (0, 5), (1, 4), (2, 3)],
    &[(-3, 4), (-2, 5), (-1, 6), (0, 6), (1, 5), (2, 4)],
    &[(-4, 4), (-3, 5), (-2, 6), (-1, 7), (0, 7), (1, 6), (2, 5), (3, 4)],
    &[(-4, 5), (-3, 6), (-2, 7), (-1, 8), (0, 8), (1, 7), (2, 6), (3, 5)],
];

fn table5_row(d: usize, c: usize, n: usize) -> BTreeSet<usize> {
    TABLE5[d - 1]
        .iter()
        .map(|&(a, b)| (a * c as i64 + b).rem_euclid(n as i64) as usize)
        .collect()
}

#[test]
fn max_distance_rows_match_table() {
    for (n, c) in [(2000, 101), (1000, 57), (4000, 333)] {
        for d in 1..=8 {
            assert_eq!(max_distance_row(d as u32, c, n), table5_row(d, c, n), "n={n} c={c} d={d}");
        }
    }
}

/// The table's row `d` lists `i + 1` for the vertices `i` whose larger
/// distance from `0` and from `-c` equals `d`, on a CRM large enough that
/// short walks do not wrap.
#[test]
fn max_distance_rows_match_bfs() {
    let (n, c) = (2000, 101);
    let g = crm(n, c).unwrap();
    let (from0, fromc) = (bfs(&g, 0), bfs(&g, n - c));
    for d in 1..=8u32 {
        let got: BTreeSet<usize> = (0..n)
            .filter(|&i| from0[i].unwrap().max(fromc[i].unwrap()) == d)
            .map(|i| (i + 1) % n)
            .collect();
        assert_eq!(got, table5_row(d as usize, c, n), "d={d}");
    }
}

#[test]
fn cdrm_scan_matches_oracle_scan() {
    for m in [6, 10, 14, 26] {
        let mut best = u32::MAX;
        for c in (1..m).step_by(2) {
            for conv in [CdrmConvention::Shift, CdrmConvention::Reflect] {
                if let Some(d) = oracle_diameter(&cdrm(m, c, conv).unwrap()) {
                    best = best.min(d);
                }
            }
        }
        assert_eq!(cdrm_scan(m).unwrap().diameter, Distance::Finite(best), "m={m}");
    }
    assert!(cdrm_scan(7).is_err());
    assert!(cdrm_scan(0).is_err());
}

#[test]
fn bdm_diameters_by_oracle() {
    for n in 3..=7 {
        let m = canonical_m(n).unwrap();
        assert_eq!(oracle_diameter(&bdm(m).unwrap()), Some(2 * n), "n={n}");
    }
}

#[test]
fn bdm_star_diameters_by_oracle() {
    for (n, want) in [(4, 7), (5, 10), (6, 11)] {
        let g = bdm_star(canonical_m(n).unwrap()).unwrap();
        assert_eq!(oracle_diameter(&g), Some(want), "n={n}");
    }
    assert!(bdm_star(12).is_err());
}

#[test]
fn voltage_lift_is_bdm_2_5() {
    let l = lift(&VoltageBaseGraph::bdm5_base()).unwrap();
    assert!(forced_isomorphic(&l, &bdm(5).unwrap()));
}

#[test]
fn crm_rejects_bad_parameters() {
    for (n, c) in [(9, 3), (10, 4), (10, 1), (10, 9), (6, 5)] {
        assert!(crm(n, c).is_err(), "n={n} c={c}");
    }
    assert_eq!(oracle_diameter(&crm(8, 3).unwrap()), Some(3));
}
