//! Oracles shared by the integration tests. Nothing here calls the library's
//! metrics, canonical form or bounds code.
#![allow(dead_code)]

use std::collections::VecDeque;

use bimixed::MixedGraph;

/// Plain BFS over the associated digraph; `None` for unreachable.
pub fn bfs(g: &MixedGraph, s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        let d = dist[u].unwrap();
        for &v in g.edge_neighbours(u).iter().chain(g.out_arcs(u)) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

pub fn oracle_diameter(g: &MixedGraph) -> Option<u32> {
    let mut best = 0;
    for s in 0..g.n() {
        for d in bfs(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Exact isomorphism test for strongly connected graphs with at most one
/// edge partner and one out-arc per vertex: fixing the image of vertex 0
/// forces everything else along partners and arcs.
pub fn forced_isomorphic(g: &MixedGraph, h: &MixedGraph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() || g.arc_count() != h.arc_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    'image: for w in 0..n {
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = w;
        used[w] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            let pairs = [
                (g.edge_neighbours(u), h.edge_neighbours(map[u])),
                (g.out_arcs(u), h.out_arcs(map[u])),
            ];
            for (a, b) in pairs {
                if a.len() != b.len() {
                    continue 'image;
                }
                if let (Some(&x), Some(&y)) = (a.first(), b.first()) {
                    if map[x] == usize::MAX {
                        if used[y] {
                            continue 'image;
                        }
                        map[x] = y;
                        used[y] = true;
                        stack.push(x);
                    } else if map[x] != y {
                        continue 'image;
                    }
                }
            }
        }
        if map.iter().all(|&x| x != usize::MAX) {
            return true;
        }
    }
    false
}

/// Number of isomorphism classes, by pairwise forced isomorphism.
pub fn count_classes(graphs: &[MixedGraph]) -> usize {
    let mut reps: Vec<&MixedGraph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| forced_isomorphic(r, g)) {
            reps.push(g);
        }
    }
    reps.len()
}

/// All permutations of `0..p`, lexicographic.
pub fn permutations(p: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for s in 0..used.len() {
            if !used[s] {
                used[s] = true;
                cur.push(s);
                go(cur, used, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; p], &mut out);
    out
}

/// Every totally regular bipartite (1,1)-graph on `2p` vertices with edges
/// `{2j, 2j+1}` and diameter at most `k`, over all pairs of arc permutations.
pub fn brute_force_regular(p: usize, k: u32) -> Vec<MixedGraph> {
    let perms = permutations(p);
    let mut out = Vec::new();
    for s0 in &perms {
        for s1 in &perms {
            let mut g = MixedGraph::new(2 * p);
            for j in 0..p {
                g.add_edge(2 * j, 2 * j + 1).unwrap();
                g.add_arc(2 * j, 2 * s0[j] + 1).unwrap();
                g.add_arc(2 * j + 1, 2 * s1[j]).unwrap();
            }
            if bimixed::graph::validate_and_profile(&g).is_err() {
                continue;
            }
            if oracle_diameter(&g).is_some_and(|d| d <= k) {
                out.push(g);
            }
        }
    }
    out
}

/// `(sqrt(5)`-based closed form of the (1,1) bipartite Moore bound.
pub fn moore_closed_form(k: u32) -> f64 {
    let s5 = 5f64.sqrt();
    let (u1, u2) = ((1.0 - s5) / 2.0, (1.0 + s5) / 2.0);
    let (a, b) = ((s5 - 3.0) / (2.0 * s5), (s5 + 3.0) / (2.0 * s5));
    let term = |c: f64, u: f64| c * (u.powi(k as i32 + 1) - u) / (u * u - 1.0);
    2.0 * (term(a, u1) + term(b, u2))
}

/// Fibonacci numbers by Binet's formula, rounded.
pub fn binet(t: u32) -> u64 {
    let s5 = 5f64.sqrt();
    let phi = (1.0 + s5) / 2.0;
    (phi.powi(t as i32) / s5).round() as u64
}
