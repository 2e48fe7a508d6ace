//! Exhaustive maximum-order search over bipartite (1,1)-mixed graphs.
//!
//! Totally regular mode labels the graph so that the edges are `{2j, 2j+1}`
//! with `2j` in colour class 0. The arcs are then two permutations of the
//! pairs, `2j -> 2σ0(j)+1` and `2j+1 -> 2σ1(j)`. Relabelling pairs conjugates
//! both, so `σ0` runs over one representative per cycle type and `σ1` over
//! all of `S_p`.
//!
//! General mode allows missing edges and arcs and arbitrary in-degree. Colour
//! classes are `0..a` and `a..n` with `a <= n - a`, the `e` edges are
//! `{i, a+i}` for `i < e`, and every vertex picks an arc target in the other
//! class or none.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::moore_bipartite;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::format::to_edge_list;
use crate::graph::MixedGraph;

use super::reach::{Reach, NO};
use super::report::{SearchKind, SearchReport};

/// Tasks evaluated in parallel between budget checks.
const BATCH: usize = 64;

type Found = BTreeMap<Vec<(u32, u32)>, MixedGraph>;

struct TaskResult {
    candidates: u64,
    found: Found,
}

/// Largest even order `n <= n_max` admitting a bipartite (1,1)-mixed graph
/// of diameter at most `k`, trying orders from `n_max` down.
///
/// Orders above the bipartite Moore bound are skipped. `budget` caps the
/// candidates per order; it is checked between batches of tasks, so a level
/// may overshoot slightly. An order whose enumeration was cut short clears
/// the `exhaustive` flag.
pub fn exhaustive_max_order(
    k: u32,
    n_max: usize,
    totally_regular_only: bool,
    budget: u64,
) -> Result<SearchReport> {
    if k == 0 {
        return Err(Error::UnsupportedK(k));
    }
    let start = Instant::now();
    let mut report = SearchReport::empty(SearchKind::Exhaustive, k, None);
    let moore = moore_bipartite(1, 1, k)? as usize;
    let mut n = n_max.min(moore) & !1;
    while n >= 2 {
        report.orders_tested.push(n);
        let tasks = if totally_regular_only {
            regular_tasks(n / 2)
        } else {
            general_tasks(n)
        };
        let (candidates, complete, found) = run_tasks(&tasks, n, k, budget);
        report.candidates += candidates;
        report.exhaustive &= complete;
        if !found.is_empty() {
            report.order = Some(n);
            report.witness_classes = found.len();
            let mut ws: Vec<(String, MixedGraph)> = found
                .into_values()
                .map(|g| (to_edge_list(&g), g))
                .collect();
            ws.sort_by(|a, b| a.0.cmp(&b.0));
            report.witnesses = ws.into_iter().map(|(_, g)| g).collect();
            break;
        }
        n -= 2;
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

enum Task {
    Regular { sigma0: Vec<usize>, prefix: Vec<usize> },
    General { a: usize, e: usize, prefix: Vec<usize> },
}

fn run_tasks(tasks: &[Task], n: usize, k: u32, budget: u64) -> (u64, bool, Found) {
    let mut candidates = 0u64;
    let mut found = Found::new();
    for batch in tasks.chunks(BATCH) {
        if candidates >= budget {
            return (candidates, false, found);
        }
        let results: Vec<TaskResult> = batch.par_iter().map(|t| run_task(t, n, k)).collect();
        for r in results {
            candidates += r.candidates;
            for (code, g) in r.found {
                found.entry(code).or_insert(g);
            }
        }
    }
    (candidates, true, found)
}

fn run_task(task: &Task, n: usize, k: u32) -> TaskResult {
    let mut ctx = Ctx {
        k,
        reach: Reach::new(n),
        succ: vec![[NO, NO]; n],
        out: TaskResult {
            candidates: 0,
            found: Found::new(),
        },
    };
    match task {
        Task::Regular { sigma0, prefix } => ctx.regular(sigma0, prefix),
        Task::General { a, e, prefix } => ctx.general(n, *a, *e, prefix),
    }
    ctx.out
}

struct Ctx {
    k: u32,
    reach: Reach,
    succ: Vec<[usize; 2]>,
    out: TaskResult,
}

impl Ctx {
    fn record(&mut self) {
        self.out.candidates += 1;
        if !self.reach.within(&self.succ, self.k) {
            return;
        }
        let n = self.succ.len();
        let mut g = MixedGraph::new(n);
        for (v, &[p, a]) in self.succ.iter().enumerate() {
            if p != NO && v < p {
                g.add_edge(v, p).expect("valid edge");
            }
            if a != NO {
                g.add_arc(v, a).expect("valid arc");
            }
        }
        let cf = canonical_form(&g).expect("strongly connected (1,1) graph");
        self.out.found.entry(cf.code.clone()).or_insert_with(|| cf.graph(&g));
    }

    fn regular(&mut self, sigma0: &[usize], prefix: &[usize]) {
        let p = sigma0.len();
        let mut inv0 = vec![0; p];
        for (j, &s) in sigma0.iter().enumerate() {
            inv0[s] = j;
        }
        for j in 0..p {
            self.succ[2 * j] = [2 * j + 1, 2 * sigma0[j] + 1];
            self.succ[2 * j + 1] = [2 * j, NO];
        }
        let mut used = vec![false; p];
        for (j, &s) in prefix.iter().enumerate() {
            used[s] = true;
            self.succ[2 * j + 1][1] = 2 * s;
        }
        self.extend_sigma1(prefix.len(), &inv0, &mut used);
    }

    fn extend_sigma1(&mut self, j: usize, inv0: &[usize], used: &mut [bool]) {
        let p = inv0.len();
        if j == p {
            self.record();
            return;
        }
        for s in 0..p {
            if used[s] || !sigma1_allowed(j, s, inv0) {
                continue;
            }
            used[s] = true;
            self.succ[2 * j + 1][1] = 2 * s;
            self.extend_sigma1(j + 1, inv0, used);
            used[s] = false;
        }
    }

    fn general(&mut self, n: usize, a: usize, e: usize, prefix: &[usize]) {
        for v in 0..n {
            self.succ[v] = [NO, NO];
        }
        for i in 0..e {
            self.succ[i][0] = a + i;
            self.succ[a + i][0] = i;
        }
        for (v, &t) in prefix.iter().enumerate() {
            self.succ[v][1] = t;
        }
        self.extend_general(prefix.len(), a);
    }

    fn extend_general(&mut self, v: usize, a: usize) {
        let n = self.succ.len();
        if v == n {
            self.record();
            return;
        }
        let targets = if v < a { a..n } else { 0..a };
        for t in targets.chain(std::iter::once(NO)) {
            if general_allowed(&self.succ, v, t) {
                self.succ[v][1] = t;
                self.extend_general(v + 1, a);
            }
        }
        self.succ[v][1] = NO;
    }
}

/// `2j+1 -> 2s` must not parallel the edge (`s != j`) nor close a digon
/// with `2s -> 2σ0(s)+1` (`σ0(s) != j`).
fn sigma1_allowed(j: usize, s: usize, inv0: &[usize]) -> bool {
    s != j && inv0[j] != s
}

/// Arc choice `t` for `v` given the choices of all `u < v`.
fn general_allowed(succ: &[[usize; 2]], v: usize, t: usize) -> bool {
    if t == NO {
        // a vertex with neither edge nor arc has no way out
        return succ[v][0] != NO;
    }
    t != succ[v][0] && !(t < v && succ[t][1] == v)
}

/// Partitions of `p` into parts `>= 2`, largest part first.
fn derangement_cycle_types(p: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (2..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, p, &mut Vec::new(), &mut out);
    out
}

/// Permutation with consecutive cycles of the given lengths.
fn cycle_representative(cycle_type: &[usize]) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut base = 0;
    for &len in cycle_type {
        for i in 0..len {
            sigma.push(base + (i + 1) % len);
        }
        base += len;
    }
    sigma
}

fn regular_tasks(p: usize) -> Vec<Task> {
    let depth = p.min(2);
    let mut tasks = Vec::new();
    for ct in derangement_cycle_types(p) {
        let sigma0 = cycle_representative(&ct);
        let mut inv0 = vec![0; p];
        for (j, &s) in sigma0.iter().enumerate() {
            inv0[s] = j;
        }
        let mut prefixes = vec![Vec::new()];
        for j in 0..depth {
            prefixes = prefixes
                .into_iter()
                .flat_map(|pre: Vec<usize>| {
                    (0..p)
                        .filter(|s| !pre.contains(s) && sigma1_allowed(j, *s, &inv0))
                        .map(|s| {
                            let mut next = pre.clone();
                            next.push(s);
                            next
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        tasks.extend(prefixes.into_iter().map(|prefix| Task::Regular {
            sigma0: sigma0.clone(),
            prefix,
        }));
    }
    tasks
}

fn general_tasks(n: usize) -> Vec<Task> {
    let depth = n.min(3);
    let mut tasks = Vec::new();
    for a in 1..=n / 2 {
        for e in 0..=a {
            let mut succ = vec![[NO, NO]; n];
            for i in 0..e {
                succ[i][0] = a + i;
                succ[a + i][0] = i;
            }
            let mut prefixes = vec![Vec::new()];
            for v in 0..depth {
                let targets: Vec<usize> = if v < a { (a..n).collect() } else { (0..a).collect() };
                prefixes = prefixes
                    .into_iter()
                    .flat_map(|pre: Vec<usize>| {
                        let mut s = succ.clone();
                        for (u, &t) in pre.iter().enumerate() {
                            s[u][1] = t;
                        }
                        targets
                            .iter()
                            .copied()
                            .chain(std::iter::once(NO))
                            .filter(|&t| general_allowed(&s, v, t))
                            .map(|t| {
                                let mut next = pre.clone();
                                next.push(t);
                                next
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect();
            }
            tasks.extend(prefixes.into_iter().map(|prefix| Task::General { a, e, prefix }));
        }
    }
    tasks
}
