//! Canonical labelling of connected (1,1)-mixed graphs.
//!
//! Every vertex has at most one edge partner and at most one out-arc, so a
//! breadth-first traversal that visits partner, out-neighbour and then
//! in-neighbours is fixed by its start vertex except for the order among
//! several in-neighbours. We branch only on those ties and keep the
//! lexicographically smallest encoding over all starts.

use crate::graph::{relabel, MixedGraph};

const NONE: u32 = u32::MAX;

/// Canonical encoding plus the relabelling that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Per new vertex: (edge partner, out-neighbour), `u32::MAX` when absent.
    pub code: Vec<(u32, u32)>,
    /// `perm[old] = new`.
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self, g: &MixedGraph) -> MixedGraph {
        relabel(g, &self.perm).expect("canonical permutation is a bijection")
    }
}

struct Search<'a> {
    g: &'a MixedGraph,
    inn: Vec<Vec<usize>>,
    best: Option<CanonicalForm>,
}

impl Search<'_> {
    fn encode(&self, order: &[usize], new_id: &[usize]) -> Vec<(u32, u32)> {
        order
            .iter()
            .map(|&v| {
                let p = self.g.edge_partner(v).map_or(NONE, |w| new_id[w] as u32);
                let a = self.g.out_arcs(v).first().map_or(NONE, |&w| new_id[w] as u32);
                (p, a)
            })
            .collect()
    }

    fn push(order: &mut Vec<usize>, new_id: &mut [usize], v: usize) {
        new_id[v] = order.len();
        order.push(v);
    }

    fn explore(&mut self, order: &mut Vec<usize>, new_id: &mut [usize], mut pos: usize) {
        let n = self.g.n();
        while pos < order.len() {
            let v = order[pos];
            pos += 1;
            if let Some(w) = self.g.edge_partner(v) {
                if new_id[w] == usize::MAX {
                    Self::push(order, new_id, w);
                }
            }
            if let Some(&w) = self.g.out_arcs(v).first() {
                if new_id[w] == usize::MAX {
                    Self::push(order, new_id, w);
                }
            }
            let fresh: Vec<usize> = self.inn[v]
                .iter()
                .copied()
                .filter(|&w| new_id[w] == usize::MAX)
                .collect();
            if fresh.len() > 1 {
                for perm in permutations(&fresh) {
                    let (mut o, mut id) = (order.clone(), new_id.to_vec());
                    for w in perm {
                        Self::push(&mut o, &mut id, w);
                    }
                    self.explore(&mut o, &mut id, pos);
                }
                return;
            }
            if let Some(&w) = fresh.first() {
                Self::push(order, new_id, w);
            }
        }
        if order.len() != n {
            return;
        }
        let code = self.encode(order, new_id);
        if self.best.as_ref().is_none_or(|b| code < b.code) {
            self.best = Some(CanonicalForm {
                code,
                perm: new_id.to_vec(),
            });
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Canonical form of a weakly connected graph with at most one edge and one
/// out-arc per vertex; `None` for anything else.
pub fn canonical_form(g: &MixedGraph) -> Option<CanonicalForm> {
    if !g.is_11() {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some(CanonicalForm {
            code: Vec::new(),
            perm: Vec::new(),
        });
    }
    let mut search = Search {
        g,
        inn: g.in_arcs(),
        best: None,
    };
    for s in 0..n {
        let mut order = Vec::with_capacity(n);
        let mut new_id = vec![usize::MAX; n];
        Search::push(&mut order, &mut new_id, s);
        search.explore(&mut order, &mut new_id, 0);
        if search.best.is_none() {
            // the traversal reaches the whole weak component of s
            return None;
        }
    }
    search.best
}

/// Isomorphism test for connected (1,1)-graphs. `None` when either graph is
/// outside that class.
pub fn isomorphic(g: &MixedGraph, h: &MixedGraph) -> Option<bool> {
    if g.n() != h.n() {
        return Some(false);
    }
    Some(canonical_form(g)?.code == canonical_form(h)?.code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_isomorphism;

    fn cycle_with_matching(n: usize, shift: usize) -> MixedGraph {
        let mut g = MixedGraph::new(n);
        for i in 0..n {
            g.add_arc(i, (i + 1) % n).unwrap();
        }
        for i in (1..n).step_by(2) {
            g.add_edge(i, (i + shift) % n).unwrap();
        }
        g
    }

    #[test]
    fn relabelled_copies_share_a_code() {
        let g = cycle_with_matching(8, 3);
        let p = vec![5, 2, 7, 0, 3, 6, 1, 4];
        let h = relabel(&g, &p).unwrap();
        assert_eq!(isomorphic(&g, &h), Some(true));
        let cg = canonical_form(&g).unwrap();
        let ch = canonical_form(&h).unwrap();
        assert!(cg.graph(&g).same_structure(&ch.graph(&h)));
    }

    #[test]
    fn perm_is_an_isomorphism_onto_the_canonical_graph() {
        let g = cycle_with_matching(10, 3);
        let c = canonical_form(&g).unwrap();
        assert!(verify_isomorphism(&g, &c.graph(&g), &c.perm).unwrap());
    }

    #[test]
    fn different_chords_are_distinguished() {
        assert_eq!(
            isomorphic(&cycle_with_matching(10, 3), &cycle_with_matching(10, 5)),
            Some(false)
        );
    }

    #[test]
    fn disconnected_graph_has_no_form() {
        let mut g = MixedGraph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(canonical_form(&g).is_none());
    }

    #[test]
    fn in_degree_ties_are_resolved() {
        // two sources pointing at one sink, plus an edge 2~3
        let mut g = MixedGraph::new(4);
        g.add_arc(0, 2).unwrap();
        g.add_arc(1, 2).unwrap();
        g.add_edge(2, 3).unwrap();
        g.add_arc(3, 0).unwrap();
        let h = relabel(&g, &[1, 0, 2, 3]).unwrap();
        assert_eq!(isomorphic(&g, &h), Some(true));
    }
}
