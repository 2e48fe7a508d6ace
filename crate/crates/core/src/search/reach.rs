//! Bitset test for `diameter <= k` on graphs with out-degree at most two in
//! the associated digraph.

use crate::graph::MixedGraph;

pub(crate) const NO: usize = usize::MAX;

/// Successor pairs `[partner, out-arc]`, `NO` when absent.
pub(crate) fn successor_pairs(g: &MixedGraph) -> Option<Vec<[usize; 2]>> {
    if !g.is_11() {
        return None;
    }
    Some(
        (0..g.n())
            .map(|v| {
                [
                    g.edge_partner(v).unwrap_or(NO),
                    g.out_arcs(v).first().copied().unwrap_or(NO),
                ]
            })
            .collect(),
    )
}

/// Reusable buffers for [`Reach::within`].
pub(crate) struct Reach {
    n: usize,
    words: usize,
    cur: Vec<u64>,
    next: Vec<u64>,
    full: Vec<u64>,
}

impl Reach {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut full = vec![u64::MAX; words];
        if n % 64 != 0 {
            full[words - 1] = (1u64 << (n % 64)) - 1;
        }
        if n == 0 {
            full[0] = 0;
        }
        Self {
            n,
            words,
            cur: vec![0; n * words],
            next: vec![0; n * words],
            full,
        }
    }

    fn all_full(&self, buf: &[u64]) -> bool {
        buf.chunks_exact(self.words).all(|row| row == self.full.as_slice())
    }

    /// `R_t(v) = {v} ∪ R_{t-1}(s1) ∪ R_{t-1}(s2)`; the diameter is at most `k`
    /// iff every `R_k(v)` is the whole vertex set.
    pub(crate) fn within(&mut self, succ: &[[usize; 2]], k: u32) -> bool {
        let (n, w) = (self.n, self.words);
        debug_assert_eq!(succ.len(), n);
        self.cur.iter_mut().for_each(|x| *x = 0);
        for v in 0..n {
            self.cur[v * w + v / 64] |= 1 << (v % 64);
        }
        if self.all_full(&self.cur) {
            return true;
        }
        for _ in 0..k {
            let mut changed = false;
            for v in 0..n {
                for i in 0..w {
                    let mut x = self.cur[v * w + i];
                    for &s in &succ[v] {
                        if s != NO {
                            x |= self.cur[s * w + i];
                        }
                    }
                    changed |= x != self.cur[v * w + i];
                    self.next[v * w + i] = x;
                }
            }
            std::mem::swap(&mut self.cur, &mut self.next);
            if !changed {
                return false;
            }
            if self.all_full(&self.cur) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bdm, crm};
    use crate::metrics::diameter_at_most;

    #[test]
    fn agrees_with_bfs() {
        for g in [crm(18, 5).unwrap(), crm(20, 7).unwrap(), bdm(5).unwrap(), bdm(40).unwrap()] {
            let succ = successor_pairs(&g).unwrap();
            let mut r = Reach::new(g.n());
            for k in 0..12 {
                assert_eq!(r.within(&succ, k), diameter_at_most(&g, k), "k={k}");
            }
        }
    }

    #[test]
    fn single_vertex() {
        assert!(Reach::new(1).within(&[[NO, NO]], 0));
    }
}
