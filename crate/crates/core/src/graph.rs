//! The mixed-graph data model.
//!
//! A [`MixedGraph`] has vertices `0..n`, undirected edges stored symmetrically
//! per vertex, and directed arcs stored as per-vertex out-lists. The structure
//! allows any number of edges and arcs per vertex, but every algorithm in this
//! crate is tuned for the (1,1) case: at most one edge and one out-arc per vertex.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// A mixed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    out_arcs: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl MixedGraph {
    /// An edgeless, arcless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: vec![Vec::new(); n],
            out_arcs: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from raw adjacency lists. Only checks that ids are in
    /// range; symmetry and the mixed-graph rules are checked by
    /// [`validate_and_profile`].
    pub fn from_adjacency(
        n: usize,
        edges: Vec<Vec<usize>>,
        out_arcs: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if edges.len() != n || out_arcs.len() != n {
            return Err(Error::MalformedGraph(format!(
                "adjacency lists must have length {n}"
            )));
        }
        for (u, list) in edges.iter().chain(out_arcs.iter()).enumerate() {
            if let Some(&v) = list.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedGraph(format!(
                    "vertex id {v} out of range (n = {n}, list {u})"
                )));
            }
        }
        Ok(Self {
            n,
            edges,
            out_arcs,
            labels: None,
        })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::MalformedGraph(format!(
                "vertex pair ({u},{v}) out of range (n = {})",
                self.n
            )));
        }
        if u == v {
            return Err(Error::MalformedGraph(format!("self-loop at {u}")));
        }
        Ok(())
    }

    /// Adds the undirected edge `u ~ v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.edges[u].push(v);
        self.edges[v].push(u);
        Ok(())
    }

    /// Adds the arc `u -> v`.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.out_arcs[u].push(v);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The unique undirected neighbour of `v`, if `v` has exactly one edge.
    pub fn edge_partner(&self, v: usize) -> Option<usize> {
        match self.edges[v].as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }

    pub fn edge_neighbours(&self, v: usize) -> &[usize] {
        &self.edges[v]
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Out-neighbours in the associated digraph (edges become digons).
    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges[v].iter().chain(self.out_arcs[v].iter()).copied()
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| self.edges[u].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u < v)
            .collect();
        out.sort_unstable();
        out
    }

    /// Arcs as pairs `(tail, head)`, sorted.
    pub fn arc_list(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| self.out_arcs[u].iter().map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.out_arcs.iter().map(Vec::len).sum()
    }

    /// In-degree of every vertex.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut indeg = vec![0; self.n];
        for list in &self.out_arcs {
            for &v in list {
                indeg[v] += 1;
            }
        }
        indeg
    }

    /// In-neighbour lists, each sorted ascending.
    pub fn in_arcs(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.n];
        for (u, list) in self.out_arcs.iter().enumerate() {
            for &v in list {
                inn[v].push(u);
            }
        }
        inn
    }

    /// Structural equality ignoring labels and the order of adjacency lists.
    pub fn same_structure(&self, other: &MixedGraph) -> bool {
        self.n == other.n
            && self.edge_list() == other.edge_list()
            && self.arc_list() == other.arc_list()
    }

    /// True when every vertex has at most one edge and at most one out-arc.
    pub fn is_11(&self) -> bool {
        (0..self.n).all(|v| self.edges[v].len() <= 1 && self.out_arcs[v].len() <= 1)
    }
}

/// Exact degree data of a validated mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Undirected degree d(v).
    pub undirected: Vec<usize>,
    /// Out-degree d⁺(v).
    pub out_degree: Vec<usize>,
    /// In-degree d⁻(v).
    pub in_degree: Vec<usize>,
    pub bipartite_ok: bool,
}

impl DegreeProfile {
    /// d(v) = r and d⁺(v) = d⁻(v) = z for every vertex.
    pub fn totally_regular(&self, r: usize, z: usize) -> bool {
        self.undirected.iter().all(|&d| d == r)
            && self.out_degree.iter().all(|&d| d == z)
            && self.in_degree.iter().all(|&d| d == z)
    }

    pub fn max_undirected(&self) -> usize {
        self.undirected.iter().copied().max().unwrap_or(0)
    }

    pub fn max_out(&self) -> usize {
        self.out_degree.iter().copied().max().unwrap_or(0)
    }
}

/// Checks the mixed-graph rules and returns the degree profile.
///
/// Rejects asymmetric or duplicated edges, self-loops, duplicated arcs, digons
/// (`u -> v` together with `v -> u`) and arcs parallel to an edge.
pub fn validate_and_profile(g: &MixedGraph) -> Result<DegreeProfile> {
    let n = g.n();
    let mut edge_set = HashSet::new();
    for u in 0..n {
        for &v in g.edge_neighbours(u) {
            if u == v {
                return Err(Error::MalformedGraph(format!("edge self-loop at {u}")));
            }
            if !edge_set.insert((u, v)) {
                return Err(Error::MalformedGraph(format!("duplicate edge {u}~{v}")));
            }
        }
    }
    for &(u, v) in &edge_set {
        if !edge_set.contains(&(v, u)) {
            return Err(Error::MalformedGraph(format!(
                "edge partner not symmetric: {u} lists {v} but not conversely"
            )));
        }
    }
    let mut arc_set = HashSet::new();
    for u in 0..n {
        for &v in g.out_arcs(u) {
            if u == v {
                return Err(Error::MalformedGraph(format!("arc self-loop at {u}")));
            }
            if !arc_set.insert((u, v)) {
                return Err(Error::MalformedGraph(format!("duplicate arc {u}->{v}")));
            }
        }
    }
    for &(u, v) in &arc_set {
        if arc_set.contains(&(v, u)) {
            return Err(Error::MalformedGraph(format!(
                "opposite arcs {u}->{v} and {v}->{u} form a digon"
            )));
        }
        if edge_set.contains(&(u, v)) {
            return Err(Error::MalformedGraph(format!(
                "arc {u}->{v} parallel to an edge"
            )));
        }
    }
    Ok(DegreeProfile {
        undirected: (0..n).map(|v| g.edge_neighbours(v).len()).collect(),
        out_degree: (0..n).map(|v| g.out_arcs(v).len()).collect(),
        in_degree: g.in_degrees(),
        bipartite_ok: bipartition(g).is_some(),
    })
}

/// A proper 2-colouring of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionCertificate {
    pub colour: Vec<u8>,
}

impl BipartitionCertificate {
    /// Every edge and arc joins vertices of different colours.
    pub fn verify(&self, g: &MixedGraph) -> bool {
        self.colour.len() == g.n()
            && (0..g.n()).all(|u| g.successors(u).all(|v| self.colour[u] != self.colour[v]))
    }
}

/// 2-colours the underlying graph (arcs taken as undirected), or `None` if it
/// has an odd cycle. Each component's smallest vertex gets colour 0.
pub fn bipartition(g: &MixedGraph) -> Option<BipartitionCertificate> {
    let n = g.n();
    let mut undirected = vec![Vec::new(); n];
    for u in 0..n {
        for v in g.successors(u) {
            undirected[u].push(v);
            undirected[v].push(u);
        }
    }
    let mut colour = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &undirected[u] {
                if colour[v] == u8::MAX {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if colour[v] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(BipartitionCertificate { colour })
}

/// Reverses every arc; edges and labels are kept.
pub fn converse(g: &MixedGraph) -> MixedGraph {
    let mut out = MixedGraph {
        n: g.n,
        edges: g.edges.clone(),
        out_arcs: vec![Vec::new(); g.n],
        labels: g.labels.clone(),
    };
    for (u, v) in g.arc_list() {
        out.out_arcs[v].push(u);
    }
    out
}

/// Contracts every edge into a single vertex.
///
/// The merged vertex keeps the smaller of the two ids, surviving ids are then
/// compacted to `0..n'` in increasing order. Arcs are inherited by the merged
/// vertex (smaller id's arcs first) and parallel arcs are deduplicated. Labels
/// are dropped.
pub fn contract_edges(g: &MixedGraph) -> Result<MixedGraph> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.edge_neighbours(v).len() > 1) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} has {} edges; contraction needs a matching",
            g.edge_neighbours(v).len()
        )));
    }
    let rep: Vec<usize> = (0..n)
        .map(|v| g.edge_partner(v).map_or(v, |w| v.min(w)))
        .collect();
    let mut new_id = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if rep[v] == v {
            new_id[v] = count;
            count += 1;
        }
    }
    let mut out = MixedGraph::new(count);
    for v in 0..n {
        let from = new_id[rep[v]];
        for &w in g.out_arcs(v) {
            let to = new_id[rep[w]];
            if from == to {
                return Err(Error::PreconditionViolated(format!(
                    "arc {v}->{w} is parallel to an edge and would become a loop"
                )));
            }
            if !out.out_arcs[from].contains(&to) {
                out.out_arcs[from].push(to);
            }
        }
    }
    Ok(out)
}

fn check_permutation(n: usize, p: &[usize]) -> Result<()> {
    if p.len() != n {
        return Err(Error::BadPermutation(format!(
            "length {} does not match n = {n}",
            p.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::BadPermutation(format!("not a bijection on 0..{n}")));
        }
    }
    Ok(())
}

/// True iff `p` maps edges onto edges and arcs onto arcs with direction kept.
pub fn verify_automorphism(g: &MixedGraph, p: &[usize]) -> Result<bool> {
    check_permutation(g.n(), p)?;
    Ok(maps_onto(g, g, p))
}

/// True iff `p` is an isomorphism from `g` onto `h`.
pub fn verify_isomorphism(g: &MixedGraph, h: &MixedGraph, p: &[usize]) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    check_permutation(g.n(), p)?;
    Ok(maps_onto(g, h, p))
}

fn maps_onto(g: &MixedGraph, h: &MixedGraph, p: &[usize]) -> bool {
    let h_edges: HashSet<(usize, usize)> = h.edge_list().into_iter().collect();
    let h_arcs: HashSet<(usize, usize)> = h.arc_list().into_iter().collect();
    let g_edges = g.edge_list();
    let g_arcs = g.arc_list();
    g_edges.len() == h_edges.len()
        && g_arcs.len() == h_arcs.len()
        && g_edges.iter().all(|&(u, v)| {
            let (a, b) = (p[u], p[v]);
            h_edges.contains(&(a.min(b), a.max(b)))
        })
        && g_arcs.iter().all(|&(u, v)| h_arcs.contains(&(p[u], p[v])))
}

/// Applies a vertex relabelling: vertex `v` of `g` becomes `p[v]`.
pub fn relabel(g: &MixedGraph, p: &[usize]) -> Result<MixedGraph> {
    check_permutation(g.n(), p)?;
    let mut out = MixedGraph::new(g.n());
    for (u, v) in g.edge_list() {
        out.add_edge(p[u], p[v])?;
    }
    for (u, v) in g.arc_list() {
        out.add_arc(p[u], p[v])?;
    }
    if let Some(labels) = g.labels() {
        let mut new = vec![String::new(); g.n()];
        for (v, l) in labels.iter().enumerate() {
            new[p[v]] = l.clone();
        }
        out.labels = Some(new);
    }
    Ok(out)
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
    fn empty_graph_is_totally_zero_regular() {
        let p = validate_and_profile(&MixedGraph::new(4)).unwrap();
        assert!(p.totally_regular(0, 0));
        assert!(p.undirected.iter().all(|&d| d == 0));
    }

    #[test]
    fn digon_is_rejected() {
        let mut g = MixedGraph::new(2);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 0).unwrap();
        assert!(matches!(validate_and_profile(&g), Err(Error::MalformedGraph(_))));
    }

    #[test]
    fn arc_parallel_to_edge_is_rejected() {
        let mut g = MixedGraph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_arc(0, 1).unwrap();
        assert!(matches!(validate_and_profile(&g), Err(Error::MalformedGraph(_))));
    }

    #[test]
    fn asymmetric_partner_is_rejected() {
        let g = MixedGraph::from_adjacency(2, vec![vec![1], vec![]], vec![vec![], vec![]]).unwrap();
        assert!(matches!(validate_and_profile(&g), Err(Error::MalformedGraph(_))));
    }

    #[test]
    fn self_loops_are_rejected() {
        let mut g = MixedGraph::new(2);
        assert!(g.add_arc(1, 1).is_err());
        let g = MixedGraph::from_adjacency(2, vec![vec![], vec![]], vec![vec![0], vec![]]).unwrap();
        assert!(validate_and_profile(&g).is_err());
    }

    #[test]
    fn out_of_range_ids_are_rejected() {
        assert!(MixedGraph::from_adjacency(2, vec![vec![5], vec![]], vec![vec![], vec![]]).is_err());
        assert!(MixedGraph::new(3).add_edge(0, 3).is_err());
    }

    #[test]
    fn odd_directed_cycle_is_not_bipartite() {
        assert!(bipartition(&directed_cycle(3)).is_none());
        let c = bipartition(&directed_cycle(4)).unwrap();
        assert_eq!(c.colour, vec![0, 1, 0, 1]);
        assert!(c.verify(&directed_cycle(4)));
    }

    #[test]
    fn converse_reverses_cycle() {
        let g = converse(&directed_cycle(3));
        assert_eq!(g.arc_list(), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn converse_keeps_edges_only_graph() {
        let mut g = MixedGraph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert_eq!(converse(&g), g);
    }

    #[test]
    fn contract_edges_needs_matching() {
        let mut g = MixedGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        assert!(matches!(contract_edges(&g), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn contract_edgeless_digraph_is_identity() {
        let g = directed_cycle(5);
        assert!(contract_edges(&g).unwrap().same_structure(&g));
    }

    #[test]
    fn contract_relabels_compactly() {
        // 0~2, arcs 0->1, 2->3, 1->3 ; merged {0,2} -> 0, 1 -> 1, 3 -> 2
        let mut g = MixedGraph::new(4);
        g.add_edge(0, 2).unwrap();
        g.add_arc(0, 1).unwrap();
        g.add_arc(2, 3).unwrap();
        g.add_arc(1, 3).unwrap();
        let c = contract_edges(&g).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.arc_list(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn automorphism_checks() {
        let g = directed_cycle(3);
        assert!(verify_automorphism(&g, &[0, 1, 2]).unwrap());
        assert!(verify_automorphism(&g, &[1, 2, 0]).unwrap());
        assert!(!verify_automorphism(&g, &[1, 0, 2]).unwrap());
        assert!(matches!(
            verify_automorphism(&g, &[0, 0, 2]),
            Err(Error::BadPermutation(_))
        ));
        assert!(verify_automorphism(&g, &[0, 1]).is_err());
    }
}
