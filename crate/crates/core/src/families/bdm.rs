//! The De Bruijn-type families: `BD(2,m)`, `BDM(2,m)` and `BDM*(2,m)`.
//!
//! Vertices of the mixed families are triples `(α, i)_β` with `α, β ∈ Z_2` and
//! `i ∈ Z_m`, encoded as `2m·β + m·α + i`. The digraph `BD(2,m)` uses pairs
//! `(α, i)` encoded as `m·α + i`, so contracting the edges `(α,i)_0 ~ (α,i)_1`
//! of either mixed family lands directly on that encoding.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BdmVertex {
    pub alpha: u8,
    pub i: usize,
    pub beta: u8,
}

impl BdmVertex {
    pub fn new(alpha: u8, i: usize, beta: u8) -> Self {
        debug_assert!(alpha < 2 && beta < 2);
        Self { alpha, i, beta }
    }

    /// Builds a vertex from an arbitrary integer index, reduced mod `m`.
    pub fn reduced(alpha: u8, i: i64, beta: u8, m: usize) -> Self {
        Self::new(alpha, md(i, m), beta)
    }

    pub fn index(self, m: usize) -> usize {
        2 * m * self.beta as usize + m * self.alpha as usize + self.i
    }

    pub fn from_index(idx: usize, m: usize) -> Self {
        assert!(idx < 4 * m, "index {idx} out of range for m = {m}");
        Self {
            beta: (idx / (2 * m)) as u8,
            alpha: ((idx / m) % 2) as u8,
            i: idx % m,
        }
    }
}

impl fmt::Display for BdmVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.alpha, self.i, self.beta)
    }
}

/// Canonical representative of `x mod m` in `0..m`.
pub(crate) fn md(x: i64, m: usize) -> usize {
    x.rem_euclid(m as i64) as usize
}

/// `m = 2^(n-1) + 2^(n-3)` for `n >= 3`.
pub fn canonical_m(n: u32) -> Result<usize> {
    if !(3..=40).contains(&n) {
        return Err(Error::UnsupportedN(n));
    }
    Ok((1usize << (n - 1)) + (1usize << (n - 3)))
}

/// Inverse of [`canonical_m`].
pub fn canonical_n(m: usize) -> Option<u32> {
    (3..=40).find(|&n| canonical_m(n).ok() == Some(m))
}

fn labelled(g: MixedGraph, m: usize) -> MixedGraph {
    let labels = (0..4 * m)
        .map(|v| BdmVertex::from_index(v, m).to_string())
        .collect();
    g.with_labels(labels)
}

fn build_mixed(m: usize, head: impl Fn(BdmVertex) -> BdmVertex) -> Result<MixedGraph> {
    let mut g = MixedGraph::new(4 * m);
    for alpha in 0..2 {
        for i in 0..m {
            let v0 = BdmVertex::new(alpha, i, 0);
            g.add_edge(v0.index(m), BdmVertex::new(alpha, i, 1).index(m))?;
        }
    }
    for idx in 0..4 * m {
        let v = BdmVertex::from_index(idx, m);
        g.add_arc(idx, head(v).index(m))?;
    }
    Ok(labelled(g, m))
}

/// Arc head of `v` in `BDM(2,m)`.
pub fn bdm_arc(v: BdmVertex, m: usize) -> BdmVertex {
    let i = v.i as i64;
    match (v.alpha, v.beta) {
        (0, 0) => BdmVertex::reduced(1, 2 * i, 1, m),
        (0, _) => BdmVertex::reduced(1, 2 * i + 1, 0, m),
        (_, 0) => BdmVertex::reduced(0, -2 * i - 1, 1, m),
        _ => BdmVertex::reduced(0, -2 * i - 2, 0, m),
    }
}

/// `BDM(2,m)`: edges `(α,i)_0 ~ (α,i)_1` and one arc per vertex.
pub fn bdm(m: usize) -> Result<MixedGraph> {
    if m < 2 {
        return Err(Error::BadParams(format!("BDM(2,m) needs m >= 2, got {m}")));
    }
    build_mixed(m, |v| bdm_arc(v, m))
}

/// `BDM(2,m)` for `m = 2^(n-1) + 2^(n-3)`; returns `(m, graph)`.
pub fn bdm_canonical(n: u32) -> Result<(usize, MixedGraph)> {
    let m = canonical_m(n)?;
    Ok((m, bdm(m)?))
}

/// Arc head of `v` in `BDM*(2,m)`: the lower half `i < m/2` follows `BDM`,
/// the upper half swaps the offsets `2i <-> 2i+1` and `-2i-1 <-> -2i-2`.
pub fn bdm_star_arc(v: BdmVertex, m: usize) -> BdmVertex {
    let i = v.i as i64;
    let up = i64::from(v.i >= m / 2);
    match (v.alpha, v.beta) {
        (0, 0) => BdmVertex::reduced(1, 2 * i + up, 1, m),
        (0, _) => BdmVertex::reduced(1, 2 * i + 1 - up, 0, m),
        (_, 0) => BdmVertex::reduced(0, -2 * i - 1 - up, 1, m),
        _ => BdmVertex::reduced(0, -2 * i - 2 + up, 0, m),
    }
}

/// The unique in-neighbour of `v` in `BDM*(2,m)`, by the closed-form table
/// (halving done in the integers, then reduced mod `m`).
pub fn bdm_star_in_neighbour(v: BdmVertex, m: usize) -> BdmVertex {
    let i = v.i as i64;
    let mm = m as i64;
    let odd = i % 2 == 1;
    match (v.alpha, v.beta, odd) {
        (0, 0, true) => BdmVertex::reduced(1, (-i - 1) / 2, 1, m),
        (0, 0, false) => BdmVertex::reduced(1, (-i - 2 - mm) / 2, 1, m),
        (0, _, true) => BdmVertex::reduced(1, (-i - 1 - mm) / 2, 0, m),
        (0, _, false) => BdmVertex::reduced(1, (-i - 2) / 2, 0, m),
        (_, 0, true) => BdmVertex::reduced(0, (i - 1) / 2, 1, m),
        (_, 0, false) => BdmVertex::reduced(0, (i + mm) / 2, 1, m),
        (_, _, true) => BdmVertex::reduced(0, (i - 1 + mm) / 2, 0, m),
        (_, _, false) => BdmVertex::reduced(0, i / 2, 0, m),
    }
}

/// `BDM*(2,m)` for `m = 2^(n-1) + 2^(n-3)`, `n >= 4`.
///
/// Construction fails if any vertex's in-neighbours differ from
/// [`bdm_star_in_neighbour`].
pub fn bdm_star(m: usize) -> Result<MixedGraph> {
    match canonical_n(m) {
        Some(n) if n >= 4 => {}
        _ => return Err(Error::UnsupportedM(m)),
    }
    let g = build_mixed(m, |v| bdm_star_arc(v, m))?;
    let inn = g.in_arcs();
    for (idx, list) in inn.iter().enumerate() {
        let v = BdmVertex::from_index(idx, m);
        let want = bdm_star_in_neighbour(v, m).index(m);
        if list.as_slice() != [want] {
            return Err(Error::MalformedGraph(format!(
                "BDM*(2,{m}): vertex {v} has in-neighbours {list:?}, expected [{want}]"
            )));
        }
    }
    Ok(g)
}

/// The bipartite digraph `BD(2,m)` on `Z_2 × Z_m`, vertex `(α,i)` at `m·α + i`.
pub fn bd_digraph(m: usize) -> Result<MixedGraph> {
    if m < 2 {
        return Err(Error::BadParams(format!("BD(2,m) needs m >= 2, got {m}")));
    }
    let mut g = MixedGraph::new(2 * m);
    for i in 0..m {
        let ii = i as i64;
        g.add_arc(i, m + md(2 * ii, m))?;
        g.add_arc(i, m + md(2 * ii + 1, m))?;
        g.add_arc(m + i, md(-2 * ii - 1, m))?;
        g.add_arc(m + i, md(-2 * ii - 2, m))?;
    }
    let labels = (0..2 * m).map(|v| format!("({},{})", v / m, v % m)).collect();
    Ok(g.with_labels(labels))
}

/// Which closed form to evaluate in [`path_endpoint_formula`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointKind {
    Phi,
    Psi,
}

fn pow2_mod(e: u32, modulus: u128) -> u128 {
    let mut acc = 1u128 % modulus;
    for _ in 0..e {
        acc = acc * 2 % modulus;
    }
    acc
}

/// Closed forms of the long-path endpoints, reduced mod `m`:
///
/// * `phi(n) = (-1)^(n/2) [2^n i + (2^n - (-1)^(n/2)) / 5]`, `n` even,
/// * `psi(n) = (-1)^((n+1)/2) [2^n i + (2^(n+1) - (-1)^((n+1)/2)) / 5]`, `n` odd.
///
/// The division by 5 is carried out exactly by working modulo `5m`.
pub fn path_endpoint_formula(kind: EndpointKind, n: u32, i: i64, m: usize) -> Result<usize> {
    let (sign_exp, e) = match kind {
        EndpointKind::Phi if n % 2 == 0 => (n / 2, n),
        EndpointKind::Psi if n % 2 == 1 => (n.div_ceil(2), n + 1),
        _ => {
            return Err(Error::ParityError(format!(
                "{kind:?} is not defined for n = {n}"
            )))
        }
    };
    let modulus = 5 * m as u128;
    let sign: i128 = if sign_exp % 2 == 0 { 1 } else { -1 };
    // (2^e - sign) mod 5m
    let numer = (pow2_mod(e, modulus) as i128 - sign).rem_euclid(modulus as i128);
    if numer % 5 != 0 {
        return Err(Error::NonDivisible(format!(
            "2^{e} - ({sign}) is not a multiple of 5"
        )));
    }
    let quotient = numer / 5;
    let mm = m as i128;
    let coef = pow2_mod(n, m as u128) as i128;
    let value = (coef * (i as i128).rem_euclid(mm) + quotient) % mm;
    Ok((sign * value).rem_euclid(mm) as usize)
}

/// Step kinds of a walk: `E` crosses an edge, `A` follows an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Edge,
    Arc,
}

pub fn parse_pattern(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .map(|c| match c {
            'E' => Ok(Step::Edge),
            'A' => Ok(Step::Arc),
            other => Err(Error::BadParams(format!(
                "walk pattern may only contain E and A, found `{other}`"
            ))),
        })
        .collect()
}

/// Endpoints of all walks from `start` whose steps follow `pattern`.
pub fn walk_pattern(g: &MixedGraph, start: usize, pattern: &[Step]) -> BTreeSet<usize> {
    let mut cur = BTreeSet::from([start]);
    for step in pattern {
        cur = cur
            .iter()
            .flat_map(|&v| match step {
                Step::Edge => g.edge_neighbours(v),
                Step::Arc => g.out_arcs(v),
            })
            .copied()
            .collect();
    }
    cur
}

/// `E(AE)^n`, the alternating pattern of length `2n+1`.
pub fn pattern_alternating(n: usize) -> Vec<Step> {
    std::iter::once(Step::Edge)
        .chain((0..n).flat_map(|_| [Step::Arc, Step::Edge]))
        .collect()
}

/// `AEAEA(AE)^(n-2)`, cut to length `2n+1` for `n < 2`: the arc-first
/// shortcut from `(0,i)_1`.
pub fn pattern_v_shortcut(n: usize) -> Vec<Step> {
    [Step::Arc, Step::Edge, Step::Arc, Step::Edge, Step::Arc]
        .into_iter()
        .chain(std::iter::repeat([Step::Arc, Step::Edge]).flatten())
        .take(2 * n + 1)
        .collect()
}

/// `A(AE)^n`, the double-arc shortcut from `(1,i)_1`.
pub fn pattern_u_shortcut(n: usize) -> Vec<Step> {
    std::iter::once(Step::Arc)
        .chain((0..n).flat_map(|_| [Step::Arc, Step::Edge]))
        .collect()
}

/// Endpoint of `E(AE)^n` from `(0,i)_1` by the closed forms.
pub fn v_endpoint(n: u32, i: i64, m: usize) -> Result<BdmVertex> {
    if n % 2 == 0 {
        Ok(BdmVertex::new(0, path_endpoint_formula(EndpointKind::Phi, n, i, m)?, 0))
    } else {
        let phi = path_endpoint_formula(EndpointKind::Phi, n - 1, i, m)?;
        Ok(BdmVertex::reduced(1, 2 * phi as i64, 0, m))
    }
}

/// Endpoint of `E(AE)^n` from `(1,i)_1` by the closed forms.
pub fn u_endpoint(n: u32, i: i64, m: usize) -> Result<BdmVertex> {
    if n == 0 {
        Ok(BdmVertex::reduced(1, i, 0, m))
    } else if n % 2 == 1 {
        Ok(BdmVertex::new(0, path_endpoint_formula(EndpointKind::Psi, n, i, m)?, 0))
    } else {
        let psi = path_endpoint_formula(EndpointKind::Psi, n - 1, i, m)?;
        Ok(BdmVertex::reduced(1, 2 * psi as i64, 0, m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedAutomorphism {
    /// `(α,i)_β -> (α,-i-1)_β̄`
    Phi1,
    /// `(α,i)_β -> (α, i + α 2^(n-2) + ᾱ 2^(n-3))_β`
    Phi2,
}

pub fn named_automorphism(
    which: NamedAutomorphism,
    v: BdmVertex,
    m: usize,
    n: u32,
) -> Result<BdmVertex> {
    let i = v.i as i64;
    match which {
        NamedAutomorphism::Phi1 => Ok(BdmVertex::reduced(v.alpha, -i - 1, 1 - v.beta, m)),
        NamedAutomorphism::Phi2 => {
            if canonical_m(n).ok() != Some(m) {
                return Err(Error::UnsupportedM(m));
            }
            let shift = if v.alpha == 1 { 1i64 << (n - 2) } else { 1i64 << (n - 3) };
            Ok(BdmVertex::reduced(v.alpha, i + shift, v.beta, m))
        }
    }
}

/// The automorphism as a permutation of vertex indices.
pub fn automorphism_permutation(which: NamedAutomorphism, m: usize, n: u32) -> Result<Vec<usize>> {
    (0..4 * m)
        .map(|idx| Ok(named_automorphism(which, BdmVertex::from_index(idx, m), m, n)?.index(m)))
        .collect()
}
