//! Chordal ring and chordal double ring mixed graphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

use super::bdm::md;

/// `CRM(n,c)`: arcs `i -> i+1` on `Z_n` and chords `i ~ i+c` for odd `i`.
///
/// Requires `n` even, `c` odd and `3 <= c <= n-3`; `c = 1` and `c = n-1` would
/// put a chord parallel to a ring arc.
pub fn crm(n: usize, c: usize) -> Result<MixedGraph> {
    if n % 2 != 0 || c % 2 == 0 || c < 3 || c + 3 > n {
        return Err(Error::BadParams(format!(
            "CRM(n,c) needs n even, c odd, 3 <= c <= n-3 (got n={n}, c={c})"
        )));
    }
    let mut g = MixedGraph::new(n);
    for i in 0..n {
        g.add_arc(i, (i + 1) % n)?;
    }
    for i in (1..n).step_by(2) {
        g.add_edge(i, (i + c) % n)?;
    }
    Ok(g.with_labels((0..n).map(|i| i.to_string()).collect()))
}

/// Which construction of the optimal-order theorem applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrmCase {
    /// `k` odd
    A,
    /// `k ≡ 0 (mod 4)`
    B,
    /// `k ≡ 6 (mod 8)`
    C1,
    /// `k ≡ 2 (mod 8)`
    C2,
}

impl fmt::Display for CrmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrmCase::A => "a",
            CrmCase::B => "b",
            CrmCase::C1 => "c1",
            CrmCase::C2 => "c2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrmParams {
    pub k: u32,
    pub case: CrmCase,
    pub n: usize,
    pub c: usize,
    pub ell: usize,
    /// Family parameter of cases b, c1 and c2.
    pub t: Option<usize>,
}

impl CrmParams {
    pub fn build(&self) -> MixedGraph {
        crm(self.n, self.c).expect("optimal parameters are valid")
    }
}

/// Largest known `CRM(n,c)` of diameter `k`.
pub fn crm_optimal(k: u32) -> Result<CrmParams> {
    if k < 3 {
        return Err(Error::UnsupportedK(k));
    }
    let kk = k as usize;
    let (case, n, c, t) = if kk % 2 == 1 {
        (CrmCase::A, (kk + 1) * (kk + 1) / 2, kk, None)
    } else if kk % 4 == 0 {
        let half = kk / 2;
        (CrmCase::B, kk * kk / 2 + 2, (half - 1) * (half - 1) + half, Some(kk / 4))
    } else if kk % 8 == 6 {
        let t = (kk + 2) / 8;
        (CrmCase::C1, kk * (kk / 2 - 1) + 4, 8 * t * t - 8 * t + 3, Some(t))
    } else {
        let t = (kk + 6) / 8;
        (CrmCase::C2, kk * (kk / 2 - 1) + 4, 24 * t * t + 23 - 44 * t, Some(t))
    };
    Ok(CrmParams {
        k,
        case,
        n,
        c,
        ell: kk.div_ceil(2),
        t,
    })
}

/// Vertices listed in row `d` of the max-distance table for `CRM(n,c)`:
/// `j·c + (d - j)` for `0 <= j < ⌈d/2⌉` and `j·c + (d + j + 1)` for
/// `-⌈d/2⌉ <= j < 0`, reduced mod `n`.
pub fn max_distance_row(d: u32, c: usize, n: usize) -> BTreeSet<usize> {
    let s = i64::from(d.div_ceil(2));
    let (d, c) = (i64::from(d), c as i64);
    (-s..s)
        .map(|j| {
            let offset = if j >= 0 { d - j } else { d + j + 1 };
            md(j * c + offset, n)
        })
        .collect()
}

/// How the two rings of a chordal double ring are matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CdrmConvention {
    /// `(0,i) ~ (1,i+c)`
    Shift,
    /// `(0,i) ~ (1,c-i)`
    Reflect,
}

impl fmt::Display for CdrmConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CdrmConvention::Shift => "shift",
            CdrmConvention::Reflect => "reflect",
        })
    }
}

/// Chordal double ring on `Z_2 × Z_m`, vertex `(α,i)` at `α·m + i`: two
/// directed `m`-cycles joined by a perfect matching of chords.
pub fn cdrm(m: usize, c: usize, convention: CdrmConvention) -> Result<MixedGraph> {
    if m < 2 || m % 2 != 0 || c % 2 == 0 {
        return Err(Error::BadParams(format!(
            "CDRM needs m even >= 2 and c odd (got m={m}, c={c})"
        )));
    }
    let mut g = MixedGraph::new(2 * m);
    for alpha in 0..2 {
        for i in 0..m {
            g.add_arc(alpha * m + i, alpha * m + (i + 1) % m)?;
        }
    }
    for i in 0..m {
        let j = match convention {
            CdrmConvention::Shift => (i + c) % m,
            CdrmConvention::Reflect => md(c as i64 - i as i64, m),
        };
        g.add_edge(i, m + j)?;
    }
    let labels = (0..2 * m).map(|v| format!("({},{})", v / m, v % m)).collect();
    Ok(g.with_labels(labels))
}
