//! Upper bounds on the order of bipartite mixed graphs.
//!
//! * the bipartite Moore bound `M_B(r, z, k)`,
//! * the chain-counting refinement for totally regular (1,1) graphs,
//! * the order bound for chordal ring mixed graphs.

use crate::error::{Error, Result};

/// Derived quantities of the bipartite Moore bound for degrees `(r, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MooreParams {
    pub d: u64,
    pub v: u64,
    pub u1: f64,
    pub u2: f64,
    pub a: f64,
    pub b: f64,
}

impl MooreParams {
    pub fn new(r: u64, z: u64) -> Self {
        let d = r + z;
        let v = (d - 1) * (d - 1) + 4 * z;
        let sv = (v as f64).sqrt();
        let df = d as f64;
        Self {
            d,
            v,
            u1: (df - 1.0 - sv) / 2.0,
            u2: (df - 1.0 + sv) / 2.0,
            a: (sv - (df + 1.0)) / (2.0 * sv),
            b: (sv + (df + 1.0)) / (2.0 * sv),
        }
    }

    /// Closed-form bound in floating point (not rounded).
    pub fn closed_form(&self, k: u32) -> Result<f64> {
        let term = |coef: f64, u: f64| -> Result<f64> {
            let den = u * u - 1.0;
            if den.abs() < 1e-12 {
                return Err(Error::NumericInstability(format!(
                    "root u = {u} makes u^2 - 1 vanish"
                )));
            }
            Ok(coef * (u.powi(k as i32 + 1) - u) / den)
        };
        Ok(2.0 * (term(self.a, self.u1)? + term(self.b, self.u2)?))
    }
}

fn moore_11(k: u32) -> u64 {
    let (mut prev, mut cur) = (2u64, 4u64);
    match k {
        1 => prev,
        _ => {
            for _ in 2..k {
                (prev, cur) = (cur, cur + prev + 2);
            }
            cur
        }
    }
}

/// The bipartite Moore bound `M_B(r, z, k)`.
///
/// For `r = z = 1` the exact recurrence `M_B(k) = M_B(k-1) + M_B(k-2) + 2`
/// with `M_B(1) = 2`, `M_B(2) = 4` is used; otherwise the closed form is
/// rounded, and a relative rounding error above `1e-6` is reported.
pub fn moore_bipartite(r: u64, z: u64, k: u32) -> Result<u64> {
    if r == 0 || z == 0 || k == 0 {
        return Err(Error::BadParams(format!(
            "need r, z, k >= 1 (got r={r}, z={z}, k={k})"
        )));
    }
    if r == 1 && z == 1 {
        return Ok(moore_11(k));
    }
    let x = MooreParams::new(r, z).closed_form(k)?;
    let rounded = x.round();
    if !x.is_finite() || (x - rounded).abs() > 1e-6 * rounded.abs().max(1.0) {
        return Err(Error::NumericInstability(format!(
            "closed form {x} is not close to an integer"
        )));
    }
    Ok(rounded as u64)
}

/// Number of maximal chains starting at level `t` of the Moore tree:
/// `eta(1) = 1` and `eta(t) = F(t-1)` (Fibonacci) for `t >= 2`.
pub fn eta(t: u32) -> u64 {
    assert!(t >= 1, "eta is defined for t >= 1");
    if t == 1 {
        return 1;
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..t - 1 {
        (a, b) = (b, a + b);
    }
    b
}

/// Chain-counting upper bound on the order of a totally regular bipartite
/// (1,1,k)-mixed graph, `k >= 3`.
pub fn improved_bound(k: u32) -> Result<u64> {
    if k < 3 {
        return Err(Error::UnsupportedK(k));
    }
    let moore = moore_11(k);
    let kappa = k / 2;
    let ceil3 = |x: u32| u64::from(x.div_ceil(3));
    let defect = if k % 2 == 0 {
        let chains: u64 = (2..kappa)
            .map(|t| eta(2 * t - 1) * ceil3(kappa - t + 1))
            .sum();
        2 * ceil3(kappa) + 2 * chains
    } else {
        // k = 3 gives an empty sum
        (1..kappa)
            .map(|t| 2 * eta(2 * t) * ceil3(kappa - t + 1))
            .sum()
    };
    Ok(moore - defect)
}

/// Largest order of a chordal ring mixed graph with diameter `k`.
pub fn crm_upper(k: u32) -> u64 {
    let k = u64::from(k);
    if k % 2 == 1 {
        (k + 1) * (k + 1) / 2
    } else {
        k * (k + 2) / 2
    }
}

/// All three bounds for one diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: u32,
    pub moore: u64,
    pub improved: u64,
    pub crm_upper: u64,
}

pub fn bounds_report(k: u32) -> Result<BoundsReport> {
    Ok(BoundsReport {
        k,
        moore: moore_bipartite(1, 1, k)?,
        improved: improved_bound(k)?,
        crm_upper: crm_upper(k),
    })
}
