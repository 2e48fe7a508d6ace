//! Maximum-order searches: exhaustive enumeration for small orders, voltage
//! lifts for larger ones, and a scan over chordal double rings.

mod exhaustive;
mod lift;
mod reach;
mod report;

pub use exhaustive::exhaustive_max_order;
pub use lift::{lift_search, LiftTemplate, MAX_LIFT_WITNESSES};
pub use report::{SearchKind, SearchReport};

use crate::error::Result;
use crate::families::{cdrm, CdrmConvention};
use crate::metrics::{diameter, Distance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CdrmScan {
    pub c: usize,
    pub convention: CdrmConvention,
    pub diameter: Distance,
}

/// Smallest diameter of `CDRM` on `2m` vertices over odd `c < m` and both
/// conventions; ties go to the smaller `c`, then to `Shift`.
pub fn cdrm_scan(m: usize) -> Result<CdrmScan> {
    let mut best: Option<CdrmScan> = None;
    for c in (1..m).step_by(2) {
        for convention in [CdrmConvention::Shift, CdrmConvention::Reflect] {
            let d = diameter(&cdrm(m, c, convention)?);
            if best.is_none_or(|b| d < b.diameter) {
                best = Some(CdrmScan {
                    c,
                    convention,
                    diameter: d,
                });
            }
        }
    }
    // m = 0 or an odd m are rejected here
    match best {
        Some(b) => Ok(b),
        None => cdrm(m, 1, CdrmConvention::Shift).map(|_| unreachable!("m < 2 has no odd c")),
    }
}
