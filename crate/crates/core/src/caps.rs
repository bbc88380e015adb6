use crate::{Error, Result};

/// Desk-scale limits on exhaustive work, all expressed as a bound on the
/// field order `p^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Single sums and single counts (one pass over the field).
    pub enum_cap: u64,
    /// Double scans over `(a, x)`: `P_I`, message distributions.
    pub scan_cap: u64,
    /// The four-parameter `P_S` scan.
    pub ps_cap: u64,
    /// Message-pair entropy `H(E|M^2)`.
    pub pair_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_cap: 59_049, // 3^10
            scan_cap: 6_561,  // 3^8
            ps_cap: 243,      // 3^5
            pair_cap: 81,     // 3^4
        }
    }
}

pub(crate) fn check(size: u64, cap: u64) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}
