//! Work limits shared by every enumeration in the crate.

use crate::error::{Error, Result};

/// Limits on brute-force enumeration.
///
/// `max_work` bounds the size of a search space (`n^d` maps, lattice points in
/// a bounding box, colorings). `max_ideals` bounds the order-ideal lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_work: u64,
    pub max_ideals: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_work: 200_000_000,
            max_ideals: 1 << 16,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_work: u64::MAX,
            max_ideals: usize::MAX,
        }
    }

    pub fn with_max_work(max_work: u64) -> Self {
        Budget {
            max_work,
            ..Budget::default()
        }
    }

    /// Refuses when `needed` exceeds `max_work`.
    pub fn charge(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > u128::from(self.max_work) {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                budget: self.max_work,
            });
        }
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(u128::from(base));
        if acc == 0 {
            break;
        }
    }
    acc
}
