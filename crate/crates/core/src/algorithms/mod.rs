//! Decision and search procedures on `H̃`.

mod audit;
mod frattini;
mod membership;
mod order;
mod search;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::Family;

pub use audit::{lipschitz_audit, DistortionRow};
pub use frattini::{frattini_witness_search, FrattiniOutcome};
pub use membership::{
    induced_order_list, membership, membership_by_enumeration, preimage_sign, MembershipTarget,
    OrderListEntry,
};
pub use order::{compare_l2, sign_l1, sign_l2};
pub use search::{
    enumerate_h, enumerate_h_with, geodesic_length, GeodesicOracle, GeodesicStore, HBall, HEntry,
};

/// Cooperative cancellation flag shared between a caller and a running search.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Resource limits for searches. `max_states` bounds the number of stored
/// elements in any ball built by a search.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_states: usize,
    pub cancel: CancelToken,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 400_000,
            cancel: CancelToken::new(),
        }
    }
}

impl Budget {
    pub fn with_states(max_states: usize) -> Self {
        Budget {
            max_states,
            ..Budget::default()
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.cancel.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

/// `(C, k)` with `|g|/C − k ≤ |Ψ(g)| ≤ C|g| + k`. For `Ψ` restricted to
/// `G_l` the constants are `C = 2^(M_l + 2)`, `k = 0`, where `M_l` is the
/// largest global index of a generator of `G_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QiConstants {
    pub c: u64,
    pub k: u64,
}

impl QiConstants {
    pub fn for_group(fam: &Family, l: usize) -> Result<QiConstants> {
        Self::from_max_index(fam.max_index(l)?)
    }

    /// Constants for all of `G = ⊕ G_l` (finite families only).
    pub fn for_direct_sum(fam: &Family) -> Result<QiConstants> {
        let n = fam
            .generator_total()
            .ok_or_else(|| Error::Unsupported("whole-G constants need a finite family".into()))?;
        Self::from_max_index(n.max(1))
    }

    fn from_max_index(m: u64) -> Result<QiConstants> {
        if m + 2 >= 63 {
            return Err(Error::Unsupported(format!(
                "Lipschitz constant 2^{} overflows",
                m + 2
            )));
        }
        Ok(QiConstants {
            c: 1 << (m + 2),
            k: 0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupDescriptor;

    #[test]
    fn lipschitz_constants() {
        let fam = Family::finite(vec![
            GroupDescriptor::integers(),
            GroupDescriptor::free_abelian(2),
        ]);
        assert_eq!(
            QiConstants::for_group(&fam, 1).unwrap(),
            QiConstants { c: 8, k: 0 }
        );
        assert_eq!(
            QiConstants::for_group(&fam, 2).unwrap(),
            QiConstants { c: 32, k: 0 }
        );
        assert_eq!(QiConstants::for_direct_sum(&fam).unwrap().c, 32);
    }

    #[test]
    fn cancellation_stops_searches() {
        let fam = Family::finite(vec![GroupDescriptor::integers()]);
        let budget = Budget::default();
        budget.cancel.cancel();
        let r = geodesic_length(&crate::wreath::Psi_gen(1, &fam).unwrap(), &fam, 8, &budget);
        assert!(matches!(r, Err(Error::Cancelled)));
    }
}
