//! Size limits for the exponential-time solvers.

use crate::error::{Error, Result};

/// Vertex-count ceilings for each exact solver. Instances above a ceiling are
/// rejected with [`Error::BudgetExceeded`] before any search starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Exact independence number.
    pub alpha: usize,
    /// Enumeration of all maximum independent sets.
    pub enumerate: usize,
    /// Exact chromatic number.
    pub chi: usize,
    /// Exact local chromatic number.
    pub psi: usize,
    /// Domain of a homomorphism search.
    pub hom_domain: usize,
    /// Codomain of a homomorphism search.
    pub hom_codomain: usize,
    /// Subset search for `nu(G, K)` with a general target `K`.
    pub nu: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            alpha: 2000,
            enumerate: 60,
            chi: 60,
            psi: 15,
            hom_domain: 15,
            hom_codomain: 60,
            nu: 12,
        }
    }
}

impl Budget {
    pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::BudgetExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}
