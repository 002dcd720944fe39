//! Size guard for the exponential enumerations.
//!
//! Gradient censuses and rooted-forest enumerations branch over every cell
//! at the top two levels of a complex, so their cost grows exponentially in
//! the size of those levels. The guard caps that size with a default that
//! stays comfortably interactive, and callers can raise or drop the cap
//! explicitly when they know what they are asking for.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    limit: usize,
}

impl Guard {
    /// Default cap on `|K_{d-1}| + |K_d|` for enumerations at level d.
    pub const DEFAULT_LIMIT: usize = 40;

    pub fn new(limit: usize) -> Self {
        Guard { limit }
    }

    pub fn unlimited() -> Self {
        Guard { limit: usize::MAX }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Checks that the incidence between levels d-1 and d is small enough
    /// to enumerate over.
    pub fn check_incidence(&self, k: &SimplicialComplex, d: usize) -> Result<()> {
        let n = k.n_cells(d - 1);
        let m = k.n_cells(d);
        if n + m > self.limit {
            return Err(Error::InstanceTooLarge(format!(
                "levels {} and {} hold {} + {} cells (guard limit {})",
                d - 1,
                d,
                n,
                m,
                self.limit
            )));
        }
        Ok(())
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            limit: Self::DEFAULT_LIMIT,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    #[test]
    fn default_admits_the_catalog() {
        let rp2 = builtin("projective_plane", None).unwrap();
        assert!(Guard::default().check_incidence(&rp2, 2).is_ok());
    }

    #[test]
    fn tight_limit_rejects() {
        let rp2 = builtin("projective_plane", None).unwrap();
        let err = Guard::new(10).check_incidence(&rp2, 2).unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("instance too large:"), "{msg}");
        assert!(msg.contains("15 + 10"), "{msg}");
        assert!(Guard::unlimited().check_incidence(&rp2, 2).is_ok());
    }
}
