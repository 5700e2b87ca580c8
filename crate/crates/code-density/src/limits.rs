//! Work limits guarding enumerations.
//!
//! Two budgets: a cap on the number of objects an enumeration may produce,
//! and a cap on "pair evaluations" (pairwise distance computations plus
//! subset-enumeration node expansions), the unit the exact-density oracles
//! are metered in.

use num::{BigUint, ToPrimitive};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkLimit {
    /// Maximum number of enumerated objects (vectors, subspaces, codes).
    pub max_objects: u64,
    /// Maximum number of pair evaluations in exact-density enumerations.
    pub max_pair_evals: u64,
}

impl Default for WorkLimit {
    fn default() -> Self {
        WorkLimit {
            max_objects: 10_000_000,
            max_pair_evals: 100_000_000,
        }
    }
}

impl WorkLimit {
    /// A single unified budget for both caps.
    pub fn unified(budget: u64) -> Self {
        WorkLimit {
            max_objects: budget,
            max_pair_evals: budget,
        }
    }

    /// Check an exact object count against the object cap and return it as
    /// a machine integer.
    pub fn check_objects(&self, count: &BigUint, what: &'static str) -> Result<u64> {
        match count.to_u64() {
            Some(c) if c <= self.max_objects => Ok(c),
            _ => Err(Error::WorkLimitExceeded {
                what,
                needed: count.to_string(),
                budget: self.max_objects,
            }),
        }
    }

    /// Check a projected pair-evaluation count against the pair budget.
    pub fn check_pairs(&self, count: &BigUint, what: &'static str) -> Result<u64> {
        match count.to_u64() {
            Some(c) if c <= self.max_pair_evals => Ok(c),
            _ => Err(Error::WorkLimitExceeded {
                what,
                needed: count.to_string(),
                budget: self.max_pair_evals,
            }),
        }
    }

    /// Start metering pair evaluations against the pair budget.
    pub fn pair_meter(&self, what: &'static str) -> PairMeter {
        PairMeter {
            used: 0,
            budget: self.max_pair_evals,
            what,
        }
    }
}

/// Running counter of pair evaluations, charged as work happens.
#[derive(Debug)]
pub struct PairMeter {
    used: u64,
    budget: u64,
    what: &'static str,
}

impl PairMeter {
    pub fn spend(&mut self, amount: u64) -> Result<()> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.budget {
            return Err(Error::WorkLimitExceeded {
                what: self.what,
                needed: format!("more than {}", self.used),
                budget: self.budget,
            });
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
