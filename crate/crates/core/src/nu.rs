//! The instability measure `ν(λ, v) = m(v, λ) / ‖λ‖`, kept exact.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// `ν = m / √normsq`, stored as the integer pair and ordered by the exact
/// rational `sign(m)·m² / normsq`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Nu {
    pub m: i64,
    pub normsq: i64,
}

impl Nu {
    pub fn new(m: i64, normsq: i64) -> Self {
        assert!(normsq > 0, "a 1-PS has positive norm");
        Nu { m, normsq }
    }

    fn key(self) -> i128 {
        self.m as i128 * (self.m as i128).abs()
    }

    /// Identical pair, not just identical value.
    pub fn same_pair(self, other: Nu) -> bool {
        self.m == other.m && self.normsq == other.normsq
    }
}

impl PartialEq for Nu {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Nu {}

impl PartialOrd for Nu {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Nu {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.key() * other.normsq as i128).cmp(&(other.key() * self.normsq as i128))
    }
}
