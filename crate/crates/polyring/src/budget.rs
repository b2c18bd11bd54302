//! Resource budgets for basis computations.

use std::time::{Duration, Instant};

/// A step/time budget for a Groebner computation. Exceeding it surfaces as
/// [`crate::PolyError::BudgetExhausted`], never as a wrong answer.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub deadline: Option<Instant>,
    pub max_pairs: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    /// Wall-clock budget starting now.
    pub fn with_seconds(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs(secs)),
            max_pairs: None,
        }
    }

    /// Cap on the number of S-pairs processed per basis run.
    pub fn with_max_pairs(max_pairs: u64) -> Self {
        Budget {
            deadline: None,
            max_pairs: Some(max_pairs),
        }
    }

    pub fn deadline_passed(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn pairs_exceeded(&self, pairs_done: u64) -> bool {
        self.max_pairs.is_some_and(|m| pairs_done >= m)
    }
}
