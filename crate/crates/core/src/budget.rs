use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Resource limits for enumeration-heavy operations. A budget never changes
/// an answer: exceeding one aborts with [`Error::BudgetExceeded`].
#[derive(Debug, Clone)]
pub struct Budget {
    max_points: u64,
    deadline: Option<Instant>,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(max_points: u64, time_limit: Option<Duration>) -> Self {
        Budget {
            max_points,
            deadline: time_limit.map(|d| Instant::now() + d),
            used: Cell::new(0),
        }
    }

    pub fn points(max_points: u64) -> Self {
        Self::new(max_points, None)
    }

    pub fn max_points(&self) -> u64 {
        self.max_points
    }

    /// Fresh meter with the same limits; the time deadline is shared so that
    /// nested calls cannot extend it.
    pub fn child(&self) -> Budget {
        Budget {
            max_points: self.max_points,
            deadline: self.deadline,
            used: Cell::new(0),
        }
    }

    /// Charge `n` enumeration steps against the budget.
    pub fn charge(&self, n: u64, what: &str) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.max_points {
            return Err(Error::BudgetExceeded(format!(
                "{what}: more than {} lattice points / enumeration steps",
                self.max_points
            )));
        }
        // The clock is only consulted every so often to keep charging cheap.
        if used % 4096 < n {
            self.check_time(what)?;
        }
        Ok(())
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExceeded(format!("{what}: time limit reached")));
            }
        }
        Ok(())
    }

    /// Refuse up front when an enumeration is known to need `n` steps.
    pub fn admit(&self, n: u64, what: &str) -> Result<()> {
        if n > self.max_points {
            return Err(Error::BudgetExceeded(format!(
                "{what}: would enumerate {n} points, limit is {}",
                self.max_points
            )));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::points(50_000_000)
    }
}
