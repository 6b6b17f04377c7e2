use crate::error::{Error, Result};
use std::cell::Cell;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Node budget for exhaustive searches. Exceeding it is an explicit,
/// reported condition, never a silent truncation.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: Cell::new(0) }
    }

    /// Limit from the COSETKIT_BUDGET environment variable, or the default.
    pub fn from_env() -> Budget {
        let limit = std::env::var("COSETKIT_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Budget::new(limit)
    }

    pub fn tick(&self) -> Result<()> {
        let n = self.used.get() + 1;
        self.used.set(n);
        if n > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}
