//! Reduction-step budget so that pathological inputs fail loudly instead of
//! hanging.

use crate::error::{Error, Result};
use std::cell::Cell;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Counts reduction steps across one top-level computation. Exceeding the
/// limit aborts with [`Error::ResourceLimit`].
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn spend(&self, steps: u64) -> Result<()> {
        let next = self.used.get().saturating_add(steps);
        self.used.set(next);
        if next > self.limit {
            Err(Error::ResourceLimit)
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
