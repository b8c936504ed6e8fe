//! Cooperative wall-clock budget for the exponential kernels.

use std::cell::Cell;
use std::time::{Duration, Instant};

/// Marker returned when a [`Deadline`] expires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timeout;

const CHECK_EVERY: u32 = 1 << 12;

/// A point in time after which long-running searches give up.
///
/// Checking the clock is amortized: [`Deadline::tick`] only reads it once
/// every few thousand calls.
#[derive(Debug, Clone)]
pub struct Deadline {
    at: Option<Instant>,
    ticks: Cell<u32>,
}

impl Deadline {
    pub fn none() -> Self {
        Deadline { at: None, ticks: Cell::new(0) }
    }

    pub fn after(budget: Duration) -> Self {
        Deadline { at: Instant::now().checked_add(budget), ticks: Cell::new(0) }
    }

    pub fn from_option(budget: Option<Duration>) -> Self {
        budget.map_or_else(Deadline::none, Deadline::after)
    }

    pub fn is_unbounded(&self) -> bool {
        self.at.is_none()
    }

    pub fn expired(&self) -> bool {
        self.at.is_some_and(|at| Instant::now() >= at)
    }

    /// Cheap periodic check for tight loops.
    #[inline]
    pub fn tick(&self) -> Result<(), Timeout> {
        if self.at.is_none() {
            return Ok(());
        }
        let t = self.ticks.get().wrapping_add(1);
        self.ticks.set(t);
        if t.is_multiple_of(CHECK_EVERY) && self.expired() {
            Err(Timeout)
        } else {
            Ok(())
        }
    }

    pub fn check(&self) -> Result<(), Timeout> {
        if self.expired() {
            Err(Timeout)
        } else {
            Ok(())
        }
    }
}

impl Default for Deadline {
    fn default() -> Self {
        Deadline::none()
    }
}

/// Unwraps a result computed under [`Deadline::none`].
pub(crate) fn unbounded<T>(r: Result<T, Timeout>) -> T {
    match r {
        Ok(v) => v,
        Err(Timeout) => unreachable!("unbounded deadline expired"),
    }
}
