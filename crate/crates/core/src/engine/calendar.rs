//! The future-event calendar: a time-ordered queue with deterministic
//! insertion-order tie-breaking.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// One scheduled occurrence. Ordered by (time, insertion sequence).
struct Entry<E> {
    time: f64,
    seq: u64,
    event: E,
}

impl<E> PartialEq for Entry<E> {
    fn eq(&self, other: &Self) -> bool {
        self.time == other.time && self.seq == other.seq
    }
}

impl<E> Eq for Entry<E> {}

impl<E> PartialOrd for Entry<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E> Ord for Entry<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the earliest entry.
        other
            .time
            .total_cmp(&self.time)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Pending events ordered by time; ties fire in insertion order, which keeps
/// replications deterministic under simultaneous events.
pub struct EventCalendar<E> {
    heap: BinaryHeap<Entry<E>>,
    clock: f64,
    next_seq: u64,
}

impl<E> EventCalendar<E> {
    pub fn new() -> Self {
        Self {
            heap: BinaryHeap::new(),
            clock: 0.0,
            next_seq: 0,
        }
    }

    /// Simulated minutes since replication start.
    pub fn clock(&self) -> f64 {
        self.clock
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn schedule(&mut self, time: f64, event: E) {
        debug_assert!(time.is_finite());
        debug_assert!(
            time >= self.clock,
            "cannot schedule into the past ({time} < {})",
            self.clock
        );
        let seq = self.next_seq;
        self.next_seq += 1;
        self.heap.push(Entry { time, seq, event });
    }

    pub fn schedule_now(&mut self, event: E) {
        let now = self.clock;
        self.schedule(now, event);
    }

    /// Pops the next event, advancing the clock (never backwards).
    pub fn next(&mut self) -> Option<(f64, E)> {
        let entry = self.heap.pop()?;
        debug_assert!(entry.time >= self.clock);
        self.clock = entry.time;
        Some((entry.time, entry.event))
    }
}

impl<E> Default for EventCalendar<E> {
    fn default() -> Self {
        Self::new()
    }
}
