//! Cart lifecycles, finite resources, the daily schedule generator, the
//! Kanban fleet cap and per-day performance measures.

use std::collections::VecDeque;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::stochastics::{sample_discrete_cdf, sample_triangular, EmpiricalCdf, TriangularDist};

pub const MINUTES_PER_DAY: f64 = 1440.0;
/// Picking starts at 3 pm; the operating day starts at 8 am.
pub const PICKING_START_MIN: f64 = 420.0;
pub const CART_POOL_SIZE: u32 = 110;
pub const LOADING_EMPLOYEES: u32 = 4;
pub const WASHERS: u32 = 3;
pub const DRYING_MIN: f64 = 30.0;
pub const DEFAULT_WASH_CYCLE_MIN: f64 = 15.0;

/// Business weekdays; the simulated horizon iterates these only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weekday {
    Mon,
    Tue,
    Wed,
    Thu,
    Fri,
}

impl Weekday {
    pub const ALL: [Weekday; 5] = [
        Weekday::Mon,
        Weekday::Tue,
        Weekday::Wed,
        Weekday::Thu,
        Weekday::Fri,
    ];

    pub fn from_day_index(day: u32) -> Weekday {
        Self::ALL[(day % 5) as usize]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Weekday::Mon => "mon",
            Weekday::Tue => "tue",
            Weekday::Wed => "wed",
            Weekday::Thu => "thu",
            Weekday::Fri => "fri",
        }
    }

    pub fn parse(text: &str) -> Option<Weekday> {
        let lower = text.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|w| lower.starts_with(w.name()))
    }
}

impl std::fmt::Display for Weekday {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One surgical case scheduled for a given day: its soiled-release offset
/// (minutes after the 8 am day start) and its pre-drawn picking duration.
#[derive(Debug, Clone, Copy)]
pub struct SurgicalCase {
    pub case_id: u32,
    pub day: u32,
    pub weekday: Weekday,
    pub release_offset_min: f64,
    pub picking_min: f64,
}

/// Draws one day's surgical cases: a rounded triangular case count, then an
/// independent release offset per case from the weekday's empirical CDF.
/// All draws happen in case order so fleet-size changes never perturb them.
pub fn generate_day_schedule(
    day: u32,
    weekday: Weekday,
    case_count: Option<u32>,
    case_count_dist: &TriangularDist,
    release_cdf: &EmpiricalCdf,
    picking_dist: &TriangularDist,
    count_rng: &mut ChaCha8Rng,
    release_rng: &mut ChaCha8Rng,
    picking_rng: &mut ChaCha8Rng,
    first_case_id: u32,
) -> Vec<SurgicalCase> {
    let n = match case_count {
        Some(n) => n,
        // Surgery counts are integral; round the triangular draw.
        None => sample_triangular(case_count_dist, count_rng.gen::<f64>()).round() as u32,
    };
    (0..n)
        .map(|i| SurgicalCase {
            case_id: first_case_id + i,
            day,
            weekday,
            release_offset_min: sample_discrete_cdf(release_cdf, release_rng.gen::<f64>()),
            picking_min: sample_triangular(picking_dist, picking_rng.gen::<f64>()),
        })
        .collect()
}

/// The Kanban fleet cap: at most `cap` AGVs may hold a task at once. The
/// AGVs themselves act as the Kanban containers; requests beyond the cap
/// queue FIFO and are granted as active AGVs release.
#[derive(Debug, Clone)]
pub struct KanbanController {
    cap: u32,
    active: u32,
    max_active_today: u32,
    violations: u64,
}

impl KanbanController {
    pub fn new(cap: u32) -> Self {
        Self {
            cap,
            active: 0,
            max_active_today: 0,
            violations: 0,
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn active(&self) -> u32 {
        self.active
    }

    /// Sets today's cap. Raising it lets queued requests through; the caller
    /// re-polls its queue after this.
    pub fn set_cap(&mut self, cap: u32) {
        self.cap = cap;
        self.max_active_today = self.active;
    }

    pub fn take_max_active(&mut self) -> u32 {
        std::mem::replace(&mut self.max_active_today, self.active)
    }

    pub fn violations(&self) -> u64 {
        self.violations
    }

    pub fn can_acquire(&self) -> bool {
        self.active < self.cap
    }

    pub fn acquire(&mut self) {
        self.active += 1;
        if self.active > self.cap {
            self.violations += 1;
        }
        self.max_active_today = self.max_active_today.max(self.active);
    }

    pub fn release(&mut self) {
        assert!(self.active > 0, "kanban release without matching acquire");
        self.active -= 1;
    }
}

/// A counted resource pool with a FIFO wait queue of opaque tickets.
#[derive(Debug, Clone)]
pub struct CountedPool {
    capacity: u32,
    in_use: u32,
    pub waiters: VecDeque<u32>,
}

impl CountedPool {
    pub fn new(capacity: u32) -> Self {
        Self {
            capacity,
            in_use: 0,
            waiters: VecDeque::new(),
        }
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    pub fn in_use(&self) -> u32 {
        self.in_use
    }

    pub fn available(&self) -> u32 {
        self.capacity - self.in_use
    }

    pub fn try_seize(&mut self) -> bool {
        if self.in_use < self.capacity {
            self.in_use += 1;
            true
        } else {
            false
        }
    }

    pub fn release(&mut self) -> Option<u32> {
        assert!(self.in_use > 0, "pool release without matching seize");
        self.in_use -= 1;
        self.waiters.pop_front().inspect(|_| {
            self.in_use += 1;
        })
    }
}

/// Per-day outcomes: case volume, task completion time and travel summaries.
#[derive(Debug, Clone)]
pub struct DayMetrics {
    pub day: u32,
    pub weekday: Weekday,
    pub case_count: u32,
    /// Last clean drop-off minus first clean pickup, in minutes; `None`
    /// until the day recorded a clean trip.
    pub task_completion_min: Option<f64>,
    /// Clock time (minutes after the 8 am day start) of the last clean
    /// drop-off of the day.
    pub last_clean_drop_clock_min: Option<f64>,
    pub first_clean_pickup_min: Option<f64>,
    pub clean_travel_sum: f64,
    pub clean_trips: u32,
    pub soiled_travel_sum: f64,
    pub soiled_trips: u32,
    pub washed_travel_sum: f64,
    pub washed_trips: u32,
    pub max_active_agvs: u32,
    pub cart_shortage_waits: u32,
}

impl DayMetrics {
    pub fn new(day: u32, weekday: Weekday, case_count: u32) -> Self {
        Self {
            day,
            weekday,
            case_count,
            task_completion_min: None,
            last_clean_drop_clock_min: None,
            first_clean_pickup_min: None,
            clean_travel_sum: 0.0,
            clean_trips: 0,
            soiled_travel_sum: 0.0,
            soiled_trips: 0,
            washed_travel_sum: 0.0,
            washed_trips: 0,
            max_active_agvs: 0,
            cart_shortage_waits: 0,
        }
    }

    pub fn mean_clean_travel(&self) -> Option<f64> {
        (self.clean_trips > 0).then(|| self.clean_travel_sum / self.clean_trips as f64)
    }

    pub fn mean_soiled_travel(&self) -> Option<f64> {
        (self.soiled_trips > 0).then(|| self.soiled_travel_sum / self.soiled_trips as f64)
    }

    pub fn mean_washed_travel(&self) -> Option<f64> {
        (self.washed_trips > 0).then(|| self.washed_travel_sum / self.washed_trips as f64)
    }
}

/// Task completion time: max drop-off minus min pickup over one day's clean
/// trips. `None` when the day had no clean trips (reported missing, not 0).
pub fn task_completion_time(clean_trips: &[(f64, f64)]) -> Option<f64> {
    if clean_trips.is_empty() {
        return None;
    }
    let first_pickup = clean_trips.iter().map(|t| t.0).fold(f64::INFINITY, f64::min);
    let last_drop = clean_trips
        .iter()
        .map(|t| t.1)
        .fold(f64::NEG_INFINITY, f64::max);
    Some(last_drop - first_pickup)
}

#[cfg(test)]
mod unit {
    use super::*;
    use crate::stochastics::RngPolicy;

    #[test]
    fn kanban_grants_up_to_cap() {
        let mut k = KanbanController::new(3);
        for _ in 0..3 {
            assert!(k.can_acquire());
            k.acquire();
        }
        assert!(!k.can_acquire());
        assert_eq!(k.active(), 3);
        k.release();
        assert!(k.can_acquire());
        assert_eq!(k.violations(), 0);
    }

    #[test]
    fn kanban_cap_raise_mid_day() {
        let mut k = KanbanController::new(3);
        for _ in 0..3 {
            k.acquire();
        }
        k.set_cap(5);
        assert!(k.can_acquire());
        k.acquire();
        k.acquire();
        assert!(!k.can_acquire());
        assert_eq!(k.take_max_active(), 5);
    }

    #[test]
    #[should_panic(expected = "without matching acquire")]
    fn kanban_release_without_acquire_is_a_bug() {
        let mut k = KanbanController::new(1);
        k.release();
    }

    #[test]
    fn schedule_counts_stay_in_range() {
        let policy = RngPolicy::new(7);
        let mut streams = policy.replication_streams(0);
        let dist = TriangularDist::new(60.0, 68.0, 75.0).unwrap();
        let cdf = EmpiricalCdf::new(vec![(0.5, 0.0), (1.0, 1410.0)]).unwrap();
        let picking = TriangularDist::new(3.0, 4.0, 5.0).unwrap();
        for day in 0..20 {
            let cases = generate_day_schedule(
                day,
                Weekday::from_day_index(day),
                None,
                &dist,
                &cdf,
                &picking,
                &mut streams.case_count,
                &mut streams.release_time,
                &mut streams.picking_time,
                0,
            );
            assert!((60..=75).contains(&(cases.len() as u32)));
            for c in &cases {
                assert!(c.release_offset_min >= 0.0 && c.release_offset_min < MINUTES_PER_DAY);
                assert!((3.0..=5.0).contains(&c.picking_min));
            }
        }
    }

    #[test]
    fn schedule_is_reproducible() {
        let policy = RngPolicy::new(9);
        let dist = TriangularDist::new(69.0, 75.0, 80.0).unwrap();
        let cdf = EmpiricalCdf::new(vec![(0.3, 30.0), (1.0, 990.0)]).unwrap();
        let picking = TriangularDist::new(3.0, 4.0, 5.0).unwrap();
        let run = || {
            let mut s = policy.replication_streams(2);
            generate_day_schedule(
                3,
                Weekday::Thu,
                None,
                &dist,
                &cdf,
                &picking,
                &mut s.case_count,
                &mut s.release_time,
                &mut s.picking_time,
                100,
            )
        };
        let a = run();
        let b = run();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.release_offset_min, y.release_offset_min);
            assert_eq!(x.picking_min, y.picking_min);
        }
    }

    #[test]
    fn completion_time_spans_first_to_last() {
        assert_eq!(task_completion_time(&[]), None);
        assert_eq!(task_completion_time(&[(420.0, 429.7)]), Some(9.7));
        let trips = [(420.0, 500.0), (450.0, 620.0), (430.0, 550.0)];
        assert_eq!(task_completion_time(&trips), Some(200.0));
    }
}
