//! Discrete-event simulation of a zone-controlled guided-path AGV network
//! moving surgical case carts in a hospital, plus the surrounding tooling:
//! trip-log ingestion, input modeling, scenario evaluation and per-weekday
//! fleet-size optimization.
//!
//! The crate is organized around one immutable [`layout::NetworkSpec`] shared
//! by all replications, a sequential event core per replication
//! ([`engine`] / [`workflow`]), and a replication [`runner`] that fans out
//! independent seeded replications (in parallel when the `parallel` feature
//! is enabled).

pub mod engine;
pub mod ingest;
pub mod layout;
pub mod optimizer;
pub mod report;
pub mod runner;
pub mod scenario;
pub mod stochastics;
pub mod workflow;

pub use layout::NetworkSpec;
pub use scenario::Scenario;
