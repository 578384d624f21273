//! Random-variate generation, the seeded multi-stream RNG policy, and the
//! statistical estimators used for model validation.

mod distributions;
mod rng;

pub use distributions::{
    parse_distribution_literal, sample_discrete_cdf, sample_triangular, DistributionLiteral,
    EmpiricalCdf, TriangularDist,
};
pub use rng::{ReplicationStreams, RngPolicy, Stream};
pub use tests::{
    coefficient_of_variation, mean_ci, variance_ratio_test, welch_t_test, TestResult,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StochasticsError {
    #[error("invalid triangular parameters (min {min}, mode {mode}, max {max})")]
    InvalidTriangular { min: f64, mode: f64, max: f64 },
    #[error("invalid empirical cdf: {0}")]
    InvalidCdf(String),
    #[error("malformed distribution literal `{0}`: {1}")]
    BadLiteral(String, String),
    #[error("sample too small: need at least {need} values, got {got}")]
    SampleTooSmall { need: usize, got: usize },
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),
    #[error("confidence level must lie in (0, 1), got {0}")]
    BadLevel(f64),
}
