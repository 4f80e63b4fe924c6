//! Shared fixtures for the criterion benchmarks.

use std::sync::Arc;

use ynp::group::build_group;
use ynp::FiniteGroup;

pub fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_group(spec).expect("benchmark group spec"))
}

/// The threshold-scale probability `alpha * log n / n`.
pub fn threshold_p(n: u32, alpha: f64) -> f64 {
    alpha * (n as f64).ln() / n as f64
}
