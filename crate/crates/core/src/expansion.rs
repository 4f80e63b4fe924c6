//! Verification of the simplex expansion inequality `‖d1 φ‖ ≥ n ‖[φ]‖ / 3`,
//! exhaustively at tiny sizes and by sampling beyond, plus the gauge identity
//! `d1 φ(u,v,w) = (φ_u.φ)(v,w)` that drives its proof.
//!
//! Both verifiers measure `‖d1 φ‖` over the complete triple set of the
//! simplex. This is deliberately different from the cocycle tests in
//! [`crate::search`], which evaluate `d1` only on the triangles of a
//! subcomplex.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::Cochain1;
use crate::complex::pair_count;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::seeding;

/// Outcome of one expansion verification run.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub n: u32,
    pub group: String,
    /// `"exhaustive"` or `"sampled"`.
    pub mode: String,
    pub cochains_checked: u64,
    /// Cochains with an exact orbit weight that violate the inequality;
    /// nonzero means the inequality (or this implementation) is wrong.
    pub violations: u64,
    /// Sampled cochains whose orbit weight search was truncated and whose
    /// best-found weight could not certify the inequality either way.
    pub inconclusive: u64,
    /// Smallest observed `‖d1 φ‖ / ‖[φ]‖` over cochains with `‖[φ]‖ > 0` and
    /// an exact weight.
    pub min_ratio: Option<f64>,
    /// `(‖d1 φ‖, ‖[φ]‖)` attaining the minimum ratio.
    pub min_ratio_parts: Option<(u64, u64)>,
    /// The minimizing cochain, in the 1-cochain text format.
    pub min_witness: Option<String>,
}

impl ExpansionReport {
    fn empty(n: u32, group: &FiniteGroup, mode: &str) -> ExpansionReport {
        ExpansionReport {
            n,
            group: group.name().to_string(),
            mode: mode.to_string(),
            cochains_checked: 0,
            violations: 0,
            inconclusive: 0,
            min_ratio: None,
            min_ratio_parts: None,
            min_witness: None,
        }
    }

    fn observe_ratio(&mut self, d1_norm: usize, weight: usize, phi: &Cochain1) {
        if weight == 0 {
            return;
        }
        let ratio = d1_norm as f64 / weight as f64;
        if self.min_ratio.map_or(true, |current| ratio < current) {
            self.min_ratio = Some(ratio);
            self.min_ratio_parts = Some((d1_norm as u64, weight as u64));
            self.min_witness = Some(phi.to_text());
        }
    }
}

/// Cap on `|G|^C(n,2)` for the exhaustive verifier.
pub const EXHAUSTIVE_CAP: u64 = 10_000_000;

/// Check `3 ‖d1 φ‖ ≥ n ‖[φ]‖` for every 1-cochain on `n` vertices over `G`.
///
/// Requires `|G|^C(n,2) <= 10^7` (for example `n = 4` with `|G| <= 13`,
/// `n = 5` with `|G| <= 3`, or `n = 6` with `|G| = 2`). Orbit weights are
/// always exact here: the gauge space `|G|^(n-1)` is no larger than the
/// cochain space.
pub fn verify_expansion_exhaustive(n: u32, group: &Arc<FiniteGroup>) -> Result<ExpansionReport> {
    let slots = pair_count(n) as u32;
    let order = group.order() as u64;
    let mut total: u64 = 1;
    for _ in 0..slots {
        total = total.saturating_mul(order);
        if total > EXHAUSTIVE_CAP {
            return Err(Error::Infeasible(format!(
                "|{}|^C({n},2) exceeds {EXHAUSTIVE_CAP}",
                group.name()
            )));
        }
    }
    #[derive(Default, Clone, Copy)]
    struct Tally {
        checked: u64,
        violations: u64,
        /// (ratio, code, d1_norm, weight); ties broken by code so the merge
        /// order cannot change the reported witness.
        min: Option<(f64, u64, usize, usize)>,
    }
    let merge_min = |a: Option<(f64, u64, usize, usize)>, b: Option<(f64, u64, usize, usize)>| {
        match (a, b) {
            (Some(x), Some(y)) => Some(if (y.0, y.1) < (x.0, x.1) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    };
    let tally = (0..total)
        .into_par_iter()
        .fold(Tally::default, |mut acc, code| {
            let phi = decode_cochain(group, n, code);
            let d1_norm = phi.d1_norm();
            let weight = phi.orbit_weight(EXHAUSTIVE_CAP);
            debug_assert!(weight.exact);
            acc.checked += 1;
            if 3 * d1_norm < n as usize * weight.weight {
                acc.violations += 1;
            }
            if weight.weight > 0 {
                let ratio = d1_norm as f64 / weight.weight as f64;
                acc.min = merge_min(acc.min, Some((ratio, code, d1_norm, weight.weight)));
            }
            acc
        })
        .reduce(Tally::default, |a, b| Tally {
            checked: a.checked + b.checked,
            violations: a.violations + b.violations,
            min: merge_min(a.min, b.min),
        });
    let mut report = ExpansionReport::empty(n, group, "exhaustive");
    report.cochains_checked = tally.checked;
    report.violations = tally.violations;
    if let Some((_, code, d1_norm, weight)) = tally.min {
        report.observe_ratio(d1_norm, weight, &decode_cochain(group, n, code));
    }
    Ok(report)
}

/// Check the inequality on `trials` uniform random cochains. Each trial also
/// asserts the two countable identities behind the inequality's proof: the
/// ordered support of `d1 φ` has exactly `6 ‖d1 φ‖` elements, and the vertex
/// gauges satisfy `Σ_u ‖φ_u.φ‖ ≥ n ‖[φ]‖`.
///
/// When the orbit-weight search is truncated, its best-found weight is an
/// upper bound on `‖[φ]‖`; the trial still certifies the inequality when
/// `3 ‖d1 φ‖ ≥ n * bound`, and counts as inconclusive otherwise.
pub fn verify_expansion_sampled(
    n: u32,
    group: &Arc<FiniteGroup>,
    trials: u64,
    seed: u64,
) -> Result<ExpansionReport> {
    let mut report = ExpansionReport::empty(n, group, "sampled");
    struct Trial {
        seed: u64,
        d1_norm: usize,
        weight: usize,
        exact: bool,
        certified: bool,
    }
    let records: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let trial_seed = seeding::derive(seed, t);
            let phi = Cochain1::random(group.clone(), n, trial_seed);
            let d1_norm = phi.d1_norm();
            assert_eq!(
                ordered_coboundary_support(&phi),
                6 * d1_norm,
                "ordered support must be six times the unordered one"
            );
            let weight = phi.orbit_weight(Cochain1::DEFAULT_WEIGHT_BUDGET);
            let vertex_gauge_total: usize = (1..=n)
                .map(|u| phi.vertex_gauge(u).act(&phi).support_size())
                .sum();
            assert!(
                vertex_gauge_total >= n as usize * weight.weight,
                "per-vertex gauge supports cannot undercut the orbit weight"
            );
            Trial {
                seed: trial_seed,
                d1_norm,
                weight: weight.weight,
                exact: weight.exact,
                certified: 3 * d1_norm >= n as usize * weight.weight,
            }
        })
        .collect();
    for trial in records {
        report.cochains_checked += 1;
        if trial.certified {
            if trial.exact {
                let phi = Cochain1::random(group.clone(), n, trial.seed);
                report.observe_ratio(trial.d1_norm, trial.weight, &phi);
            }
        } else if trial.exact {
            report.violations += 1;
        } else {
            report.inconclusive += 1;
        }
    }
    Ok(report)
}

/// Number of ordered triples `(u,v,w)` of distinct vertices where
/// `d1 φ(u,v,w)` is not the identity.
fn ordered_coboundary_support(phi: &Cochain1) -> usize {
    let n = phi.n();
    let mut count = 0;
    for u in 1..=n {
        for v in 1..=n {
            for w in 1..=n {
                if u != v && v != w && u != w && !phi.d1(u, v, w).is_identity() {
                    count += 1;
                }
            }
        }
    }
    count
}

/// The proof's pointwise identity: for every ordered pair `(v,w)` of vertices
/// distinct from `u`, `d1 φ(u,v,w) = (φ_u.φ)(v,w)`.
pub fn check_gauge_identity(phi: &Cochain1, u: u32) -> bool {
    let n = phi.n();
    assert!((1..=n).contains(&u));
    let acted = phi.vertex_gauge(u).act(phi);
    for v in 1..=n {
        for w in 1..=n {
            if v != w && v != u && w != u && acted.get(v, w) != phi.d1(u, v, w) {
                return false;
            }
        }
    }
    true
}

fn decode_cochain(group: &Arc<FiniteGroup>, n: u32, mut code: u64) -> Cochain1 {
    let order = group.order() as u64;
    let mut phi = Cochain1::identity(group.clone(), n);
    for u in 1..=n {
        for v in u + 1..=n {
            phi.set(u, v, crate::group::GroupElement((code % order) as u16));
            code /= order;
        }
    }
    phi
}

/// Iterate every cochain code for exhaustive sweeps in tests.
#[cfg(test)]
fn cochain_space_size(group: &FiniteGroup, n: u32) -> u64 {
    (group.order() as u64).pow(pair_count(n) as u32)
}
