//! Random 2-dimensional complexes with full 1-skeleton, non-abelian first
//! cohomology over finite coefficient groups, and detection of small quotients
//! of the fundamental group.
//!
//! The probability space `Y(n,p)` contains every complex between the 1-skeleton
//! and the 2-skeleton of the simplex on `n` vertices; each triangle is present
//! independently with probability `p`. For a finite group `G`, the set
//! `H^1(X;G)` of gauge orbits of `G`-valued 1-cocycles is in bijection with
//! `Hom(pi_1(X),G)/G`, so nontriviality of `H^1(X;G)` for some simple `G` of
//! order at most `N` is equivalent to `pi_1(X)` having a proper normal subgroup
//! of index at most `N`. This crate provides:
//!
//! - [`group`]: dense-table finite group arithmetic and the catalog of
//!   nontrivial simple groups up to a given order,
//! - [`complex`]: the seeded, monotonely coupled `Y(n,p)` sampler,
//! - [`cochain`]: the non-abelian cochain algebra (`d0`, `d1`, the gauge
//!   action, support sizes and orbit weights),
//! - [`search`]: star-gauge-fixed cocycle enumeration and quotient detection
//!   by backtracking with unit propagation,
//! - [`expansion`]: verification of the simplex expansion inequality
//!   `‖d1φ‖ ≥ n‖[φ]‖/3`,
//! - [`experiments`]: reproducible Monte Carlo sweeps and union-bound
//!   diagnostics.

pub mod cochain;
pub mod complex;
mod error;
pub mod expansion;
pub mod experiments;
pub mod group;
pub mod search;
pub(crate) mod seeding;

pub use cochain::{Cochain0, Cochain1};
pub use complex::Complex2;
pub use error::{Error, Result};
pub use expansion::{check_gauge_identity, verify_expansion_exhaustive, verify_expansion_sampled, ExpansionReport};
pub use experiments::{
    estimate_cocycle_probability, quotient_experiment, threshold_sweep, union_bound_value,
    ExperimentConfig, ExperimentResult,
};
pub use group::{build_group, simple_group_catalog, FiniteGroup, GroupElement};
pub use search::{
    count_hom_orbits, enumerate_cocycles, has_nontrivial_class, has_small_quotient, presentation,
    star_gauge_fix, CohomologyReport, Presentation,
};
