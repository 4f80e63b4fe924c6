//! Reproducible Monte Carlo experiments: survival probabilities of a fixed
//! cohomology class, threshold sweeps for `H^1(Y;G)` nontriviality, the
//! small-quotient experiment at the theorem's parameterization
//! `p = (6+7c) log n / n`, and the union-bound arithmetic behind it.
//!
//! All randomness flows from a master seed through indexed derivation, so a
//! config reproduces its result file byte for byte. Trial seeds are shared
//! across grid cells by default: with the monotone coupled sampler this makes
//! each trial's nontriviality indicator non-increasing along the grid, and
//! hence the whole estimate curve monotone.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cochain::Cochain1;
use crate::complex::sample_complex;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::search::{has_nontrivial_class_budgeted, has_small_quotient_budgeted};
use crate::seeding;

/// Configuration for a sweep or quotient experiment.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExperimentConfig {
    pub n: u32,
    /// Coefficient group spec for threshold sweeps.
    pub group: Option<String>,
    /// Catalog bound for quotient experiments.
    pub max_index: Option<u32>,
    /// Quotient-experiment exponent: defaults `max_index` to `floor(n^c)` and
    /// the probability to `(6+7c) log n / n` when no explicit grid is given.
    pub c: Option<f64>,
    /// Explicit probability grid; must be ascending.
    pub p_grid: Vec<f64>,
    pub trials: u32,
    pub seed: u64,
    /// Output path stem for the CLI (`<out>.json` / `<out>.csv`).
    pub out: Option<String>,
    /// Reuse trial seeds across cells (monotone coupling); on by default.
    pub share_seeds: bool,
    /// Per-search node budget before a trial is declared infeasible.
    pub node_budget: u64,
}

impl ExperimentConfig {
    pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

    pub fn new(n: u32) -> ExperimentConfig {
        ExperimentConfig {
            n,
            group: None,
            max_index: None,
            c: None,
            p_grid: Vec::new(),
            trials: 1,
            seed: 0,
            out: None,
            share_seeds: true,
            node_budget: Self::DEFAULT_NODE_BUDGET,
        }
    }

    /// Parse the `key = value` config format. Unknown keys are rejected.
    /// `p_list` takes explicit probabilities; `alpha_list` takes coefficients
    /// `α` mapped through `p = α log n / n`.
    pub fn from_text(text: &str) -> Result<ExperimentConfig> {
        let mut fields: std::collections::HashMap<&str, String> = Default::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected `key = value`, got `{line}`")))?;
            if fields.insert(key.trim(), value.trim().to_string()).is_some() {
                return Err(Error::Config(format!("duplicate key `{}`", key.trim())));
            }
        }
        let mut take = |key: &str| fields.remove(key);
        let parse_num = |key: &str, value: &str| -> Result<f64> {
            value
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("bad numeric value for `{key}`: `{value}`")))
        };
        let n = match take("n") {
            Some(v) => parse_num("n", &v)? as u32,
            None => return Err(Error::Config("missing required key `n`".into())),
        };
        let mut config = ExperimentConfig::new(n);
        config.group = take("group");
        if let Some(v) = take("max_index") {
            config.max_index = Some(parse_num("max_index", &v)? as u32);
        }
        if let Some(v) = take("c") {
            config.c = Some(parse_num("c", &v)?);
        }
        let parse_list = |key: &str, value: &str| -> Result<Vec<f64>> {
            value
                .split(',')
                .map(|t| parse_num(key, t.trim()))
                .collect()
        };
        let p_list = take("p_list");
        let alpha_list = take("alpha_list");
        match (p_list, alpha_list) {
            (Some(_), Some(_)) => {
                return Err(Error::Config("give `p_list` or `alpha_list`, not both".into()))
            }
            (Some(v), None) => config.p_grid = parse_list("p_list", &v)?,
            (None, Some(v)) => {
                let scale = (n as f64).ln() / n as f64;
                config.p_grid = parse_list("alpha_list", &v)?
                    .into_iter()
                    .map(|alpha| alpha * scale)
                    .collect();
            }
            (None, None) => {}
        }
        if let Some(v) = take("trials") {
            config.trials = parse_num("trials", &v)? as u32;
        }
        if let Some(v) = take("seed") {
            config.seed = v
                .parse::<u64>()
                .map_err(|_| Error::Config(format!("bad seed `{v}`")))?;
        }
        config.out = take("out");
        if let Some(v) = take("share_seeds") {
            config.share_seeds = v
                .parse::<bool>()
                .map_err(|_| Error::Config(format!("bad share_seeds `{v}`")))?;
        }
        if let Some(v) = take("node_budget") {
            config.node_budget = parse_num("node_budget", &v)? as u64;
        }
        if let Some(key) = fields.keys().next() {
            return Err(Error::Config(format!("unknown key `{key}`")));
        }
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::Config(format!("n must be at least 3, got {}", self.n)));
        }
        if self.trials < 1 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        for &p in &self.p_grid {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Config(format!("probability {p} outside [0,1]")));
            }
        }
        if self.p_grid.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Config("probability grid must be ascending".into()));
        }
        Ok(())
    }

    fn trial_seed(&self, cell: usize, trial: u32) -> u64 {
        if self.share_seeds {
            seeding::derive(self.seed, trial as u64)
        } else {
            seeding::derive2(self.seed, cell as u64, trial as u64)
        }
    }
}

/// Per-cell outcome of an experiment.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CellResult {
    pub p: f64,
    pub trials: u32,
    /// Trials whose search exceeded the node budget; excluded from the
    /// estimate.
    pub infeasible: u32,
    pub successes: u32,
    /// `successes / (trials - infeasible)`.
    pub estimate: f64,
    /// Binomial standard error of the estimate.
    pub std_error: f64,
}

/// A persisted experiment outcome. The `payload_sha256` covers the config and
/// cells only; wall-clock timings live outside the hashed payload so repeat
/// runs produce identical payloads.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub cells: Vec<CellResult>,
    pub payload_sha256: String,
    pub cell_wall_ms: Vec<f64>,
}

#[derive(Serialize)]
struct Payload<'a> {
    config: &'a ExperimentConfig,
    cells: &'a [CellResult],
}

impl ExperimentResult {
    fn assemble(config: ExperimentConfig, cells: Vec<CellResult>, wall_ms: Vec<f64>) -> ExperimentResult {
        let payload = serde_json::to_string(&Payload { config: &config, cells: &cells })
            .expect("payload serialization cannot fail");
        let digest = Sha256::digest(payload.as_bytes());
        let payload_sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        ExperimentResult { config, cells, payload_sha256, cell_wall_ms: wall_ms }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serialization cannot fail")
    }

    /// CSV with one row per cell: `p,trials,successes,estimate,stderr`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,trials,successes,estimate,stderr\n");
        for cell in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                cell.p, cell.trials, cell.successes, cell.estimate, cell.std_error
            ));
        }
        out
    }
}

fn finish_cell(p: f64, trials: u32, outcomes: Vec<Option<bool>>) -> CellResult {
    let infeasible = outcomes.iter().filter(|o| o.is_none()).count() as u32;
    let successes = outcomes.iter().filter(|o| **o == Some(true)).count() as u32;
    let completed = trials - infeasible;
    let estimate = if completed == 0 { 0.0 } else { successes as f64 / completed as f64 };
    let std_error = if completed == 0 {
        0.0
    } else {
        (estimate * (1.0 - estimate) / completed as f64).sqrt()
    };
    CellResult { p, trials, infeasible, successes, estimate, std_error }
}

/// Estimate of the survival probability of one class, against its closed
/// form `(1-p)^{‖d1 φ‖}`.
#[derive(Clone, Debug, Serialize)]
pub struct SurvivalEstimate {
    pub p: f64,
    pub d1_norm: u64,
    pub trials: u64,
    pub successes: u64,
    pub empirical: f64,
    pub closed_form: f64,
    /// Binomial standard error at the closed-form rate.
    pub std_error: f64,
}

/// Sample `Y(n,p)` repeatedly and count the trials in which `[φ]` survives to
/// `H^1(Y;G)`, i.e. no triangle of `Y` falls in the coboundary support
/// `B(φ)`. The closed form is `(1-p)^{‖d1 φ‖}`.
pub fn estimate_cocycle_probability(
    phi: &Cochain1,
    p: f64,
    trials: u64,
    seed: u64,
) -> SurvivalEstimate {
    let support: HashSet<[u32; 3]> = phi.coboundary_support().into_iter().collect();
    let n = phi.n();
    let successes: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let y = sample_complex(n, p, seeding::derive(seed, t)).expect("n >= 3");
            let survives = !y.triangles().iter().any(|t| support.contains(t));
            u64::from(survives)
        })
        .sum();
    let closed_form = (1.0 - p).powi(support.len() as i32);
    SurvivalEstimate {
        p,
        d1_norm: support.len() as u64,
        trials,
        successes,
        empirical: if trials == 0 { 0.0 } else { successes as f64 / trials as f64 },
        closed_form,
        std_error: if trials == 0 {
            0.0
        } else {
            (closed_form * (1.0 - closed_form) / trials as f64).sqrt()
        },
    }
}

/// For each `p` in the grid, estimate `Pr[H^1(Y(n,p); G) != {[1]}]` over
/// `trials` independent samples. Cells whose search exceeds the node budget
/// record the trial as infeasible rather than failing the sweep.
pub fn threshold_sweep(config: &ExperimentConfig, group: &Arc<FiniteGroup>) -> Result<ExperimentResult> {
    config.validate()?;
    if config.p_grid.is_empty() {
        return Err(Error::Config("threshold sweep needs a probability grid".into()));
    }
    let mut cells = Vec::new();
    let mut wall = Vec::new();
    for (cell, &p) in config.p_grid.iter().enumerate() {
        let start = Instant::now();
        let outcomes: Vec<Option<bool>> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let y = sample_complex(config.n, p, config.trial_seed(cell, trial))
                    .expect("n >= 3");
                match has_nontrivial_class_budgeted(&y, group, config.node_budget) {
                    Ok(report) => Some(!report.trivial),
                    Err(Error::BudgetExhausted(_)) => None,
                    Err(_) => unreachable!("detection only fails by budget"),
                }
            })
            .collect();
        cells.push(finish_cell(p, config.trials, outcomes));
        wall.push(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(ExperimentResult::assemble(config.clone(), cells, wall))
}

/// Sample `Y(n,p)` at the theorem parameterization and report the fraction of
/// trials in which `pi_1(Y)` has a nontrivial normal subgroup of index at
/// most `max_index`.
///
/// When the config gives `c`, the defaults are `p = (6+7c) log n / n` (which
/// must not exceed 1) and `max_index = floor(n^c)`; an explicit `p_grid`
/// and/or `max_index` override them.
pub fn quotient_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let max_index = match (config.max_index, config.c) {
        (Some(m), _) => m,
        (None, Some(c)) => (config.n as f64).powf(c).floor() as u32,
        (None, None) => {
            return Err(Error::Config("quotient experiment needs `max_index` or `c`".into()))
        }
    };
    let grid: Vec<f64> = if config.p_grid.is_empty() {
        let c = config
            .c
            .ok_or_else(|| Error::Config("quotient experiment needs `p_list` or `c`".into()))?;
        let p = (6.0 + 7.0 * c) * (config.n as f64).ln() / config.n as f64;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Config(format!(
                "derived p = (6+7c) log n / n = {p:.4} falls outside [0,1]; give an explicit p_list"
            )));
        }
        vec![p]
    } else {
        config.p_grid.clone()
    };
    let mut cells = Vec::new();
    let mut wall = Vec::new();
    for (cell, &p) in grid.iter().enumerate() {
        let start = Instant::now();
        let outcomes: Vec<Option<bool>> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let y = sample_complex(config.n, p, config.trial_seed(cell, trial))
                    .expect("n >= 3");
                match has_small_quotient_budgeted(&y, max_index, config.node_budget) {
                    Ok(found) => Some(found.is_some()),
                    Err(Error::BudgetExhausted(_)) => None,
                    Err(err) => panic!("catalog walk failed: {err}"),
                }
            })
            .collect();
        cells.push(finish_cell(p, config.trials, outcomes));
        wall.push(start.elapsed().as_secs_f64() * 1e3);
    }
    let mut echoed = config.clone();
    echoed.max_index = Some(max_index);
    echoed.p_grid = grid;
    Ok(ExperimentResult::assemble(echoed, cells, wall))
}

/// The two union-bound evaluations at `p = (6+7c) log n / n`.
#[derive(Clone, Debug, Serialize)]
pub struct UnionBound {
    pub n: u32,
    pub c: f64,
    pub k_max: u32,
    pub p: f64,
    pub group_order: f64,
    /// `sum_{k=1..k_max} n^(-4ck/3)`, the fully simplified geometric series.
    pub simplified_sum: f64,
    /// `sum_{k=1..k_max} C(C(n,2), k) |G|^k (1-p)^{kn/3}`, the chain before
    /// the `n^{2k} n^{ck}` relaxation.
    pub binomial_sum: f64,
    /// The per-term exponent `2 + c - (6+7c)/3` before simplification; equal
    /// to `-4c/3`.
    pub per_term_exponent: f64,
}

/// Evaluate the union bound diagnostics. `group_order` defaults to `n^c`,
/// matching the `|G| <= n^c` step of the bound. `c = 0` is allowed and makes
/// every simplified term equal 1 (the bound degenerates there); negative `c`
/// is rejected.
pub fn union_bound_value(
    n: u32,
    c: f64,
    k_max: u32,
    group_order: Option<f64>,
) -> Result<UnionBound> {
    if n < 2 {
        return Err(Error::Config(format!("n must be at least 2, got {n}")));
    }
    if !c.is_finite() || c < 0.0 {
        return Err(Error::Config(format!("c must be nonnegative, got {c}")));
    }
    if k_max < 1 {
        return Err(Error::Config("k_max must be at least 1".into()));
    }
    let ln_n = (n as f64).ln();
    let p = (6.0 + 7.0 * c) * ln_n / n as f64;
    let group_order = group_order.unwrap_or_else(|| (n as f64).powf(c));

    let simplified_sum: f64 = (1..=k_max)
        .map(|k| (-(4.0 * c / 3.0) * k as f64 * ln_n).exp())
        .sum();

    let binomial_sum = if p >= 1.0 {
        // The complex is surely complete: every class dies, each term is 0.
        0.0
    } else {
        let m = crate::complex::pair_count(n) as f64;
        let ln_g = group_order.ln();
        let ln_survival = (1.0 - p).ln();
        let mut ln_binom = 0.0f64;
        let mut sum = 0.0f64;
        for k in 1..=k_max.min(crate::complex::pair_count(n) as u32) {
            let kf = k as f64;
            ln_binom += ((m - kf + 1.0) / kf).ln();
            sum += (ln_binom + kf * ln_g + kf * n as f64 / 3.0 * ln_survival).exp();
        }
        sum
    };

    Ok(UnionBound {
        n,
        c,
        k_max,
        p,
        group_order,
        simplified_sum,
        binomial_sum,
        per_term_exponent: 2.0 + c - (6.0 + 7.0 * c) / 3.0,
    })
}

#[cfg(test)]
#[path = "experiments_tests.rs"]
mod tests;
